#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"
#include "teg/teg.hpp"

namespace fs = std::filesystem;
using teg::cli::parse_delta_t;
using teg::cli::parse_dt_grid;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = teg::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliFiles : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir = fs::temp_directory_path() /
              ("teg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string path(const std::string& name) const { return (dir / name).string(); }

    std::string write(const std::string& name, const std::string& content) const
    {
        std::ofstream(dir / name, std::ios::binary) << content;
        return path(name);
    }

    std::string write_json(const std::string& name, const teg::EdgeLabelledTeg& g) const
    {
        return write(name, teg::to_json(g).dump());
    }

    fs::path dir;
};

}  // namespace

TEST(CliValues, DeltaTSuffixes)
{
    EXPECT_TRUE(parse_delta_t("inf").is_infinite());
    EXPECT_EQ(parse_delta_t("90").value(), 90.0);
    EXPECT_EQ(parse_delta_t("90s").value(), 90.0);
    EXPECT_EQ(parse_delta_t("2m").value(), 120.0);
    EXPECT_EQ(parse_delta_t("1h").value(), 3600.0);
    EXPECT_EQ(parse_delta_t("1.5d").value(), 129600.0);
    EXPECT_THROW(parse_delta_t("0"), teg::cli::UsageError);
    EXPECT_THROW(parse_delta_t("-3h"), teg::cli::UsageError);
    EXPECT_THROW(parse_delta_t("h"), teg::cli::UsageError);
    EXPECT_THROW(parse_delta_t("3x"), teg::cli::UsageError);
}

TEST(CliValues, DtGrids)
{
    const auto list = parse_dt_grid("60,1h,inf");
    ASSERT_EQ(list.size(), 3u);
    EXPECT_EQ(list[1].value(), 3600.0);
    EXPECT_TRUE(list[2].is_infinite());

    const auto lin = parse_dt_grid("lin:1:5:5");
    ASSERT_EQ(lin.size(), 5u);
    for (int k = 0; k < 5; ++k) EXPECT_DOUBLE_EQ(lin[k].value(), 1.0 + k);

    const auto log = parse_dt_grid("log:60:864000:50");
    ASSERT_EQ(log.size(), 50u);
    EXPECT_EQ(log.front().value(), 60.0);
    EXPECT_EQ(log.back().value(), 864000.0);
    EXPECT_NEAR(log[1].value() / log[0].value(), std::pow(14400.0, 1.0 / 49.0), 1e-12);

    EXPECT_THROW(parse_dt_grid("3,2"), teg::cli::UsageError);
    EXPECT_THROW(parse_dt_grid("lin:1:5"), teg::cli::UsageError);
    EXPECT_THROW(parse_dt_grid("log:1:5:0"), teg::cli::UsageError);
}

TEST(Cli, UsageErrorsExitOne)
{
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"build"}).code, 1);
    EXPECT_EQ(run({"generate", "--no-such-flag"}).code, 1);
    EXPECT_EQ(run({"generate", "--iet", "weird:1"}).code, 1);
    EXPECT_EQ(run({"build", "-i", "x", "--dt", "-1"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliFiles, InputErrorsExitTwo)
{
    const auto missing = run({"build", "-i", path("absent.txt")});
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("cannot open"), std::string::npos);

    const auto bad = run({"build", "-i", write("bad.txt", "1 2 3\n1 2 x\n")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("line 2"), std::string::npos);

    EXPECT_EQ(run({"validate", "-i", write("bad.json", "{ not json")}).code, 2);
    EXPECT_EQ(run({"reconstruct", "-i", write("tri.json", R"({"vertex_count":2,"edges":[{"i":1,"j":0,"tau":1,"motif":"ABAB"}]})")})
                  .code,
              2);
    EXPECT_EQ(run({"build", "-i", write("ties.txt", "1 2 1\n3 4 1\n"), "--strict-ties"}).code, 2);
}

TEST_F(CliFiles, ValidateAndReconstructReportViolations)
{
    const auto good = run({"validate", "-i", write_json("good.json", fixture::repaired_c4())});
    EXPECT_EQ(good.code, 0);
    EXPECT_NE(good.out.find("consistent"), std::string::npos);

    const std::pair<std::string, teg::EdgeLabelledTeg> cases[] = {
        {"C1", fixture::breaks_c1()}, {"C2", fixture::breaks_c2()},
        {"C3", fixture::breaks_c3()}, {"C4", fixture::breaks_c4()}};
    for (const auto& [name, g] : cases) {
        const auto file = write_json(name + ".json", g);
        const auto v = run({"validate", "-i", file});
        EXPECT_EQ(v.code, 3) << name;
        EXPECT_NE(v.out.find(name), std::string::npos) << v.out;
        const auto r = run({"reconstruct", "-i", file, "--check"});
        EXPECT_EQ(r.code, 3) << name;
        EXPECT_NE(r.err.find(name), std::string::npos) << r.err;
    }
}

TEST_F(CliFiles, BuildThenReconstructMatchesInMemory)
{
    const auto net = teg::generate_random({15, 300, teg::IetSampler::power_law(0.2), 8});
    std::ostringstream events;
    teg::write_events(events, net);
    const auto input = write("net.txt", events.str());

    for (const std::string format : {"json", "text"}) {
        const auto teg_file = path("net." + format);
        ASSERT_EQ(run({"build", "-i", input, "--dt", "inf", "--format", format, "-o", teg_file}).code, 0);
        EXPECT_TRUE(fs::exists(teg_file + ".manifest.json"));
        const auto out = path("back_" + format + ".txt");
        const auto r = run({"reconstruct", "-i", teg_file, "--check", "-o", out});
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_NE(r.err.find("check passed"), std::string::npos);

        std::ostringstream expected;
        teg::write_events(expected, teg::reconstruct(teg::strip_events(teg::build_teg(net, teg::DeltaT::infinite()))));
        EXPECT_EQ(slurp(out), expected.str());
    }
}

TEST_F(CliFiles, EndToEndLayout)
{
    const auto file = write("two.txt", "1 2 0\n1 2 5\n3 4 1\n4 3 2\n");
    ASSERT_EQ(run({"build", "-i", file, "-o", path("two.json")}).code, 0);
    const auto common = run({"reconstruct", "-i", path("two.json")});
    EXPECT_EQ(common.out, "0 1 0\n2 3 0\n3 2 1\n0 1 5\n");
    const auto chained = run({"reconstruct", "-i", path("two.json"), "--layout", "end-to-end", "--gap", "2"});
    EXPECT_EQ(chained.out, "0 1 0\n0 1 5\n2 3 7\n3 2 8\n");
}

TEST_F(CliFiles, ManifestRecordsTheRun)
{
    ASSERT_EQ(run({"generate", "--nodes", "9", "--events", "40", "--seed", "5", "-o", path("g.txt")}).code, 0);
    const auto manifest = nlohmann::json::parse(slurp(path("g.txt.manifest.json")));
    EXPECT_EQ(manifest["subcommand"], "generate");
    EXPECT_EQ(manifest["seeds"][0], 5);
    EXPECT_EQ(manifest["options"]["nodes"], "9");
    EXPECT_EQ(manifest["options"]["iet"], "power:0.2");
    EXPECT_TRUE(manifest.contains("tool_version"));
    EXPECT_TRUE(manifest.contains("output_directory"));

    ASSERT_EQ(run({"motifs", "-i", path("g.txt"), "--dt", "1h", "-o", path("m.csv")}).code, 0);
    const auto m = nlohmann::json::parse(slurp(path("m.csv.manifest.json")));
    EXPECT_EQ(m["delta_t"], "3600");
    EXPECT_EQ(m["inputs"][0], path("g.txt"));
}

TEST_F(CliFiles, AnalysisSubcommandsProduceDocumentedColumns)
{
    ASSERT_EQ(run({"generate", "--nodes", "20", "--events", "400", "--seed", "2", "-o", path("g.txt")}).code, 0);
    const auto g = path("g.txt");

    const auto motifs = run({"motifs", "-i", g, "--dt", "0.5", "--per-component", "--shuffle-runs", "5", "--threads", "2"});
    ASSERT_EQ(motifs.code, 0) << motifs.err;
    EXPECT_EQ(motifs.out.substr(0, motifs.out.find('\n')),
              "scope,component,edges,ABAB,ABBA,ABAC,ABCA,ABBC,ABCB,entropy_bits");
    EXPECT_NE(motifs.out.find("\ncomponent,0,"), std::string::npos);
    EXPECT_NE(motifs.out.find("\nshuffled_mean,,5,"), std::string::npos);
    EXPECT_NE(motifs.out.find("\nshuffled_stderr,,5,"), std::string::npos);

    const auto sweep = run({"sweep", "-i", g, "--dt-grid", "lin:0.1:2:4"});
    ASSERT_EQ(sweep.code, 0) << sweep.err;
    EXPECT_EQ(std::count(sweep.out.begin(), sweep.out.end(), '\n'), 5);

    const auto iets = run({"iets", "-i", g, "--motif", "all", "--svg", path("iets.svg")});
    ASSERT_EQ(iets.code, 0) << iets.err;
    EXPECT_EQ(iets.out.rfind("motif,iet,ccdf\n", 0), 0u);
    EXPECT_TRUE(fs::exists(path("iets.svg")));
    EXPECT_TRUE(fs::exists(path("iets.svg.manifest.json")));

    EXPECT_EQ(run({"entropy", "-i", g, "--dt", "2", "--per-component"}).code, 0);
    EXPECT_EQ(run({"barcode", "-i", g, "--dt", "0.3", "--top", "10", "-o", path("b.svg")}).code, 0);
    EXPECT_NE(slurp(path("b.svg")).find("<svg"), std::string::npos);

    const auto comps = run({"components", "-i", g, "--dt", "0.3", "--top", "3"});
    ASSERT_EQ(comps.code, 0);
    const auto j = nlohmann::json::parse(comps.out);
    EXPECT_EQ(j["components"].size(), 3u);
    EXPECT_EQ(j["event_count"], 400);

    const auto agg = nlohmann::json::parse(run({"aggregate", "-i", g}).out);
    EXPECT_EQ(agg["nodes"], 20);
    EXPECT_EQ(run({"aggregate", "-i", g, "--dt", "0.3", "--component", "100000"}).code, 1);
    EXPECT_EQ(run({"iets", "-i", g, "--motif", "QQQQ"}).code, 1);
}

TEST_F(CliFiles, SeededSubcommandsAreByteIdentical)
{
    auto twice = [&](std::vector<std::string> args, const std::string& name) {
        auto a = args;
        a.insert(a.end(), {"-o", path(name + "1")});
        auto b = args;
        b.insert(b.end(), {"-o", path(name + "2")});
        EXPECT_EQ(run(a).code, 0);
        EXPECT_EQ(run(b).code, 0);
        EXPECT_EQ(slurp(path(name + "1")), slurp(path(name + "2"))) << name;
        EXPECT_FALSE(slurp(path(name + "1")).empty()) << name;
    };
    twice({"generate", "--nodes", "30", "--events", "500", "--seed", "11"}, "gen");
    twice({"shuffle", "-i", path("gen1"), "--seed", "4"}, "shuf");
    twice({"motifs", "-i", path("gen1"), "--dt", "0.5", "--shuffle-runs", "6", "--seed", "2", "--threads", "3"}, "mot");
    twice({"sweep", "--dt-grid", "1,2,4", "--runs", "5", "--nodes", "30", "--events", "300", "--seed", "1"}, "sw");
}

TEST_F(CliFiles, TiesWarn)
{
    const auto r = run({"build", "-i", write("ties.txt", "1 2 1\n3 4 1\n")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}
