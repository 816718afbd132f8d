#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "teg/consistency.hpp"
#include "teg/event_graph.hpp"
#include "teg/generators.hpp"
#include "teg/io.hpp"
#include "teg/reconstruct.hpp"

using teg::Condition;
using teg::DeltaT;
using teg::EdgeLabelledTeg;
using teg::Motif;
using teg::TemporalNetwork;

namespace {

std::set<Condition> conditions(const teg::ConsistencyReport& r)
{
    std::set<Condition> out;
    for (const auto& v : r.violations) out.insert(v.condition);
    return out;
}

TemporalNetwork connected_integer_network(std::mt19937_64& rng, std::size_t nodes, std::size_t events)
{
    while (true) {
        auto net = oracle::integer_network(rng, nodes, events);
        if (oracle::aggregate_connected(net)) return net;
    }
}

bool same_labels(const EdgeLabelledTeg& a, const EdgeLabelledTeg& b, double tol)
{
    if (a.vertex_count() != b.vertex_count() || a.edges().size() != b.edges().size()) return false;
    for (std::size_t k = 0; k < a.edges().size(); ++k) {
        const auto& x = a.edges()[k];
        const auto& y = b.edges()[k];
        if (x.i != y.i || x.j != y.j || x.motif != y.motif) return false;
        if (std::abs(x.tau - y.tau) > tol * std::max(1.0, std::abs(x.tau))) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Serialisation

TEST(EdgeLabelled, StripKeepsKeysAndLabels)
{
    const TemporalNetwork net({{1, 2, 0.5}, {2, 3, 1.25}, {3, 1, 4.0}});
    const auto g = teg::strip_events(teg::build_teg(net, DeltaT::infinite()));
    ASSERT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.tau(0, 1), 0.75);
    EXPECT_EQ(g.motif(0, 1), Motif::ABBC);
    EXPECT_EQ(g.motif(1, 2), Motif::ABBC);
    EXPECT_EQ(g.motif(0, 2), Motif::ABCA);
    EXPECT_FALSE(g.has_anchors());
    const auto anchored = teg::strip_events(teg::build_teg(net, DeltaT::infinite()), true);
    EXPECT_EQ(anchored.anchors().at(2), 4.0);
}

TEST(EdgeLabelled, LoaderValidates)
{
    EXPECT_THROW(EdgeLabelledTeg(2, {{1, 0, 1.0, Motif::ABAB}}), teg::InputError);
    EXPECT_THROW(EdgeLabelledTeg(2, {{0, 0, 1.0, Motif::ABAB}}), teg::InputError);
    EXPECT_THROW(EdgeLabelledTeg(2, {{0, 2, 1.0, Motif::ABAB}}), teg::InputError);
    EXPECT_THROW(EdgeLabelledTeg(2, {{0, 1, -1.0, Motif::ABAB}}), teg::InputError);
    EXPECT_THROW(EdgeLabelledTeg(2, {{0, 1, 1.0, Motif::ABAB}, {0, 1, 2.0, Motif::ABBA}}), teg::InputError);
    EXPECT_THROW(EdgeLabelledTeg(2, {}, {{5, 1.0}}), teg::InputError);
}

TEST(EdgeLabelled, JsonRoundTripIsBitExact)
{
    std::mt19937_64 rng(21);
    for (int round = 0; round < 30; ++round) {
        const auto net = oracle::real_network(rng, 8, 200, 1e-3 * (round + 1));
        const DeltaT dt = round % 2 ? DeltaT::infinite() : DeltaT::finite(0.01 * (round + 1));
        const auto g = teg::strip_events(teg::build_teg(net, dt), round % 3 == 0);
        const auto text = teg::to_json(g, dt).dump();
        const auto doc = nlohmann::json::parse(text);
        EXPECT_EQ(teg::edge_labelled_from_json(doc), g);
        EXPECT_EQ(teg::delta_t_from_json(doc), dt);
    }
}

TEST(EdgeLabelled, JsonErrors)
{
    using nlohmann::json;
    EXPECT_THROW(teg::edge_labelled_from_json(json::parse("[]")), teg::InputError);
    EXPECT_THROW(teg::edge_labelled_from_json(json::parse(R"({"edges": []})")), teg::InputError);
    EXPECT_THROW(teg::edge_labelled_from_json(json::parse(R"({"vertex_count": 2, "edges": [{"i": 0}]})")),
                 teg::InputError);
    EXPECT_THROW(teg::edge_labelled_from_json(
                     json::parse(R"({"vertex_count": 2, "edges": [{"i": 0, "j": 1, "tau": 1, "motif": "XYZW"}]})")),
                 teg::InputError);
    EXPECT_THROW(teg::edge_labelled_from_json(
                     json::parse(R"({"vertex_count": 2, "edges": [{"i": 1, "j": 0, "tau": 1, "motif": "ABAB"}]})")),
                 teg::InputError);
}

TEST(EdgeLabelled, TextRoundTripIsBitExact)
{
    std::mt19937_64 rng(22);
    for (int round = 0; round < 20; ++round) {
        const auto net = oracle::real_network(rng, 6, 150, 0.37);
        const DeltaT dt = DeltaT::finite(0.5 + round);
        const auto g = teg::strip_events(teg::build_teg(net, dt), round % 3 == 0);
        std::stringstream buf;
        teg::write_teg_text(buf, g, dt);
        const auto back = teg::read_teg_text(buf);
        EXPECT_EQ(back.graph, g);
        EXPECT_EQ(back.delta_t, dt);
    }
    std::istringstream missing("0 1 1 ABAB\n");
    EXPECT_THROW(teg::read_teg_text(missing), teg::InputError);
    std::istringstream bad("# events 2\n0 1 1 QQQQ\n");
    EXPECT_THROW(teg::read_teg_text(bad), teg::ParseError);
    std::istringstream bad_anchor("# events 2\n# anchor 0 soon\n0 1 1 ABAB\n");
    EXPECT_THROW(teg::read_teg_text(bad_anchor), teg::ParseError);
}

// ---------------------------------------------------------------------------
// Consistency

TEST(Consistency, EachFixtureBreaksExactlyItsCondition)
{
    EXPECT_EQ(conditions(teg::check_consistency(fixture::breaks_c1())), std::set{Condition::C1});
    EXPECT_EQ(conditions(teg::check_consistency(fixture::breaks_c2())), std::set{Condition::C2});
    EXPECT_EQ(conditions(teg::check_consistency(fixture::breaks_c3())), std::set{Condition::C3});
    EXPECT_EQ(conditions(teg::check_consistency(fixture::breaks_c4())), std::set{Condition::C4});
    EXPECT_TRUE(teg::check_consistency(fixture::repaired_c4()).consistent());
}

TEST(Consistency, ViolationsNameTheirEdges)
{
    const auto r = teg::check_consistency(fixture::breaks_c4());
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_NE(r.violations[0].detail.find("(0,2)"), std::string::npos);
    std::ostringstream text;
    text << r;
    EXPECT_NE(text.str().find("C4"), std::string::npos);
}

TEST(Consistency, DegreeAboveTwoIsReported)
{
    const EdgeLabelledTeg g(4, {{0, 1, 1.0, Motif::ABAC}, {0, 2, 2.0, Motif::ABBC}, {0, 3, 3.0, Motif::ABCB}});
    EXPECT_TRUE(teg::check_consistency(g).has(Condition::C2));
}

TEST(Consistency, GeneratedGraphsAreConsistent)
{
    std::mt19937_64 rng(31);
    for (int round = 0; round < 100; ++round) {
        const auto net = oracle::real_network(rng, 2 + round % 20, 1 + (round * 13) % 400);
        for (double dt : {0.3, 1.0, 3.0, std::numeric_limits<double>::infinity()}) {
            const auto r = teg::check_consistency(teg::strip_events(teg::build_teg(net, DeltaT::finite(dt))));
            EXPECT_TRUE(r.consistent()) << "round " << round << "\n" << r;
        }
    }
}

TEST(Consistency, PerturbedTauOnCycleIsCaught)
{
    std::mt19937_64 rng(32);
    int caught = 0;
    for (int round = 0; round < 50; ++round) {
        const auto net = connected_integer_network(rng, 5, 60);
        const auto g = teg::strip_events(teg::build_teg(net, DeltaT::infinite()));
        std::vector<teg::LabelledEdge> edges(g.edges().begin(), g.edges().end());
        // With 60 events on 5 nodes the graph has many cycles; every edge
        // lies on one unless it is a bridge.
        const std::size_t k = rng() % edges.size();
        edges[k].tau += 0.5;
        const EdgeLabelledTeg mutated(net.size(), edges);
        const auto r = teg::check_consistency(mutated);
        if (r.has(Condition::C1)) {
            ++caught;
            EXPECT_THROW(teg::reconstruct(mutated), teg::InconsistentGraphError);
        } else {
            // A bridge: the mutated labels are still realisable.
            const auto rebuilt = teg::strip_events(teg::build_teg(teg::reconstruct(mutated), DeltaT::infinite()));
            EXPECT_TRUE(same_labels(rebuilt, mutated, 1e-12));
        }
    }
    EXPECT_GT(caught, 40);
}

TEST(Consistency, AcceptedMutationsAreRealisable)
{
    // Relabel one motif at random. Whatever the checker and reconstruction
    // accept must rebuild into exactly the mutated graph.
    std::mt19937_64 rng(33);
    int rejected = 0;
    int unrealisable = 0;
    for (int round = 0; round < 300; ++round) {
        const auto net = oracle::integer_network(rng, 3 + round % 6, 40);
        const auto g = teg::strip_events(teg::build_teg(net, DeltaT::infinite()));
        std::vector<teg::LabelledEdge> edges(g.edges().begin(), g.edges().end());
        if (edges.empty()) continue;
        auto& e = edges[rng() % edges.size()];
        e.motif = teg::all_motifs[(teg::index_of(e.motif) + 1 + rng() % 5) % teg::motif_count];
        const EdgeLabelledTeg mutated(g.vertex_count(), edges);
        try {
            const auto rebuilt = teg::strip_events(teg::build_teg(teg::reconstruct(mutated), DeltaT::infinite()));
            EXPECT_TRUE(same_labels(rebuilt, mutated, 0.0)) << "round " << round;
        } catch (const teg::InconsistentGraphError& err) {
            ++rejected;
            // Passing C1-C4 yet failing to rebuild.
            if (teg::check_consistency(mutated).consistent()) {
                EXPECT_TRUE(err.report().has(Condition::realisation)) << err.what();
                ++unrealisable;
            }
        }
    }
    EXPECT_GT(rejected, 0);
    EXPECT_GT(unrealisable, 0);
}

// ---------------------------------------------------------------------------
// Reconstruction

TEST(Reconstruct, SingleVertex)
{
    const auto net = teg::reconstruct(EdgeLabelledTeg(1, {}));
    ASSERT_EQ(net.size(), 1u);
    EXPECT_EQ(net[0], (teg::Event{0, 1, 0.0}));
}

TEST(Reconstruct, ExactRoundTripOnIntegerTimes)
{
    std::mt19937_64 rng(41);
    for (int round = 0; round < 200; ++round) {
        const auto net = connected_integer_network(rng, 2 + round % 19, 1 + (round * 17) % 200);
        const auto back = teg::reconstruct(teg::strip_events(teg::build_teg(net, DeltaT::infinite())));
        EXPECT_EQ(back, teg::canonicalize(net)) << "round " << round;
    }
}

TEST(Reconstruct, RealTimesRoundTripWithinTolerance)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto net = teg::generate_random({10, 500, teg::IetSampler::power_law(0.2), seed});
        if (!oracle::aggregate_connected(net)) continue;
        const auto back = teg::reconstruct(teg::strip_events(teg::build_teg(net, DeltaT::infinite())));
        const auto c = teg::canonicalize(net);
        ASSERT_EQ(back.size(), c.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
            EXPECT_EQ(back[k].source, c[k].source);
            EXPECT_EQ(back[k].target, c[k].target);
            EXPECT_NEAR(back[k].time, c[k].time, 1e-9 * std::max(1.0, c[k].time));
        }
    }
}

TEST(Reconstruct, AnchorsRestoreAbsoluteTimes)
{
    std::mt19937_64 rng(42);
    const auto net = oracle::integer_network(rng, 6, 80);
    const auto teg = teg::build_teg(net, DeltaT::finite(15.0));
    const auto back = teg::reconstruct(teg::strip_events(teg, true));
    ASSERT_EQ(back.size(), net.size());
    for (std::size_t k = 0; k < net.size(); ++k) EXPECT_EQ(back[k].time, net[k].time);
    // Every component's node pattern matches up to relabelling.
    const auto rebuilt = teg::strip_events(teg::build_teg(back, DeltaT::finite(15.0)));
    EXPECT_EQ(rebuilt, teg::strip_events(teg));
}

TEST(Reconstruct, ContradictoryAnchorThrows)
{
    const EdgeLabelledTeg g(2, {{0, 1, 1.0, Motif::ABAC}}, {{0, 5.0}, {1, 7.0}});
    EXPECT_THROW(teg::reconstruct(g), teg::InputError);
    const EdgeLabelledTeg ok(2, {{0, 1, 1.0, Motif::ABAC}}, {{1, 7.0}});
    const auto net = teg::reconstruct(ok);
    EXPECT_EQ(net[0].time, 6.0);
    EXPECT_EQ(net[1].time, 7.0);
}

TEST(Reconstruct, ComponentLayouts)
{
    const EdgeLabelledTeg g(4, {{0, 1, 2.0, Motif::ABAB}, {2, 3, 3.0, Motif::ABBA}});
    const auto common = teg::reconstruct_events(g);
    EXPECT_EQ(common[0].time, 0.0);
    EXPECT_EQ(common[2].time, 0.0);
    EXPECT_EQ(common[3].time, 3.0);
    // Components get disjoint node labels.
    EXPECT_EQ(common[2].source, 2u);
    EXPECT_EQ(common[3], (teg::Event{3, 2, 3.0}));

    teg::ReconstructOptions opts;
    opts.layout = teg::ComponentLayout::end_to_end;
    opts.gap = 0.5;
    const auto chained = teg::reconstruct_events(g, opts);
    EXPECT_EQ(chained[1].time, 2.0);
    EXPECT_EQ(chained[2].time, 2.5);
    EXPECT_EQ(chained[3].time, 5.5);
}

TEST(Reconstruct, EarliestVertexNeedNotBeFirstIndex)
{
    // e1 precedes e0 only through the tau labels: e1 -> e2 <- e0 with
    // tau 5 and 1, so e1 is the earliest event of the component.
    const EdgeLabelledTeg g(3, {{0, 2, 1.0, Motif::ABAC}, {1, 2, 5.0, Motif::ABCB}});
    const auto ev = teg::reconstruct_events(g);
    EXPECT_EQ(ev[1].time, 0.0);
    EXPECT_EQ(ev[0].time, 4.0);
    EXPECT_EQ(ev[2].time, 5.0);
}

TEST(Reconstruct, InconsistentInputThrowsWithReport)
{
    try {
        teg::reconstruct(fixture::breaks_c4());
        FAIL() << "expected InconsistentGraphError";
    } catch (const teg::InconsistentGraphError& e) {
        EXPECT_TRUE(e.report().has(Condition::C4));
    }
    const auto fixed = teg::reconstruct(fixture::repaired_c4());
    EXPECT_EQ(fixed[0].source, fixed[2].source);
    EXPECT_EQ(fixed[0].target, fixed[2].target);
}

TEST(MaximalPath, SpansTheComponentDuration)
{
    std::mt19937_64 rng(43);
    for (int round = 0; round < 30; ++round) {
        const auto net = connected_integer_network(rng, 4, 50);
        const auto g = teg::strip_events(teg::build_teg(net, DeltaT::infinite()));
        const auto path = teg::maximal_path(g, 0);
        EXPECT_EQ(path.vertices.front(), 0u);
        EXPECT_EQ(path.vertices.back(), net.size() - 1);
        EXPECT_EQ(path.length, net[net.size() - 1].time - net[0].time);
    }
}
