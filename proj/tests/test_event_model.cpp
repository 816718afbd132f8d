#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "teg/event.hpp"

using teg::Event;
using teg::TemporalNetwork;

namespace {

teg::ParsedNetwork parse(const std::string& text, teg::ParseOptions opts = {})
{
    std::istringstream in(text);
    return teg::parse_events(in, opts);
}

}  // namespace

TEST(ParseEvents, WhitespaceCommentsAndBlankLines)
{
    const auto p = parse("# header\n1 2 10\n\n  3\t1   5.5\n# tail\n");
    ASSERT_EQ(p.network.size(), 2u);
    EXPECT_EQ(p.network[0], (Event{3, 1, 5.5}));
    EXPECT_EQ(p.network[1], (Event{1, 2, 10.0}));
    EXPECT_EQ(p.stats.lines, 2u);
    EXPECT_EQ(p.stats.comments, 2u);
}

TEST(ParseEvents, CommaDelimiterAndColumns)
{
    teg::ParseOptions opts;
    opts.delimiter = teg::Delimiter::comma;
    opts.time_column = 0;
    opts.source_column = 1;
    opts.target_column = 2;
    const auto p = parse("7,4,5,extra\n3,5,4\n", opts);
    ASSERT_EQ(p.network.size(), 2u);
    EXPECT_EQ(p.network[0], (Event{5, 4, 3.0}));
    EXPECT_EQ(p.network[1], (Event{4, 5, 7.0}));
}

TEST(ParseEvents, ErrorsCarryLineNumbers)
{
    try {
        parse("1 2 3\n# c\n1 x 4\n");
        FAIL() << "expected ParseError";
    } catch (const teg::ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse("1 2\n"), teg::ParseError);
    EXPECT_THROW(parse("1 2 -1\n"), teg::ParseError);
    EXPECT_THROW(parse("1 2 nan\n"), teg::ParseError);
    EXPECT_THROW(parse("1 2 inf\n"), teg::ParseError);
    EXPECT_THROW(parse("-1 2 3\n"), teg::ParseError);
}

TEST(ParseEvents, SelfLoopsRejectedOrSkipped)
{
    EXPECT_THROW(parse("1 1 3\n"), teg::ParseError);
    teg::ParseOptions opts;
    opts.skip_self_loops = true;
    const auto p = parse("1 1 3\n1 2 4\n", opts);
    EXPECT_EQ(p.network.size(), 1u);
    EXPECT_EQ(p.stats.skipped_self_loops, 1u);
}

TEST(ParseEvents, TiesKeepInputOrderOrAreRejected)
{
    const auto p = parse("5 6 2\n1 2 1\n3 4 1\n");
    EXPECT_EQ(p.stats.ties, 1u);
    EXPECT_EQ(p.network[0], (Event{1, 2, 1.0}));
    EXPECT_EQ(p.network[1], (Event{3, 4, 1.0}));
    EXPECT_EQ(p.network[2], (Event{5, 6, 2.0}));

    teg::ParseOptions strict;
    strict.tie_policy = teg::TiePolicy::reject;
    EXPECT_THROW(parse("1 2 1\n3 4 1\n", strict), teg::InputError);
}

TEST(ParseEvents, DuplicatesCountedAndKept)
{
    const auto p = parse("1 2 1\n1 2 1\n");
    EXPECT_EQ(p.stats.duplicates, 1u);
    EXPECT_EQ(p.network.size(), 2u);
}

TEST(ParseEvents, IntegerTimesExact)
{
    const auto p = parse("1 2 9007199254740992\n");
    EXPECT_EQ(p.network[0].time, 9007199254740992.0);
}

TEST(TemporalNetwork, RejectsInvalidEvents)
{
    EXPECT_THROW(TemporalNetwork({{1, 1, 0.0}}), teg::InputError);
    EXPECT_THROW(TemporalNetwork({{1, 2, -1.0}}), teg::InputError);
    EXPECT_THROW(TemporalNetwork({{1, 2, std::numeric_limits<double>::infinity()}}), teg::InputError);
}

TEST(TemporalNetwork, SortsByTimeAndListsNodes)
{
    const TemporalNetwork net({{9, 2, 3.0}, {1, 2, 1.0}});
    EXPECT_EQ(net[0].time, 1.0);
    ASSERT_EQ(net.nodes().size(), 3u);
    EXPECT_EQ(net.nodes()[0], 1u);
    EXPECT_EQ(net.nodes()[2], 9u);
}

TEST(Canonicalize, RelabelsByFirstAppearance)
{
    const TemporalNetwork net({{3, 1, 2.0}, {1, 3, 4.0}});
    const TemporalNetwork expected({{0, 1, 0.0}, {1, 0, 2.0}});
    EXPECT_EQ(teg::canonicalize(net), expected);
}

TEST(Canonicalize, EmptyThrows) { EXPECT_THROW(teg::canonicalize(TemporalNetwork{}), teg::InputError); }

TEST(Canonicalize, IdempotentWithZeroOriginAndContiguousLabels)
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        const auto net = oracle::real_network(rng, 2 + round % 15, 1 + round % 60, 3.0);
        const auto c = teg::canonicalize(net);
        EXPECT_EQ(teg::canonicalize(c), c);
        EXPECT_EQ(c[0].time, 0.0);
        const auto nodes = c.nodes();
        for (std::size_t k = 0; k < nodes.size(); ++k) EXPECT_EQ(nodes[k], k);
    }
}

TEST(WriteEvents, ParseWriteParseIsIdentity)
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 50; ++round) {
        const auto net = oracle::real_network(rng, 30, 300, 1e-3 + round);
        std::ostringstream out;
        teg::write_events(out, net);
        const auto back = parse(out.str());
        EXPECT_EQ(back.network, net);
        std::ostringstream again;
        teg::write_events(again, back.network);
        EXPECT_EQ(again.str(), out.str());
    }
}
