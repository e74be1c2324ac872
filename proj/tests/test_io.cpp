#include "support/oracles.hpp"
#include "tonelab/error.hpp"
#include "tonelab/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace tonelab;

namespace {

Graph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    return read_edge_list(in);
}

ToneColoring parse_coloring(const std::string& text)
{
    std::istringstream in(text);
    return read_coloring(in);
}

}  // namespace

TEST(EdgeList, ReadsCommentsAndBlankLines)
{
    const Graph g = parse_graph("# triangle plus isolated vertex\n4 3\n0 1\n\n1 2  # middle\n2 0\n");
    EXPECT_EQ(g.n(), 4);
    EXPECT_EQ(g.m(), 3);
    EXPECT_TRUE(g.has_edge(0, 2));
}

TEST(EdgeList, RoundTrip)
{
    oracle::TestRng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_graph(rng.between(0, 30), 0.2, rng);
        std::ostringstream out;
        write_edge_list(out, g);
        EXPECT_EQ(parse_graph(out.str()), g);
    }
}

TEST(EdgeList, Errors)
{
    EXPECT_THROW(parse_graph(""), FormatError);
    EXPECT_THROW(parse_graph("3 2\n0 1\n"), FormatError);
    EXPECT_THROW(parse_graph("3 1\n0 3\n"), FormatError);
    EXPECT_THROW(parse_graph("3 1\n1 1\n"), FormatError);
    EXPECT_THROW(parse_graph("3 2\n0 1\n1 0\n"), FormatError);
    EXPECT_THROW(parse_graph("3 1\n0 x\n"), FormatError);
    EXPECT_THROW(parse_graph("3 1\r\n0 1\r\n"), FormatError);
    EXPECT_THROW(parse_graph("3 1\n0 1 2\n"), FormatError);
    EXPECT_THROW(load_edge_list("/nonexistent/graph.txt"), FormatError);
}

TEST(EdgeList, MultigraphKeepsLoopsAndParallelEdges)
{
    const MultiGraph mg{2, {{0, 0}, {0, 1}, {0, 1}}};
    std::ostringstream out;
    write_edge_list(out, mg);
    EXPECT_EQ(out.str(), "2 3\n0 0\n0 1\n0 1\n");
}

TEST(Coloring, RoundTrip)
{
    ToneColoring c(3, 2, 5);
    c.assign(0, Label{1, 2});
    c.assign(1, Label{3, 4});
    c.assign(2, Label{1, 5});
    std::ostringstream out;
    write_coloring(out, c);
    EXPECT_EQ(out.str(), "2 5 3\n0: 1 2\n1: 3 4\n2: 1 5\n");
    const ToneColoring back = parse_coloring(out.str());
    for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(*back.label(v), *c.label(v));
    EXPECT_EQ(back.k(), 5);
}

TEST(Coloring, Errors)
{
    EXPECT_THROW(parse_coloring("2 5 2\n0: 1 2\n"), FormatError);          // missing vertex
    EXPECT_THROW(parse_coloring("2 5 2\n0: 1 2\n0: 3 4\n"), FormatError);  // twice
    EXPECT_THROW(parse_coloring("2 5 1\n0: 2 1\n"), FormatError);          // order
    EXPECT_THROW(parse_coloring("2 5 1\n0: 0 1\n"), FormatError);          // zero color
    EXPECT_THROW(parse_coloring("2 5 1\n0: 1\n"), FormatError);            // too few
    EXPECT_THROW(parse_coloring("2 5 1\n0 1 2\n"), FormatError);           // no colon
    EXPECT_THROW(parse_coloring("2 5 1\n1: 1 2\n"), FormatError);          // out of range
    ToneColoring partial(2, 1, 2);
    partial.assign(0, Label{1});
    std::ostringstream out;
    EXPECT_THROW(write_coloring(out, partial), PartialColoring);
}

TEST(Coloring, ColorsAboveKAreLeftToVerify)
{
    const ToneColoring c = parse_coloring("1 2 2\n0: 1\n1: 3\n");
    EXPECT_THROW(verify(oracle::complete(2), c), PaletteMismatch);
}

TEST(Degrees, ReadAndReject)
{
    std::istringstream in("3\n1\n# comment\n2\n");
    EXPECT_EQ(read_degrees(in).degrees, (std::vector<int>{3, 1, 2}));
    std::istringstream bad("3 4\n");
    EXPECT_THROW(read_degrees(bad), FormatError);
    std::istringstream negative("-1\n");
    EXPECT_THROW(read_degrees(negative), FormatError);
}
