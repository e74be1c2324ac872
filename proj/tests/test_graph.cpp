#include "support/oracles.hpp"
#include "tonelab/error.hpp"
#include "tonelab/graph.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace tonelab;
using oracle::TestRng;

namespace {

std::vector<Vertex> sorted_neighbors(const Graph& g, Vertex v)
{
    auto row = g.neighbors(v);
    return {row.begin(), row.end()};
}

}  // namespace

TEST(Graph, EdgeListBuildsSortedRows)
{
    const std::vector<Edge> edges{{2, 0}, {0, 1}, {3, 1}};
    const Graph g = Graph::from_edges(4, edges);
    EXPECT_EQ(g.n(), 4);
    EXPECT_EQ(g.m(), 3);
    EXPECT_EQ(sorted_neighbors(g, 0), (std::vector<Vertex>{1, 2}));
    EXPECT_EQ(sorted_neighbors(g, 1), (std::vector<Vertex>{0, 3}));
    EXPECT_TRUE(g.has_edge(3, 1));
    EXPECT_FALSE(g.has_edge(2, 3));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}));
}

TEST(Graph, RejectsLoopsDuplicatesAndBadIds)
{
    const std::vector<Edge> loop{{1, 1}};
    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    const std::vector<Edge> out_of_range{{0, 3}};
    const std::vector<Edge> negative{{-1, 0}};
    EXPECT_THROW(Graph::from_edges(3, loop), FormatError);
    EXPECT_THROW(Graph::from_edges(3, dup), FormatError);
    EXPECT_THROW(Graph::from_edges(3, out_of_range), FormatError);
    EXPECT_THROW(Graph::from_edges(3, negative), FormatError);
}

TEST(Graph, AdjacencyRowsMustBeSymmetric)
{
    EXPECT_THROW(Graph::from_adjacency({{1}, {}}), FormatError);
    const Graph g = Graph::from_adjacency({{2, 1}, {0}, {0}});
    EXPECT_EQ(g, Graph::from_edges(3, std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(Graph, EmptyAndEdgeless)
{
    const Graph empty(0);
    EXPECT_EQ(empty.n(), 0);
    EXPECT_EQ(max_degree(empty), 0);
    EXPECT_TRUE(is_forest(empty));
    EXPECT_TRUE(components(empty).empty());
    const Graph edgeless(5);
    EXPECT_EQ(edgeless.m(), 0);
    EXPECT_EQ(components(edgeless).size(), 5u);
}

TEST(MultiGraph, DegreesCountLoopsTwice)
{
    const MultiGraph mg{3, {{0, 0}, {0, 1}, {0, 1}}};
    EXPECT_EQ(mg.degrees(), (std::vector<int>{4, 2, 0}));
    EXPECT_FALSE(mg.is_simple());
    EXPECT_THROW(mg.to_graph(), PreconditionViolated);
    const MultiGraph simple{3, {{0, 1}, {2, 1}}};
    EXPECT_TRUE(simple.is_simple());
    EXPECT_EQ(simple.to_graph().m(), 2);
}

TEST(Distances, PowerOfSixCycleSquared)
{
    const Graph c6 = oracle::cycle(6);
    const Graph sq = power_graph(c6, 2);
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(sq.degree(v), 4);
    EXPECT_FALSE(sq.has_edge(0, 3));
    EXPECT_TRUE(sq.has_edge(0, 2));
    EXPECT_EQ(power_graph(c6, 3), oracle::complete(6));
    EXPECT_EQ(power_graph(c6, 1), c6);
    EXPECT_THROW(power_graph(c6, 0), DomainError);
}

TEST(Distances, PowerGraphMatchesFloydWarshall)
{
    TestRng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.between(1, 30);
        const Graph g = oracle::random_graph(n, rng.between(2, 30) / 100.0, rng);
        const auto d = oracle::all_pairs_distances(g);
        const int i = rng.between(1, 4);
        const Graph p = power_graph(g, i);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) {
                    ASSERT_EQ(p.has_edge(u, v), d[u][v] <= i) << "trial " << trial;
                }
    }
}

TEST(Distances, TruncatedOracleMatchesFloydWarshall)
{
    TestRng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.between(1, 25);
        const Graph g = oracle::random_graph(n, 0.15, rng);
        const auto d = oracle::all_pairs_distances(g);
        const int radius = rng.between(1, 4);
        const DistanceOracle table = truncated_distances(g, radius);
        std::size_t pairs = 0;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                const auto got = table.distance(u, v);
                if (d[u][v] <= radius) {
                    ASSERT_TRUE(got.has_value());
                    EXPECT_EQ(*got, d[u][v]);
                    pairs += u < v;
                } else {
                    EXPECT_FALSE(got.has_value());
                }
            }
            const auto row = table.within(u);
            EXPECT_TRUE(std::is_sorted(row.begin(), row.end(),
                                       [](const Reach& a, const Reach& b) { return a.vertex < b.vertex; }));
        }
        EXPECT_EQ(table.pair_count(), pairs);
    }
    EXPECT_THROW(truncated_distances(Graph(3), 0), DomainError);
}

TEST(Distances, TruncatedBfsStopsAtRadius)
{
    const Graph p = oracle::path(6);
    TruncatedBfs bfs(p, 2);
    const auto reach = bfs.run(2);
    const std::vector<Reach> expected{{1, 1}, {3, 1}, {0, 2}, {4, 2}};
    EXPECT_EQ(std::vector<Reach>(reach.begin(), reach.end()), expected);
    // Reuse keeps no state from the previous run.
    const auto again = bfs.run(5);
    EXPECT_EQ(std::vector<Reach>(again.begin(), again.end()), (std::vector<Reach>{{4, 1}, {3, 2}}));
}

TEST(Distances, LayersAndShells)
{
    // Two stars joined through their centers by a path of 6 edges.
    std::vector<Edge> e;
    for (int leaf = 1; leaf <= 5; ++leaf) e.emplace_back(0, leaf);
    for (int leaf = 7; leaf <= 11; ++leaf) e.emplace_back(6, leaf);
    int prev = 0;
    for (int mid = 12; mid < 17; ++mid) {
        e.emplace_back(prev, mid);
        prev = mid;
    }
    e.emplace_back(prev, 6);
    const Graph g = Graph::from_edges(17, e);
    const std::vector<Vertex> zone{0, 6};
    const auto layers = distance_layers(g, zone, 3);
    ASSERT_EQ(layers.size(), 4u);
    EXPECT_EQ(layers[0], zone);
    EXPECT_EQ(layers[1], (std::vector<Vertex>{1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12, 16}));
    EXPECT_EQ(layers[2], (std::vector<Vertex>{13, 15}));
    EXPECT_EQ(layers[3], (std::vector<Vertex>{14}));
    EXPECT_EQ(neighborhood_shell(g, zone, 2), layers[2]);
    EXPECT_EQ(neighborhood_shell(g, zone, 4), std::vector<Vertex>{});
}

TEST(Distances, ShellsAgreeWithOracle)
{
    TestRng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.between(2, 30);
        const Graph g = oracle::random_graph(n, 0.1, rng);
        std::vector<Vertex> zone;
        for (int v = 0; v < n; ++v)
            if (rng.coin(0.15)) zone.push_back(v);
        const auto d = oracle::all_pairs_distances(g);
        for (int i = 1; i <= 3; ++i) {
            std::vector<Vertex> expected;
            for (int v = 0; v < n; ++v) {
                int best = oracle::kFar;
                for (Vertex z : zone) best = std::min(best, d[z][v]);
                if (best == i) expected.push_back(v);
            }
            EXPECT_EQ(neighborhood_shell(g, zone, i), expected);
        }
    }
}

TEST(Structure, ForestDetectionAndCycles)
{
    EXPECT_TRUE(is_forest(oracle::path(5)));
    EXPECT_TRUE(is_forest(oracle::star(4)));
    EXPECT_FALSE(is_forest(oracle::cycle(3)));
    EXPECT_TRUE(find_cycle(oracle::path(4)).empty());

    TestRng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::random_graph(rng.between(3, 20), 0.2, rng);
        const auto cyc = find_cycle(g);
        EXPECT_EQ(cyc.empty(), is_forest(g));
        if (cyc.empty()) continue;
        ASSERT_GE(cyc.size(), 3u);
        EXPECT_EQ(std::set<Vertex>(cyc.begin(), cyc.end()).size(), cyc.size());
        for (std::size_t i = 0; i < cyc.size(); ++i)
            EXPECT_TRUE(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    }
}

TEST(Structure, ComponentsOrderedByMinimum)
{
    const Graph g = Graph::from_edges(6, std::vector<Edge>{{4, 1}, {5, 3}, {3, 0}});
    EXPECT_EQ(components(g), (std::vector<std::vector<Vertex>>{{0, 3, 5}, {1, 4}, {2}}));
}

TEST(Structure, InducedSubgraphRenumbers)
{
    const Graph c5 = oracle::cycle(5);
    const std::vector<Vertex> keep{4, 0, 1};
    const auto sub = induced_subgraph(c5, keep);
    EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{0, 1, 4}));
    EXPECT_EQ(sub.from_parent, (std::vector<Vertex>{0, 1, -1, -1, 2}));
    EXPECT_EQ(sub.graph, Graph::from_edges(3, std::vector<Edge>{{0, 1}, {0, 2}}));
}
