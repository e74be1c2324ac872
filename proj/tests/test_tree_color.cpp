#include "support/oracles.hpp"
#include "tonelab/error.hpp"
#include "tonelab/exact.hpp"
#include "tonelab/tree_color.hpp"

#include <gtest/gtest.h>

using namespace tonelab;
using oracle::TestRng;

TEST(RootForest, ParentsAndOrder)
{
    // Components {0, 2, 4} and {1, 3}.
    const Graph f = Graph::from_edges(5, std::vector<Edge>{{2, 0}, {4, 2}, {3, 1}});
    const RootedForest r = root_forest(f);
    EXPECT_FALSE(r.parent[0].has_value());
    EXPECT_FALSE(r.parent[1].has_value());
    EXPECT_EQ(r.parent[2], 0);
    EXPECT_EQ(r.parent[4], 2);
    EXPECT_EQ(r.parent[3], 1);
    EXPECT_EQ(r.bfs_order, (std::vector<Vertex>{0, 2, 4, 1, 3}));
    EXPECT_THROW(root_forest(oracle::cycle(4)), NotAForest);
}

TEST(RootForest, EveryParentPrecedesItsChild)
{
    TestRng rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph f = oracle::random_forest(rng.between(1, 60), 0.1, rng);
        const RootedForest r = root_forest(f);
        std::vector<int> pos(f.n());
        for (int i = 0; i < f.n(); ++i) pos[r.bfs_order[i]] = i;
        for (Vertex v = 0; v < f.n(); ++v) {
            if (!r.parent[v]) continue;
            EXPECT_TRUE(f.has_edge(v, *r.parent[v]));
            EXPECT_LT(pos[*r.parent[v]], pos[v]);
        }
    }
}

TEST(ForestAlpha, MatchesSubsetEnumeration)
{
    TestRng rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph f = oracle::random_forest(rng.between(1, 18), 0.2, rng);
        EXPECT_EQ(forest_independence_number(f), oracle::brute_alpha(f));
    }
    EXPECT_THROW(forest_independence_number(oracle::cycle(3)), NotAForest);
}

TEST(TwoTone, SmallExamples)
{
    const ToneColoring k2 = color_forest_2tone(oracle::complete(2));
    EXPECT_EQ(k2.k(), 4);
    EXPECT_EQ(*k2.label(0), (Label{1, 2}));
    EXPECT_EQ(*k2.label(1), (Label{3, 4}));

    const Graph claw = oracle::star(3);
    const ToneColoring c = color_forest_2tone(claw);
    EXPECT_EQ(c.k(), 5);
    EXPECT_FALSE(verify(claw, c).has_value());

    const ToneColoring p3 = color_forest_2tone(oracle::path(3));
    EXPECT_EQ(p3.k(), 5);
    EXPECT_FALSE(verify(oracle::path(3), p3).has_value());

    EXPECT_THROW(color_forest_2tone(Graph(3)), DomainError);
    EXPECT_THROW(color_forest_2tone(oracle::cycle(5)), NotAForest);
    EXPECT_THROW(color_forest_2tone(oracle::star(3), 4), DomainError);
}

TEST(TwoTone, ValidWithKappaColorsOnRandomForests)
{
    TestRng rng(123);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph f = oracle::random_forest(rng.between(2, 80), 0.15, rng);
        if (f.m() == 0) continue;
        const ToneColoring c = color_forest_2tone(f);
        EXPECT_EQ(c.k(), kappa(max_degree(f)));
        ASSERT_FALSE(oracle::naive_verify(f, c).has_value()) << "trial " << trial;
    }
}

TEST(TwoTone, HighDegreeStars)
{
    for (int leaves : {6, 7, 12, 13, 50, 200}) {
        const Graph s = oracle::star(leaves);
        const ToneColoring c = color_forest_2tone(s);
        EXPECT_EQ(c.k(), kappa(leaves));
        EXPECT_FALSE(verify(s, c).has_value());
    }
}

TEST(TwoTone, LargerPaletteStillValid)
{
    const Graph f = oracle::path(9);
    const ToneColoring c = color_forest_2tone(f, 9);
    EXPECT_EQ(c.k(), 9);
    EXPECT_FALSE(verify(f, c).has_value());
}

TEST(TwoTone, MatchesExactTauOnSmallTrees)
{
    TestRng rng(808);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph f = oracle::random_forest(rng.between(2, 8), 0.0, rng);
        EXPECT_EQ(color_forest_2tone(f).k(), exact_tau(f, 2).tau) << "trial " << trial;
    }
}

TEST(GreedyForest, EdgeWithThreeColorsPerVertex)
{
    const auto r = greedy_t_tone_forest(oracle::complete(2), 3, 6);
    ASSERT_TRUE(std::holds_alternative<ToneColoring>(r));
    const auto& c = std::get<ToneColoring>(r);
    EXPECT_EQ(*c.label(0), (Label{1, 2, 3}));
    EXPECT_EQ(*c.label(1), (Label{4, 5, 6}));
    EXPECT_EQ(std::get<Stuck>(greedy_t_tone_forest(oracle::complete(2), 3, 5)), Stuck{1});
}

TEST(GreedyForest, SuccessIsAlwaysValidAndNeverBeatsExact)
{
    TestRng rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph f = oracle::random_forest(rng.between(2, 7), 0.0, rng);
        const int t = 3;
        const int k = min_greedy_palette(f, t);
        const auto r = greedy_t_tone_forest(f, t, k);
        ASSERT_TRUE(std::holds_alternative<ToneColoring>(r));
        EXPECT_FALSE(oracle::naive_verify(f, std::get<ToneColoring>(r)).has_value());
        EXPECT_GE(k, exact_tau(f, t).tau) << "trial " << trial;
    }
}

TEST(GreedyForest, MinimalPaletteSmallCases)
{
    EXPECT_EQ(min_greedy_palette(oracle::complete(2), 2), 4);
    EXPECT_EQ(min_greedy_palette(oracle::path(3), 2), 5);
    EXPECT_EQ(min_greedy_palette(Graph(4), 3), 3);
    EXPECT_THROW(min_greedy_palette(oracle::cycle(3), 3), NotAForest);
    EXPECT_THROW(greedy_t_tone_forest(oracle::path(3), 3, 2), DomainError);
}
