#pragma once

#include "tonelab/graph.hpp"
#include "tonelab/tone.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace tonelab {

/// Each component rooted at its smallest vertex; bfs_order lists roots in
/// increasing order, each followed level by level by its component.
struct RootedForest {
    std::vector<std::optional<Vertex>> parent;
    std::vector<Vertex> bfs_order;
};

/// Throws NotAForest.
RootedForest root_forest(const Graph& f);

/// Exact independence number of a forest (leaf-first greedy).
int forest_independence_number(const Graph& f);

/// 2-tone coloring of a forest with kappa(max degree) colors, which is
/// optimal. Walks each component in BFS order and gives every vertex the
/// lexicographically least pair that is disjoint from its parent's pair and
/// differs from its grandparent's and from every earlier sibling's pair.
/// Pairs avoiding the parent number (kappa-2)(kappa-3)/2 >= max degree while
/// at most max degree - 1 of them are taken, so the walk never gets stuck.
///
/// Throws NotAForest, or DomainError for an edgeless input.
ToneColoring color_forest_2tone(const Graph& f);

/// Same walk with an explicit palette, which must be at least kappa(max
/// degree) (or 2 when edgeless). Used when the forest sits inside a larger
/// graph whose maximum degree fixes the palette.
ToneColoring color_forest_2tone(const Graph& f, int palette);

/// The vertex the greedy could not label.
struct Stuck {
    Vertex vertex;

    friend bool operator==(const Stuck&, const Stuck&) = default;
};

using GreedyResult = std::variant<ToneColoring, Stuck>;

/// BFS-order greedy t-tone coloring of a forest over [1, k]: each vertex
/// takes the lexicographically least t-set sharing fewer than d colors with
/// every already-labeled vertex at distance d <= t. Throws NotAForest.
GreedyResult greedy_t_tone_forest(const Graph& f, int t, int k);

/// Least k >= max(t, ceil(t n / alpha)) for which the greedy succeeds, by
/// unit steps. The greedy is not known to be monotone in k, so every value is
/// tried; k = t n always succeeds.
int min_greedy_palette(const Graph& f, int t);

}  // namespace tonelab
