#pragma once

#include "tonelab/graph.hpp"
#include "tonelab/tone.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace tonelab {

/// Tuning constants of the dense-regime colorer. Integer fields are clamped
/// below at 1 and may be overridden after construction.
struct DenseParams {
    double b = 2.0;                   // 1 / (1 - p)
    std::int64_t k_ceiling = 1;       // ceil(3 ln n / ln b)
    int s = 1;                        // ceil((2 ln n + 2 ln ln b - 3 ln ln n) / ln b)
    int s0 = 1;                       // ceil((2 ln n + 2 ln ln b - 7 ln ln n) / ln b)
    int remainder_threshold = 1;      // ceil(n / ln^2 n)
    int restart_budget = 16;
};

/// Requires n >= 3 and 0 < p < 1 (DomainError otherwise).
DenseParams dense_params(int n, double p);

struct PassReport {
    int pass = 0;                     // 1-based
    std::vector<int> set_sizes;       // extracted independent sets, in order
    int remainder = 0;                // vertices left for the completion step
    int greedy_colors = 0;            // classes produced by the completion step
};

/// Randomized greedy search for a large independent set inside `candidates`
/// that meets every part of every constraint partition at most once. Each of
/// `restarts` rounds shuffles the candidates and adds vertices greedily,
/// stopping once `target` vertices are in (target <= 0 means no cap). The
/// largest set wins, ties going to the lexicographically smaller sorted set.
/// While the best set is smaller than `floor`, up to 3 * restarts extra
/// rounds are tried. Never empty when candidates is non-empty. Returned sorted.
std::vector<Vertex> find_respecting_independent_set(const Graph& g,
                                                    std::span<const Vertex> candidates,
                                                    std::span<const Partition> constraints,
                                                    int target, int restarts,
                                                    std::uint64_t seed, int floor = 0);

/// Whole vertex set as the candidates.
std::vector<Vertex> find_respecting_independent_set(const Graph& g,
                                                    std::span<const Partition> constraints,
                                                    int target, int restarts,
                                                    std::uint64_t seed, int floor = 0);

/// Colors the auxiliary graph on `remainder` whose edges are the edges of g
/// plus all pairs sharing a part of some constraint, first-fit in
/// smallest-last order. The color classes come back as a partition of
/// `remainder` (universe g.n()); each class is independent in g and respects
/// every constraint, and there are at most 1 + degeneracy classes.
Partition coloring_number_complete(const Graph& g, std::span<const Partition> constraints,
                                   std::span<const Vertex> remainder);

struct DenseResult {
    ToneColoring coloring{0, 1, 0};
    std::vector<Partition> partitions;
    std::vector<PassReport> passes;
    /// Diameter above 2 or disconnected. The coloring is still valid (two
    /// labels share at most one color, and never across an edge); the flag
    /// marks inputs outside the regime the construction targets.
    bool diameter_warning = false;
};

/// Builds t pairwise-respecting partitions into independent sets. Pass i
/// extracts sets respecting passes 1..i-1, capped at params.s vertices and
/// searched harder while below params.s0, until at most
/// params.remainder_threshold vertices remain, then finishes with
/// coloring_number_complete. Each pass gets a fresh block of colors.
DenseResult t_tone_color_dense(const Graph& g, int t, const DenseParams& params,
                               std::uint64_t seed);

/// |E(G[H])| <= n |H| / (k_ceiling ln n).
bool edge_density_diagnostic(const Graph& g, std::span<const Vertex> subset,
                             const DenseParams& params);

}  // namespace tonelab
