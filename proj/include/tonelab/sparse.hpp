#pragma once

#include "tonelab/graph.hpp"
#include "tonelab/tone.hpp"
#include "tonelab/tree_color.hpp"

#include <cstdint>
#include <variant>
#include <vector>

// Sparse-regime pipeline. Vertices of degree >= b0 form the core V0; the
// core and its first 2t-2 distance shells induce H, which is expected to be
// a forest. H is colored as a forest, labels are kept only on V0 and its
// first t-1 shells, and every other vertex is then labeled greedily in
// ascending id order without new colors.

namespace tonelab {

struct SparseParams {
    double b0 = 1.0;
    int t = 2;
    bool escalate = true;

    /// b0 = ln^{1/4} n.
    static SparseParams defaults(int n, int t = 2);
};

struct CoreDecomposition {
    std::vector<Vertex> core;                 // V0, sorted
    std::vector<std::vector<Vertex>> shells;  // N^1(V0) .. N^{2t-2}(V0)
    std::vector<Vertex> h_vertices;           // V_{2t-2}, sorted
    std::vector<Vertex> keep_set;             // V_{t-1}, sorted
};

CoreDecomposition core_decomposition(const Graph& g, const SparseParams& params);

struct StructuralDiagnostics {
    int p1_max_component = 0;   // largest component of G^{4t-3}[V0]
    double p1_threshold = 0.0;  // ln^{7/8} n
    bool p1_holds = true;       // no component of size >= threshold
    int p2_max_component = 0;   // largest component of H
    double p2_threshold = 0.0;  // ln^{(4t+9)/8} n
    bool p2_holds = true;
};

StructuralDiagnostics structural_diagnostics(const Graph& g, const CoreDecomposition& decomp,
                                             int t);

struct PipelineReport {
    int core_size = 0;
    std::vector<int> shell_sizes;
    bool h_is_forest = true;
    int max_h_component = 0;
    int base_palette = 0;         // kappa(max degree) for t = 2
    int palette = 0;              // palette of the returned coloring
    int escalations = 0;          // palette - base_palette
    bool whole_graph_fallback = false;
    int extended = 0;             // vertices labeled by the greedy extension
    std::int64_t max_forbidden = -1;  // -1 when the label space was too large to count
    StructuralDiagnostics diagnostics;
};

struct Extension {
    ToneColoring coloring{0, 1, 0};
    int extended = 0;
    std::int64_t max_forbidden = -1;
};

/// Labels every unlabeled vertex, ascending by id, with the least t-subset
/// of [1, palette] that shares fewer than d colors with each labeled vertex at
/// distance d <= t. Records the largest number of forbidden labels seen
/// (only when C(palette, t) <= 16384). Returns Stuck at the first vertex with
/// no admissible label.
std::variant<Extension, Stuck> greedy_extend(const Graph& g, const ToneColoring& partial, int t,
                                             int palette);

/// Colors H as a forest with the given palette, lifts the labels to g and
/// erases those outside the keep set. For t >= 3 the forest greedy is used
/// and may get stuck.
std::variant<ToneColoring, Stuck> kept_core_coloring(const Graph& g,
                                                     const CoreDecomposition& decomp, int t,
                                                     int palette);

/// Starting palette: kappa(max degree) for t = 2, max(kappa, 2t) for t >= 3,
/// and t for an edgeless graph.
int base_palette(const Graph& g, int t);

struct StructuralFailure {
    enum class Reason { NotAForest, Stuck };
    Reason reason = Reason::NotAForest;
    std::vector<Vertex> cycle;  // for NotAForest, in g's ids
    Vertex stuck_vertex = -1;   // for Stuck
    PipelineReport report;
};

struct SparseResult {
    ToneColoring coloring{0, 1, 0};
    PipelineReport report;
};

/// Runs the pipeline. Without escalation, a cyclic H or a stuck greedy is
/// returned as a StructuralFailure. With escalation, a stuck extension is
/// retried with one more color, and a cyclic H switches to the greedy over
/// the whole graph with the same +1 retries; report.escalations and
/// report.whole_graph_fallback say what happened.
std::variant<SparseResult, StructuralFailure> sparse_color(const Graph& g,
                                                           const SparseParams& params);

}  // namespace tonelab
