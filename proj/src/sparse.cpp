#include "tonelab/sparse.hpp"

#include "label_search.hpp"
#include "tonelab/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace tonelab {

SparseParams SparseParams::defaults(int n, int t)
{
    SparseParams params;
    params.b0 = std::pow(std::log(static_cast<double>(std::max(n, 2))), 0.25);
    params.t = t;
    return params;
}

CoreDecomposition core_decomposition(const Graph& g, const SparseParams& params)
{
    if (params.t < 2) throw DomainError("sparse pipeline needs t >= 2");
    CoreDecomposition d;
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) >= params.b0) d.core.push_back(v);
    const int depth = 2 * params.t - 2;
    auto layers = distance_layers(g, d.core, depth);
    d.h_vertices = d.core;
    d.keep_set = d.core;
    for (int i = 1; i <= depth; ++i) {
        d.h_vertices.insert(d.h_vertices.end(), layers[i].begin(), layers[i].end());
        if (i <= params.t - 1) d.keep_set.insert(d.keep_set.end(), layers[i].begin(), layers[i].end());
        d.shells.push_back(std::move(layers[i]));
    }
    std::sort(d.h_vertices.begin(), d.h_vertices.end());
    std::sort(d.keep_set.begin(), d.keep_set.end());
    return d;
}

StructuralDiagnostics structural_diagnostics(const Graph& g, const CoreDecomposition& decomp,
                                             int t)
{
    StructuralDiagnostics out;
    const double ln_n = std::log(static_cast<double>(std::max(g.n(), 2)));
    out.p1_threshold = std::pow(ln_n, 7.0 / 8.0);
    out.p2_threshold = std::pow(ln_n, (4.0 * t + 9.0) / 8.0);

    // Components of G^{4t-3} restricted to V0, by union-find over truncated BFS.
    std::vector<int> slot(static_cast<std::size_t>(g.n()), -1);
    const int core = static_cast<int>(decomp.core.size());
    for (int i = 0; i < core; ++i) slot[decomp.core[i]] = i;
    std::vector<int> root(static_cast<std::size_t>(core));
    std::iota(root.begin(), root.end(), 0);
    const auto find = [&root](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    TruncatedBfs bfs(g, 4 * t - 3);
    for (int i = 0; i < core; ++i)
        for (const Reach& r : bfs.run(decomp.core[i]))
            if (slot[r.vertex] >= 0) root[find(i)] = find(slot[r.vertex]);
    std::vector<int> size(static_cast<std::size_t>(core), 0);
    for (int i = 0; i < core; ++i) out.p1_max_component = std::max(out.p1_max_component, ++size[find(i)]);
    out.p1_holds = out.p1_max_component < out.p1_threshold;

    const auto h = induced_subgraph(g, decomp.h_vertices);
    for (const auto& comp : components(h.graph))
        out.p2_max_component = std::max(out.p2_max_component, static_cast<int>(comp.size()));
    out.p2_holds = out.p2_max_component <= out.p2_threshold;
    return out;
}

namespace {

std::int64_t binomial_capped(int n, int k, std::int64_t cap)
{
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

std::variant<Extension, Stuck> greedy_extend(const Graph& g, const ToneColoring& partial, int t,
                                             int palette)
{
    if (t < 1) throw DomainError("tone must be at least 1");
    if (palette < t) throw DomainError("palette smaller than the tone");
    constexpr std::int64_t kCountLimit = 16384;
    const std::int64_t label_space = binomial_capped(palette, t, kCountLimit);
    const bool count = label_space <= kCountLimit;

    Extension out;
    out.coloring = partial;
    out.coloring.set_palette(palette);
    if (count) out.max_forbidden = 0;
    TruncatedBfs bfs(g, t);
    detail::LabelSearch search(t, palette);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (out.coloring.has_label(v)) continue;
        search.clear();
        for (const Reach& r : bfs.run(v))
            if (const auto& l = out.coloring.label(r.vertex)) search.add(*l, r.distance - 1);
        if (count)
            out.max_forbidden = std::max(out.max_forbidden, label_space - search.count_allowed());
        auto label = search.least();
        if (!label) return Stuck{v};
        out.coloring.assign(v, std::move(*label));
        ++out.extended;
    }
    return out;
}

int base_palette(const Graph& g, int t)
{
    const int delta = max_degree(g);
    if (delta == 0) return t;
    const int k = kappa(delta);
    return t == 2 ? k : std::max(k, 2 * t);
}

std::variant<ToneColoring, Stuck> kept_core_coloring(const Graph& g,
                                                     const CoreDecomposition& decomp, int t,
                                                     int palette)
{
    const auto h = induced_subgraph(g, decomp.h_vertices);
    ToneColoring forest_coloring(0, t, palette);
    if (t == 2) {
        forest_coloring = color_forest_2tone(h.graph, palette);
    } else {
        auto r = greedy_t_tone_forest(h.graph, t, palette);
        if (auto* stuck = std::get_if<Stuck>(&r)) return Stuck{h.to_parent[stuck->vertex]};
        forest_coloring = std::move(std::get<ToneColoring>(r));
    }
    ToneColoring kept(g.n(), t, palette);
    for (Vertex v : decomp.keep_set) kept.assign(v, *forest_coloring.label(h.from_parent[v]));
    return kept;
}

std::variant<SparseResult, StructuralFailure> sparse_color(const Graph& g,
                                                           const SparseParams& params)
{
    const int t = params.t;
    const CoreDecomposition decomp = core_decomposition(g, params);
    PipelineReport report;
    report.core_size = static_cast<int>(decomp.core.size());
    for (const auto& shell : decomp.shells) report.shell_sizes.push_back(static_cast<int>(shell.size()));
    report.diagnostics = structural_diagnostics(g, decomp, t);
    report.max_h_component = report.diagnostics.p2_max_component;
    report.base_palette = base_palette(g, t);

    const auto h = induced_subgraph(g, decomp.h_vertices);
    report.h_is_forest = is_forest(h.graph);

    ToneColoring start(g.n(), t, report.base_palette);
    int palette = report.base_palette;
    if (!report.h_is_forest) {
        if (!params.escalate) {
            StructuralFailure failure;
            for (Vertex v : find_cycle(h.graph)) failure.cycle.push_back(h.to_parent[v]);
            failure.report = report;
            return failure;
        }
        report.whole_graph_fallback = true;
    } else {
        for (;;) {
            auto kept = kept_core_coloring(g, decomp, t, palette);
            if (auto* coloring = std::get_if<ToneColoring>(&kept)) {
                start = std::move(*coloring);
                break;
            }
            if (!params.escalate) {
                StructuralFailure failure;
                failure.reason = StructuralFailure::Reason::Stuck;
                failure.stuck_vertex = std::get<Stuck>(kept).vertex;
                failure.report = report;
                return failure;
            }
            ++palette;
        }
    }

    for (;;) {
        auto ext = greedy_extend(g, start, t, palette);
        if (auto* done = std::get_if<Extension>(&ext)) {
            report.palette = palette;
            report.escalations = palette - report.base_palette;
            report.extended = done->extended;
            report.max_forbidden = done->max_forbidden;
            if (auto bad = verify(g, done->coloring))
                throw std::logic_error("sparse pipeline produced an invalid coloring at (" +
                                       std::to_string(bad->u) + ", " + std::to_string(bad->v) + ")");
            return SparseResult{std::move(done->coloring), std::move(report)};
        }
        if (!params.escalate) {
            StructuralFailure failure;
            failure.reason = StructuralFailure::Reason::Stuck;
            failure.stuck_vertex = std::get<Stuck>(ext).vertex;
            failure.report = report;
            return failure;
        }
        ++palette;
    }
}

}  // namespace tonelab
