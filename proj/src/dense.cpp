#include "tonelab/dense.hpp"

#include "tonelab/error.hpp"
#include "tonelab/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace tonelab {

namespace {

constexpr int kFloorRetryFactor = 4;

// Ceiling that treats values within 1e-9 of an integer as that integer, so
// exact cases such as 3 log_2 1024 do not round up on a last-bit error.
double snapped_ceil(double x)
{
    const double r = std::round(x);
    return std::abs(x - r) < 1e-9 ? r : std::ceil(x);
}

int clamp_ceil(double x)
{
    const double c = snapped_ceil(x);
    if (!(c >= 1.0)) return 1;
    if (c > std::numeric_limits<int>::max()) return std::numeric_limits<int>::max();
    return static_cast<int>(c);
}

}  // namespace

DenseParams dense_params(int n, double p)
{
    if (n < 3) throw DomainError("dense parameters need n >= 3");
    if (!(p > 0.0 && p < 1.0)) throw DomainError("dense parameters need 0 < p < 1");
    DenseParams params;
    params.b = 1.0 / (1.0 - p);
    const double ln_b = -std::log1p(-p);
    const double ln_n = std::log(static_cast<double>(n));
    const double ln_ln_n = std::log(ln_n);
    const double ln_ln_b = std::log(ln_b);
    const double k = snapped_ceil(3.0 * ln_n / ln_b);
    params.k_ceiling = k >= 9.0e18 ? std::numeric_limits<std::int64_t>::max()
                                   : std::max<std::int64_t>(1, static_cast<std::int64_t>(k));
    params.s = clamp_ceil((2.0 * ln_n + 2.0 * ln_ln_b - 3.0 * ln_ln_n) / ln_b);
    params.s0 = clamp_ceil((2.0 * ln_n + 2.0 * ln_ln_b - 7.0 * ln_ln_n) / ln_b);
    params.s = static_cast<int>(std::min<std::int64_t>(params.s, params.k_ceiling));
    params.s0 = std::min(params.s0, params.s);
    params.remainder_threshold = std::min(n, clamp_ceil(n / (ln_n * ln_n)));
    return params;
}

std::vector<Vertex> find_respecting_independent_set(const Graph& g,
                                                    std::span<const Vertex> candidates,
                                                    std::span<const Partition> constraints,
                                                    int target, int restarts,
                                                    std::uint64_t seed, int floor)
{
    if (candidates.empty()) return {};
    Rng rng(seed);
    std::vector<Vertex> order(candidates.begin(), candidates.end());
    std::vector<char> blocked(static_cast<std::size_t>(g.n()), 0);
    std::vector<std::vector<char>> part_used(constraints.size());
    for (std::size_t i = 0; i < constraints.size(); ++i)
        part_used[i].assign(static_cast<std::size_t>(constraints[i].part_count()), 0);

    std::vector<Vertex> best, current;
    const int rounds = std::max(restarts, 1);
    for (int round = 0; round < kFloorRetryFactor * rounds; ++round) {
        if (round >= rounds && static_cast<int>(best.size()) >= floor) break;
        rng.shuffle(order);
        current.clear();
        for (Vertex v : order) {
            if (target > 0 && static_cast<int>(current.size()) >= target) break;
            if (blocked[v]) continue;
            bool clash = false;
            for (std::size_t i = 0; i < constraints.size() && !clash; ++i) {
                const int part = constraints[i].part_of(v);
                clash = part >= 0 && part_used[i][part];
            }
            if (clash) continue;
            current.push_back(v);
            blocked[v] = 1;
            for (Vertex w : g.neighbors(v)) blocked[w] = 1;
            for (std::size_t i = 0; i < constraints.size(); ++i)
                if (const int part = constraints[i].part_of(v); part >= 0) part_used[i][part] = 1;
        }
        for (Vertex v : current) {
            blocked[v] = 0;
            for (Vertex w : g.neighbors(v)) blocked[w] = 0;
            for (std::size_t i = 0; i < constraints.size(); ++i)
                if (const int part = constraints[i].part_of(v); part >= 0) part_used[i][part] = 0;
        }
        std::sort(current.begin(), current.end());
        if (current.size() > best.size() || (current.size() == best.size() && current < best))
            best = current;
        if (target > 0 && static_cast<int>(best.size()) >= target) break;
    }
    return best;
}

std::vector<Vertex> find_respecting_independent_set(const Graph& g,
                                                    std::span<const Partition> constraints,
                                                    int target, int restarts,
                                                    std::uint64_t seed, int floor)
{
    std::vector<Vertex> all(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
    return find_respecting_independent_set(g, all, constraints, target, restarts, seed, floor);
}

Partition coloring_number_complete(const Graph& g, std::span<const Partition> constraints,
                                   std::span<const Vertex> remainder)
{
    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    std::vector<Vertex> members(remainder.begin(), remainder.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const int r = static_cast<int>(members.size());
    for (int i = 0; i < r; ++i) local[members[i]] = i;

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        for (Vertex w : g.neighbors(members[i]))
            if (local[w] >= 0) adj[i].push_back(local[w]);
        for (const Partition& p : constraints) {
            const int part = p.part_of(members[i]);
            if (part < 0) continue;
            for (Vertex w : p.part(part))
                if (w != members[i] && local[w] >= 0) adj[i].push_back(local[w]);
        }
        std::sort(adj[i].begin(), adj[i].end());
        adj[i].erase(std::unique(adj[i].begin(), adj[i].end()), adj[i].end());
    }

    // Smallest-last order: repeatedly peel a minimum-degree vertex (ties by id).
    std::vector<int> degree(static_cast<std::size_t>(r));
    std::set<std::pair<int, int>> queue;
    for (int i = 0; i < r; ++i) {
        degree[i] = static_cast<int>(adj[i].size());
        queue.emplace(degree[i], i);
    }
    std::vector<int> peeled;
    std::vector<char> gone(static_cast<std::size_t>(r), 0);
    while (!queue.empty()) {
        const int v = queue.begin()->second;
        queue.erase(queue.begin());
        gone[v] = 1;
        peeled.push_back(v);
        for (int w : adj[v])
            if (!gone[w]) {
                queue.erase({degree[w], w});
                queue.emplace(--degree[w], w);
            }
    }

    std::vector<int> color(static_cast<std::size_t>(r), -1);
    std::vector<std::vector<Vertex>> classes;
    std::vector<char> used;
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        used.assign(classes.size() + 1, 0);
        for (int w : adj[*it])
            if (color[w] >= 0) used[color[w]] = 1;
        const int c = static_cast<int>(std::find(used.begin(), used.end(), 0) - used.begin());
        color[*it] = c;
        if (c == static_cast<int>(classes.size())) classes.emplace_back();
        classes[c].push_back(members[*it]);
    }
    return Partition(g.n(), std::move(classes));
}

namespace {

bool diameter_at_most_two(const Graph& g)
{
    TruncatedBfs bfs(g, 2);
    for (Vertex v = 0; v < g.n(); ++v)
        if (static_cast<int>(bfs.run(v).size()) != g.n() - 1) return false;
    return true;
}

}  // namespace

DenseResult t_tone_color_dense(const Graph& g, int t, const DenseParams& params,
                               std::uint64_t seed)
{
    if (t < 1) throw DomainError("tone must be at least 1");
    DenseResult result;
    result.diameter_warning = !diameter_at_most_two(g);

    std::vector<char> alive(static_cast<std::size_t>(g.n()));
    std::vector<Vertex> remaining;
    for (int pass = 1; pass <= t; ++pass) {
        PassReport report;
        report.pass = pass;
        std::vector<std::vector<Vertex>> parts;
        remaining.resize(static_cast<std::size_t>(g.n()));
        for (Vertex v = 0; v < g.n(); ++v) remaining[v] = v;
        std::fill(alive.begin(), alive.end(), 1);

        const std::uint64_t pass_seed = derive_seed(seed, static_cast<std::uint64_t>(pass));
        std::uint64_t round = 0;
        while (static_cast<int>(remaining.size()) > params.remainder_threshold) {
            auto set = find_respecting_independent_set(g, remaining, result.partitions, params.s,
                                                       params.restart_budget,
                                                       derive_seed(pass_seed, round++), params.s0);
            for (Vertex v : set) alive[v] = 0;
            std::erase_if(remaining, [&](Vertex v) { return !alive[v]; });
            report.set_sizes.push_back(static_cast<int>(set.size()));
            parts.push_back(std::move(set));
        }
        report.remainder = static_cast<int>(remaining.size());
        const Partition tail = coloring_number_complete(g, result.partitions, remaining);
        report.greedy_colors = tail.part_count();
        for (const auto& part : tail.parts()) parts.push_back(part);

        result.partitions.emplace_back(g.n(), std::move(parts));
        result.passes.push_back(std::move(report));
    }
    result.coloring = partitions_to_coloring(result.partitions, g);
    return result;
}

bool edge_density_diagnostic(const Graph& g, std::span<const Vertex> subset,
                             const DenseParams& params)
{
    if (subset.empty()) return true;
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : subset) in[v] = 1;
    std::int64_t twice_edges = 0;
    for (Vertex v : subset)
        for (Vertex w : g.neighbors(v)) twice_edges += in[w];
    const double ln_n = std::log(static_cast<double>(g.n()));
    const double limit = static_cast<double>(g.n()) * static_cast<double>(subset.size()) /
                         (static_cast<double>(params.k_ceiling) * ln_n);
    return static_cast<double>(twice_edges / 2) <= limit;
}

}  // namespace tonelab
