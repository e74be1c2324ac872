#include "tonelab/random.hpp"

#include "tonelab/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace tonelab {

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0) throw DomainError("Rng::below needs a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

double Rng::unit()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph gnp(int n, double p, std::uint64_t seed)
{
    if (n < 1) throw DomainError("gnp needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("gnp needs 0 <= p <= 1");
    std::vector<Edge> edges;
    if (p == 0.0) return Graph(n);
    if (p == 1.0) {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }
    // Batagelj-Brandes skipping over the pairs (v, w), w < v, in row order.
    Rng rng(seed);
    const double log_q = std::log1p(-p);
    std::int64_t v = 1, w = -1;
    while (v < n) {
        const double r = rng.unit();
        w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
        while (w >= v && v < n) {
            w -= v;
            ++v;
        }
        if (v < n) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
    }
    return Graph::from_edges(n, edges);
}

Graph tree_from_prufer(int n, std::span<const Vertex> sequence)
{
    if (n < 1) throw DomainError("a tree needs at least one vertex");
    if (n == 1) return Graph(1);
    if (static_cast<int>(sequence.size()) != n - 2)
        throw DomainError("Prüfer sequence must have length n - 2");
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (Vertex x : sequence) {
        if (x < 0 || x >= n) throw DomainError("Prüfer entry out of range");
        ++degree[x];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (Vertex x : sequence) {
        Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.push(x);
    }
    Vertex a = leaves.top();
    leaves.pop();
    Vertex b = leaves.top();
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

Graph random_tree(int n, std::uint64_t seed)
{
    if (n < 1) throw DomainError("a tree needs at least one vertex");
    if (n <= 2) return n == 1 ? Graph(1) : Graph::from_edges(2, std::vector<Edge>{{0, 1}});
    Rng rng(seed);
    std::vector<Vertex> seq(static_cast<std::size_t>(n) - 2);
    for (auto& x : seq) x = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    return tree_from_prufer(n, seq);
}

std::int64_t DegreeSequence::edge_count() const
{
    std::int64_t sum = 0;
    for (int d : degrees) {
        if (d < 0) throw DomainError("negative degree");
        sum += d;
    }
    if (sum % 2 != 0) throw OddDegreeSum("degree sum " + std::to_string(sum) + " is odd");
    return sum / 2;
}

MultiGraph HalfEdgePairing::collapse() const
{
    MultiGraph g;
    g.n = static_cast<int>(block_start.size());
    for (std::size_t a = 0; a < partner.size(); ++a) {
        const auto b = static_cast<std::size_t>(partner[a]);
        if (a < b) g.edges.emplace_back(owner[a], owner[b]);
    }
    return g;
}

HalfEdgePairing random_pairing(const DegreeSequence& d, std::uint64_t seed)
{
    const std::int64_t m = d.edge_count();
    HalfEdgePairing out;
    out.block_start.reserve(d.degrees.size());
    out.owner.reserve(static_cast<std::size_t>(2 * m));
    for (std::size_t v = 0; v < d.degrees.size(); ++v) {
        out.block_start.push_back(static_cast<std::int64_t>(out.owner.size()));
        out.owner.insert(out.owner.end(), static_cast<std::size_t>(d.degrees[v]),
                         static_cast<Vertex>(v));
    }
    // A uniform shuffle read off in consecutive pairs is a uniform perfect
    // matching.
    std::vector<std::int64_t> points(static_cast<std::size_t>(2 * m));
    std::iota(points.begin(), points.end(), 0);
    Rng rng(seed);
    rng.shuffle(points);
    out.partner.assign(points.size(), -1);
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
        out.partner[points[i]] = points[i + 1];
        out.partner[points[i + 1]] = points[i];
    }
    return out;
}

ConfigurationSample configuration_model(const DegreeSequence& d, std::uint64_t seed)
{
    ConfigurationSample out;
    out.graph = random_pairing(d, seed).collapse();
    out.simple = out.graph.is_simple();
    return out;
}

TypicalityVerdict is_typical(const DegreeSequence& d, double c, int n)
{
    TypicalityVerdict v;
    const double ln_n = std::log(static_cast<double>(n));
    std::int64_t sum = 0;
    int max_d = 0;
    for (int x : d.degrees) {
        sum += x;
        max_d = std::max(max_d, x);
    }
    const double b0 = std::pow(ln_n, 0.25);
    std::int64_t high = 0;
    for (int x : d.degrees)
        if (x >= b0) ++high;
    v.enough_edges = 0.5 * static_cast<double>(sum) >= c * n / 3.0;
    v.max_degree_in_range = std::pow(ln_n, 0.75) <= max_d && max_d <= ln_n;
    v.few_high_degree = static_cast<double>(high) <= n * ln_n * std::exp(-b0);
    v.typical = v.enough_edges && v.max_degree_in_range && v.few_high_degree;
    return v;
}

}  // namespace tonelab
