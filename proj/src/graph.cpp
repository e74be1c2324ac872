#include "tonelab/graph.hpp"

#include "tonelab/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tonelab {

Graph::Graph(int n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0)
{
    if (n < 0) throw DomainError("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    std::vector<std::vector<Vertex>> rows(static_cast<std::size_t>(std::max(n, 0)));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw FormatError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") out of range for n = " + std::to_string(n));
        if (u == v) throw FormatError("self-loop at vertex " + std::to_string(u));
        rows[u].push_back(v);
        rows[v].push_back(u);
    }
    for (std::size_t v = 0; v < rows.size(); ++v) {
        auto& row = rows[v];
        std::sort(row.begin(), row.end());
        auto dup = std::adjacent_find(row.begin(), row.end());
        if (dup != row.end())
            throw FormatError("duplicate edge (" + std::to_string(v) + ", " + std::to_string(*dup) +
                              ")");
    }
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        g.offsets_[v + 1] = g.offsets_[v] + static_cast<std::int64_t>(rows[v].size());
        g.targets_.insert(g.targets_.end(), rows[v].begin(), rows[v].end());
    }
    return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> rows)
{
    const int n = static_cast<int>(rows.size());
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        auto& row = rows[v];
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw FormatError("duplicate neighbor in row " + std::to_string(v));
        for (Vertex u : row)
            if (u < 0 || u >= n || u == v)
                throw FormatError("bad neighbor " + std::to_string(u) + " in row " +
                                  std::to_string(v));
        g.offsets_[v + 1] = g.offsets_[v] + static_cast<std::int64_t>(row.size());
        g.targets_.insert(g.targets_.end(), row.begin(), row.end());
    }
    for (int v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v))
            if (!g.has_edge(u, v))
                throw FormatError("asymmetric adjacency between " + std::to_string(v) + " and " +
                                  std::to_string(u));
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (degree(u) > degree(v)) std::swap(u, v);
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m()));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> MultiGraph::degrees() const
{
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool MultiGraph::is_simple() const
{
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) return false;
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    return std::adjacent_find(normalized.begin(), normalized.end()) == normalized.end();
}

Graph MultiGraph::to_graph() const
{
    if (!is_simple()) throw PreconditionViolated("multigraph has loops or parallel edges");
    return Graph::from_edges(n, edges);
}

TruncatedBfs::TruncatedBfs(const Graph& g, int radius)
    : g_(&g), radius_(radius), stamp_(static_cast<std::size_t>(g.n()), 0)
{
}

std::span<const Reach> TruncatedBfs::run(Vertex source)
{
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    out_.clear();
    stamp_[source] = epoch_;
    std::size_t head = 0;
    for (Vertex w : g_->neighbors(source)) {
        if (stamp_[w] == epoch_) continue;
        stamp_[w] = epoch_;
        out_.push_back({w, 1});
    }
    while (head < out_.size()) {
        const Reach cur = out_[head++];
        if (cur.distance >= radius_) break;
        for (Vertex w : g_->neighbors(cur.vertex)) {
            if (stamp_[w] == epoch_) continue;
            stamp_[w] = epoch_;
            out_.push_back({w, cur.distance + 1});
        }
    }
    return out_;
}

std::optional<int> DistanceOracle::distance(Vertex u, Vertex v) const
{
    auto row = within(u);
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const Reach& r, Vertex x) { return r.vertex < x; });
    if (it == row.end() || it->vertex != v) return std::nullopt;
    return it->distance;
}

int max_degree(const Graph& g)
{
    int best = 0;
    for (Vertex v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
    return best;
}

DistanceOracle truncated_distances(const Graph& g, int radius)
{
    if (radius < 1) throw DomainError("distance radius must be at least 1");
    DistanceOracle oracle;
    oracle.radius_ = radius;
    oracle.offsets_.assign(static_cast<std::size_t>(g.n()) + 1, 0);
    TruncatedBfs bfs(g, radius);
    std::vector<Reach> row;
    for (Vertex v = 0; v < g.n(); ++v) {
        auto reached = bfs.run(v);
        row.assign(reached.begin(), reached.end());
        std::sort(row.begin(), row.end(),
                  [](const Reach& a, const Reach& b) { return a.vertex < b.vertex; });
        oracle.entries_.insert(oracle.entries_.end(), row.begin(), row.end());
        oracle.offsets_[v + 1] = oracle.entries_.size();
    }
    return oracle;
}

Graph power_graph(const Graph& g, int i)
{
    if (i < 1) throw DomainError("power must be at least 1");
    if (i == 1) return g;
    std::vector<std::vector<Vertex>> rows(static_cast<std::size_t>(g.n()));
    TruncatedBfs bfs(g, i);
    for (Vertex v = 0; v < g.n(); ++v)
        for (const Reach& r : bfs.run(v)) rows[v].push_back(r.vertex);
    return Graph::from_adjacency(std::move(rows));
}

std::vector<std::vector<Vertex>> distance_layers(const Graph& g, std::span<const Vertex> sources,
                                                 int max_depth)
{
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::vector<std::vector<Vertex>> layers(static_cast<std::size_t>(std::max(max_depth, 0)) + 1);
    for (Vertex s : sources) {
        if (dist[s] == 0) continue;
        dist[s] = 0;
        layers[0].push_back(s);
    }
    for (int d = 1; d <= max_depth; ++d) {
        for (Vertex u : layers[d - 1])
            for (Vertex w : g.neighbors(u))
                if (dist[w] < 0) {
                    dist[w] = d;
                    layers[d].push_back(w);
                }
        if (layers[d].empty()) break;
    }
    for (auto& layer : layers) std::sort(layer.begin(), layer.end());
    return layers;
}

std::vector<Vertex> neighborhood_shell(const Graph& g, std::span<const Vertex> zone, int i)
{
    if (i < 1) throw DomainError("shell index must be at least 1");
    return distance_layers(g, zone, i)[i];
}

namespace {

int component_count(const Graph& g)
{
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<Vertex> stack;
    int count = 0;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        ++count;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

}  // namespace

bool is_forest(const Graph& g)
{
    return g.m() == static_cast<std::int64_t>(g.n() - component_count(g));
}

std::vector<Vertex> find_cycle(const Graph& g)
{
    std::vector<Vertex> parent(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> depth(static_cast<std::size_t>(g.n()), -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (depth[s] >= 0) continue;
        depth[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (w == parent[u]) continue;
                if (depth[w] < 0) {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                    continue;
                }
                // Non-tree edge u-w closes a cycle through their common ancestor.
                std::vector<Vertex> left{u}, right{w};
                Vertex a = u, b = w;
                while (depth[a] > depth[b]) left.push_back(a = parent[a]);
                while (depth[b] > depth[a]) right.push_back(b = parent[b]);
                while (a != b) {
                    left.push_back(a = parent[a]);
                    right.push_back(b = parent[b]);
                }
                right.pop_back();
                left.insert(left.end(), right.rbegin(), right.rend());
                return left;
            }
        }
    }
    return {};
}

std::vector<std::vector<Vertex>> components(const Graph& g)
{
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::vector<Vertex> comp{s};
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset)
{
    InducedSubgraph out;
    out.from_parent.assign(static_cast<std::size_t>(g.n()), -1);
    out.to_parent.assign(subset.begin(), subset.end());
    std::sort(out.to_parent.begin(), out.to_parent.end());
    out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()),
                        out.to_parent.end());
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        out.from_parent[out.to_parent[i]] = static_cast<Vertex>(i);
    std::vector<std::vector<Vertex>> rows(out.to_parent.size());
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        for (Vertex w : g.neighbors(out.to_parent[i]))
            if (out.from_parent[w] >= 0) rows[i].push_back(out.from_parent[w]);
    out.graph = Graph::from_adjacency(std::move(rows));
    return out;
}

}  // namespace tonelab
