#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tonelab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1, stored as sorted adjacency
/// rows in a compressed layout. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws FormatError on loops, duplicate edges (in either orientation)
    /// or ids outside [0, n).
    static Graph from_edges(int n, std::span<const Edge> edges);

    /// Rows must be symmetric, loop-free and free of duplicates; they need
    /// not be sorted. Throws FormatError otherwise.
    static Graph from_adjacency(std::vector<std::vector<Vertex>> rows);

    int n() const { return n_; }
    std::int64_t m() const { return static_cast<std::int64_t>(targets_.size() / 2); }

    std::span<const Vertex> neighbors(Vertex v) const
    {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

    int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

    bool has_edge(Vertex u, Vertex v) const;

    /// Every edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<std::int64_t> offsets_{0};
    std::vector<Vertex> targets_;
};

/// Multigraph produced by the configuration model. Loops and parallel edges
/// are allowed; a loop contributes 2 to the degree of its vertex.
struct MultiGraph {
    int n = 0;
    std::vector<Edge> edges;

    std::vector<int> degrees() const;
    bool is_simple() const;

    /// Throws PreconditionViolated unless is_simple().
    Graph to_graph() const;
};

struct Reach {
    Vertex vertex;
    int distance;

    friend bool operator==(const Reach&, const Reach&) = default;
};

/// Breadth-first search cut off at a fixed depth. Scratch buffers live in the
/// object, so one instance must not be shared between threads.
class TruncatedBfs {
public:
    TruncatedBfs(const Graph& g, int radius);

    /// Vertices at distance 1..radius from source, in BFS discovery order.
    std::span<const Reach> run(Vertex source);

private:
    const Graph* g_;
    int radius_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<Reach> out_;
};

/// Exact distances for all pairs at distance 1..radius. Pairs that are farther
/// apart or disconnected are absent.
class DistanceOracle {
public:
    int radius() const { return radius_; }
    int n() const { return static_cast<int>(offsets_.size()) - 1; }

    std::optional<int> distance(Vertex u, Vertex v) const;

    /// Everything within radius of v, sorted by vertex id.
    std::span<const Reach> within(Vertex v) const
    {
        return {entries_.data() + offsets_[v], entries_.data() + offsets_[v + 1]};
    }

    /// Number of unordered pairs in the table.
    std::size_t pair_count() const { return entries_.size() / 2; }

    friend DistanceOracle truncated_distances(const Graph& g, int radius);

private:
    int radius_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Reach> entries_;
};

int max_degree(const Graph& g);

/// Throws DomainError when radius < 1.
DistanceOracle truncated_distances(const Graph& g, int radius);

/// G^i: u ~ v iff 1 <= d(u, v) <= i.
Graph power_graph(const Graph& g, int i);

/// BFS layers from a vertex set: layers[d] holds the vertices at distance
/// exactly d from `sources` (layers[0] is the sorted source set), for d up to
/// max_depth. Each layer is sorted.
std::vector<std::vector<Vertex>> distance_layers(const Graph& g, std::span<const Vertex> sources,
                                                 int max_depth);

/// N^i(Z): vertices outside Z whose distance to Z is exactly i.
std::vector<Vertex> neighborhood_shell(const Graph& g, std::span<const Vertex> zone, int i);

bool is_forest(const Graph& g);

/// Vertices of some cycle, in cycle order, or empty when g is a forest.
std::vector<Vertex> find_cycle(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;    // new id -> old id
    std::vector<Vertex> from_parent;  // old id -> new id, -1 when not kept
};

/// New ids follow the ascending order of the kept vertices.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

}  // namespace tonelab
