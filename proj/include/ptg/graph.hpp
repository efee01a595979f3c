#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ptg {

using Vertex = std::uint32_t;
using VertexList = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable undirected simple graph on vertices 0..n-1, stored CSR-style with
/// sorted neighbor lists.
class Graph {
public:
    Graph() = default;

    /// Throws ContractError on out-of-range endpoints, self-loops or duplicate edges.
    Graph(std::size_t n, std::span<const Edge> edges);

    static Graph complete(std::size_t n);
    static Graph edgeless(std::size_t n) { return Graph(n, {}); }

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    /// O(log deg).
    bool adjacent(Vertex u, Vertex v) const noexcept;

    /// Edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
};

/// g[X]. Vertex i of the result is `vertices[i]` of g; `vertices` need not be sorted.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Disjoint union; vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// A linear order of (a subset of) the vertices together with its inverse.
class VertexOrdering {
public:
    VertexOrdering() = default;

    /// `sequence` lists distinct vertices of a graph on `universe` vertices.
    /// Throws ContractError on repeats or out-of-range vertices.
    VertexOrdering(VertexList sequence, std::size_t universe);

    /// Convenience for a full permutation of 0..n-1.
    explicit VertexOrdering(VertexList permutation)
        : VertexOrdering(permutation, permutation.size()) {}

    static VertexOrdering identity(std::size_t n);

    std::size_t size() const noexcept { return sequence_.size(); }
    const VertexList& sequence() const noexcept { return sequence_; }
    Vertex operator[](std::size_t i) const noexcept { return sequence_[i]; }

    bool contains(Vertex v) const noexcept { return v < position_.size() && position_[v] != kAbsent; }
    /// 0-based position; only meaningful when contains(v).
    std::size_t position(Vertex v) const noexcept { return position_[v]; }

    VertexOrdering reversed() const;

    friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) {
        return a.sequence_ == b.sequence_;
    }

    static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

private:
    VertexList sequence_;
    std::vector<std::size_t> position_;
};

/// Ordered blocks of vertices; each block is a true-twin class.
struct TwinClassSequence {
    std::vector<VertexList> classes;
};

/// N[v], sorted.
VertexList neighbors_closed(const Graph& g, Vertex v);

bool is_simplicial(const Graph& g, Vertex v);

/// N[u] == N[v].
bool are_true_twins(const Graph& g, Vertex u, Vertex v);

bool is_clique(const Graph& g, std::span<const Vertex> vertices);

/// Components sorted ascending internally and ordered by smallest member.
std::vector<VertexList> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Groups consecutive true twins of `order`. Assumes `order` is an umbrella
/// ordering, where each twin class is a contiguous block.
TwinClassSequence true_twin_classes(const Graph& g, const VertexOrdering& order);

struct PeelResult {
    VertexList core;               ///< surviving vertices, ascending
    VertexList removed_universal;  ///< in removal order
    VertexList removed_isolated;   ///< in removal order
    /// Full removal log: vertex and whether it was removed as universal.
    std::vector<std::pair<Vertex, bool>> removal_log;
};

/// Exhaustively deletes vertices that are universal or isolated in the
/// remaining subgraph; among current candidates the smallest id goes first.
/// A last remaining vertex counts as isolated.
PeelResult peel_universal_isolated(const Graph& g);

/// Later neighbors of every vertex form a block immediately after it, i.e.
/// x < y < z and xz in E imply xy in E. `sigma` must cover every vertex.
bool check_interval_ordering(const Graph& g, const VertexOrdering& sigma);

/// Every closed neighborhood is a contiguous block of sigma.
bool check_umbrella_ordering(const Graph& g, const VertexOrdering& sigma);

}  // namespace ptg
