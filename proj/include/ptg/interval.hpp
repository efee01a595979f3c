#pragma once

#include "ptg/graph.hpp"
#include "ptg/rational.hpp"

#include <optional>
#include <vector>

namespace ptg {

/// Maximal cliques in an order where the cliques containing any vertex are
/// consecutive. Each clique is sorted ascending.
struct CliquePath {
    std::vector<VertexList> cliques;

    friend bool operator==(const CliquePath&, const CliquePath&) = default;
};

/// Closed interval [left[v], right[v]] per vertex.
struct IntervalModel {
    std::vector<Rational> left;
    std::vector<Rational> right;

    std::size_t size() const noexcept { return left.size(); }
};

/// Lexicographic breadth-first search starting at vertex 0; deterministic.
VertexList lex_bfs(const Graph& g);

/// Clique path of g, or nullopt if g is not an interval graph. Components are
/// handled separately and concatenated in order of their smallest vertex; each
/// component's path is oriented so its first clique is lexicographically no
/// larger than its last.
std::optional<CliquePath> recognize_interval(const Graph& g);

/// Umbrella ordering (components consecutive), or nullopt if g is not a unit
/// interval graph.
std::optional<VertexOrdering> umbrella_ordering(const Graph& g);

/// True iff `cp` lists exactly the maximal cliques of g, each once, and every
/// vertex occupies a consecutive run of cliques.
bool is_valid_clique_path(const Graph& g, const CliquePath& cp);

/// lp(v) / rp(v) = first / last 1-based index of a clique containing v.
IntervalModel interval_model_from_clique_path(const Graph& g, const CliquePath& cp);

/// True iff intervals u and v intersect exactly when uv is an edge.
bool model_represents(const Graph& g, const IntervalModel& model);

/// Largest k such that k intervals satisfy
/// lp(v_k) < ... < lp(v_1) <= rp(v_1) < ... < rp(v_k).
std::size_t max_nesting_depth(const IntervalModel& model);

}  // namespace ptg
