#pragma once

#include "ptg/graph.hpp"

#include <cstdint>
#include <functional>

namespace ptg::oracle {

/// Largest n accepted by the permutation searches.
inline constexpr std::size_t kMaxBruteForceVertices = 9;

/// Some (sigma, p) is a broom certificate. Throws ContractError for n > 9.
bool brute_force_is_paired_threshold(const Graph& g);

/// Some ordering is an interval ordering.
bool brute_force_is_interval(const Graph& g);

/// Some ordering is an umbrella ordering.
bool brute_force_is_unit_interval(const Graph& g);

/// No induced 2K2, P4 or C4 (checked over all 4-subsets).
bool brute_force_is_threshold(const Graph& g);

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2). Requires n <= 8.
std::uint64_t labeled_graph_count(std::size_t n);

/// Bit k of `mask` selects the k-th pair (u, v), u < v, in lexicographic order.
Graph labeled_graph(std::size_t n, std::uint64_t mask);

/// Calls `visit` on every labeled graph on n vertices in mask order. Requires n <= 7.
void enumerate_labeled_graphs(std::size_t n, const std::function<void(const Graph&)>& visit);

}  // namespace ptg::oracle
