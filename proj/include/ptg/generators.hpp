#pragma once

#include "ptg/graph.hpp"
#include "ptg/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ptg {

/// Named small graphs with frozen labelings:
///   two_k2  0-1, 2-3            p4  path 0-1-2-3          c4  cycle 0-1-2-3
///   net     triangle 3,4,5 with pendants 0-3, 1-4, 2-5
///   tent    triangle 3,4,5 with 0~{3,4}, 1~{4,5}, 2~{3,5}
///   u3k2    0-1, 2-3, 4-5 plus universal 6
///   u2p3    0-1-2, 3-4-5 plus universal 6
///   up2p4   0-1, 2-3-4-5 plus universal 6
///   fig3    x1..x3 = 0..2, y1..y5 = 3..7, maximal cliques
///           {x2,y2,y3} {x3,y1,y2,y3} {y2,y3,y4} {y3,y4,y5} {x1,y3}
/// Throws ContractError for an unknown name.
Graph fixture(std::string_view name);

const std::vector<std::string>& fixture_names();

/// v_1..v_k are 0..k-1 and u_1..u_4k are k..5k-1; u_i u_j is an edge iff
/// |i - j| <= 2k, and v_i u_j iff i <= j <= k. Requires k >= 1.
Graph nested_family(std::size_t k);

/// uv is an edge iff w(u) + w(v) >= T and |w(u) - w(v)| <= T. Inputs must be positive.
Graph pt_from_weights(std::span<const Rational> weight, const Rational& threshold);

/// Vertex i is added isolated (false) or dominating (true) over vertices 0..i-1.
Graph threshold_from_creation(const std::vector<bool>& dominating);

/// Creation sequence drawn uniformly at random.
Graph random_threshold(std::size_t n, std::uint64_t seed);

/// Intersection graph of n unit intervals whose left ends are uniform on
/// [0, spread] (on an integer grid, so ties are exact).
Graph random_unit_interval(std::size_t n, std::uint64_t seed, double spread);

/// G(n, p).
Graph random_graph(std::size_t n, double edge_probability, std::uint64_t seed);

struct WeightedInstance {
    std::vector<Rational> weight;
    Rational threshold;
};

/// Integer weights in [1, 3T] with T = 4n, a mix that yields both low
/// (independent) and high (unit interval) vertices.
WeightedInstance random_pt_weights(std::size_t n, std::uint64_t seed);

/// Connected paired threshold graph on n >= 8 vertices: a band of cliques
/// u_0..u_{n-4} (u_i u_j iff |i - j| <= 3) plus three independent vertices
/// attached to the nested prefixes {u_0}, {u_0, u_1}, {u_0, u_1, u_2}.
Graph benchmark_instance(std::size_t n);

}  // namespace ptg
