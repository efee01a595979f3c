#include "ptg/oracle.hpp"

#include "ptg/errors.hpp"
#include "ptg/paired_threshold.hpp"

#include <string>

namespace ptg::oracle {

namespace {

void guard(const Graph& g) {
    if (g.vertex_count() > kMaxBruteForceVertices)
        throw ContractError("brute force limited to " + std::to_string(kMaxBruteForceVertices) + " vertices");
}

// Depth-first search over orderings; `extends(order, v)` decides whether
// appending v keeps every condition that only involves placed vertices.
template <typename Extends, typename Accept>
bool search(const Graph& g, Extends extends, Accept accept) {
    const std::size_t n = g.vertex_count();
    VertexList order;
    order.reserve(n);
    std::vector<char> used(n, 0);
    std::function<bool()> dfs = [&]() -> bool {
        if (order.size() == n) return accept(order);
        for (Vertex v = 0; v < n; ++v) {
            if (used[v] || !extends(order, v)) continue;
            used[v] = 1;
            order.push_back(v);
            if (dfs()) return true;
            order.pop_back();
            used[v] = 0;
        }
        return false;
    };
    return dfs();
}

// Appending z: for every placed x adjacent to z, each y between them must be
// adjacent to x (interval ordering).
bool extends_interval(const Graph& g, const VertexList& order, Vertex z) {
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!g.adjacent(order[i], z)) continue;
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (!g.adjacent(order[i], order[j])) return false;
    }
    return true;
}

// Appending c to sigma for a reversed interval ordering: a < b < c with ac in
// E forces bc in E, so everything after c's first placed neighbor is adjacent to c.
bool extends_reversed_interval(const Graph& g, const VertexList& order, Vertex c) {
    bool seen = false;
    for (Vertex a : order) {
        const bool adj = g.adjacent(a, c);
        if (seen && !adj) return false;
        seen = seen || adj;
    }
    return true;
}

bool extends_umbrella(const Graph& g, const VertexList& order, Vertex z) {
    std::size_t i = 0;
    while (i < order.size() && !g.adjacent(order[i], z)) ++i;
    for (std::size_t j = i + 1; j < order.size(); ++j)
        if (!g.adjacent(order[j], z) || !g.adjacent(order[i], order[j])) return false;
    return true;
}

}  // namespace

bool brute_force_is_paired_threshold(const Graph& g) {
    guard(g);
    const std::size_t n = g.vertex_count();
    return search(
        g, [&](const VertexList& order, Vertex v) { return extends_reversed_interval(g, order, v); },
        [&](const VertexList& order) {
            const VertexOrdering sigma(order);
            for (std::size_t p = 0; p <= n; ++p)
                if (check_broom(g, BroomCertificate{sigma, p})) return true;
            return false;
        });
}

bool brute_force_is_interval(const Graph& g) {
    guard(g);
    return search(
        g, [&](const VertexList& order, Vertex v) { return extends_interval(g, order, v); },
        [](const VertexList&) { return true; });
}

bool brute_force_is_unit_interval(const Graph& g) {
    guard(g);
    return search(
        g, [&](const VertexList& order, Vertex v) { return extends_umbrella(g, order, v); },
        [](const VertexList&) { return true; });
}

bool brute_force_is_threshold(const Graph& g) {
    const Vertex n = static_cast<Vertex>(g.vertex_count());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    const Vertex q[4] = {a, b, c, d};
                    int edges = 0;
                    int deg[4] = {0, 0, 0, 0};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(q[i], q[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    bool all_one = true, all_two = true;
                    int ones = 0;
                    for (int x : deg) {
                        all_one = all_one && x == 1;
                        all_two = all_two && x == 2;
                        ones += x == 1;
                    }
                    if (edges == 2 && all_one) return false;  // 2K2
                    if (edges == 4 && all_two) return false;  // C4
                    if (edges == 3 && ones == 2) {            // P4 (a star would have three leaves)
                        bool path = true;
                        for (int x : deg) path = path && (x == 1 || x == 2);
                        if (path) return false;
                    }
                }
    return true;
}

std::uint64_t labeled_graph_count(std::size_t n) {
    if (n > 8) throw ContractError("labeled graph count overflows for n > 8");
    return n < 2 ? 1 : std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(std::size_t n, std::uint64_t mask) {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if (bit < 64 && (mask >> bit) & 1U) edges.emplace_back(u, v);
    return Graph(n, edges);
}

void enumerate_labeled_graphs(std::size_t n, const std::function<void(const Graph&)>& visit) {
    if (n > 7) throw ContractError("exhaustive enumeration limited to 7 vertices");
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) visit(labeled_graph(n, mask));
}

}  // namespace ptg::oracle
