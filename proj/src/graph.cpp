#include "ptg/graph.hpp"

#include "ptg/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace ptg {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::size_t> degree(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw ContractError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
        if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
        ++degree[u];
        ++degree[v];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges) {
        adjacency_[fill[u]++] = v;
        adjacency_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
        auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
        std::sort(first, last);
        if (auto dup = std::adjacent_find(first, last); dup != last)
            throw ContractError("duplicate edge (" + std::to_string(v) + ", " + std::to_string(*dup) + ")");
    }
}

Graph Graph::complete(std::size_t n) {
    std::vector<Edge> edges;
    edges.reserve(n * (n - (n ? 1 : 0)) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<std::size_t> local(g.vertex_count(), VertexOrdering::kAbsent);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbors(vertices[i]))
            if (local[w] != VertexOrdering::kAbsent && i < local[w])
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(local[w]));
    return Graph(vertices.size(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    const auto shift = static_cast<Vertex>(a.vertex_count());
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(a.vertex_count() + b.vertex_count(), edges);
}

VertexOrdering::VertexOrdering(VertexList sequence, std::size_t universe)
    : sequence_(std::move(sequence)), position_(universe, kAbsent) {
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
        Vertex v = sequence_[i];
        if (v >= universe) throw ContractError("ordering names vertex " + std::to_string(v) + " out of range");
        if (position_[v] != kAbsent) throw ContractError("ordering repeats vertex " + std::to_string(v));
        position_[v] = i;
    }
}

VertexOrdering VertexOrdering::identity(std::size_t n) {
    VertexList seq(n);
    for (std::size_t i = 0; i < n; ++i) seq[i] = static_cast<Vertex>(i);
    return VertexOrdering(std::move(seq));
}

VertexOrdering VertexOrdering::reversed() const {
    VertexList seq(sequence_.rbegin(), sequence_.rend());
    return VertexOrdering(std::move(seq), position_.size());
}

VertexList neighbors_closed(const Graph& g, Vertex v) {
    auto nb = g.neighbors(v);
    VertexList out(nb.begin(), nb.end());
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

bool is_simplicial(const Graph& g, Vertex v) {
    auto nb = g.neighbors(v);
    return is_clique(g, nb);
}

bool are_true_twins(const Graph& g, Vertex u, Vertex v) {
    if (u == v) return true;
    if (g.degree(u) != g.degree(v) || !g.adjacent(u, v)) return false;
    // N(u) - {v} == N(v) - {u}, both sorted.
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i < a.size() && a[i] == v) { ++i; continue; }
        if (j < b.size() && b[j] == u) { ++j; continue; }
        if (i == a.size() || j == b.size() || a[i] != b[j]) return false;
        ++i;
        ++j;
    }
    return true;
}

std::vector<VertexList> connected_components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<VertexList> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexList comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

TwinClassSequence true_twin_classes(const Graph& g, const VertexOrdering& order) {
    TwinClassSequence out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        if (!out.classes.empty() && are_true_twins(g, out.classes.back().front(), v))
            out.classes.back().push_back(v);
        else
            out.classes.push_back({v});
    }
    return out;
}

PeelResult peel_universal_isolated(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> degree(n);
    std::set<std::pair<std::size_t, Vertex>> by_degree;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        by_degree.emplace(degree[v], v);
    }
    std::vector<bool> removed(n, false);
    PeelResult result;
    std::size_t remaining = n;
    while (remaining > 0) {
        constexpr Vertex kNone = static_cast<Vertex>(-1);
        Vertex isolated = kNone;
        Vertex universal = kNone;
        if (auto it = by_degree.begin(); it->first == 0) isolated = it->second;
        if (auto it = by_degree.lower_bound({remaining - 1, 0});
            it != by_degree.end() && it->first == remaining - 1)
            universal = it->second;
        if (isolated == kNone && universal == kNone) break;
        const bool take_universal = isolated == kNone || (universal != kNone && universal < isolated);
        const Vertex v = take_universal ? universal : isolated;
        by_degree.erase({degree[v], v});
        removed[v] = true;
        --remaining;
        for (Vertex w : g.neighbors(v)) {
            if (removed[w]) continue;
            by_degree.erase({degree[w], w});
            --degree[w];
            by_degree.emplace(degree[w], w);
        }
        // A sole survivor has degree 0 == remaining - 1; it is logged as isolated.
        if (take_universal && degree[v] == 0) {
            result.removed_isolated.push_back(v);
            result.removal_log.emplace_back(v, false);
        } else if (take_universal) {
            result.removed_universal.push_back(v);
            result.removal_log.emplace_back(v, true);
        } else {
            result.removed_isolated.push_back(v);
            result.removal_log.emplace_back(v, false);
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v]) result.core.push_back(v);
    return result;
}

bool check_interval_ordering(const Graph& g, const VertexOrdering& sigma) {
    const std::size_t n = g.vertex_count();
    if (sigma.size() != n) return false;
    for (Vertex x = 0; x < n; ++x) {
        const std::size_t px = sigma.position(x);
        std::size_t later = 0;
        std::size_t furthest = px;
        for (Vertex z : g.neighbors(x)) {
            std::size_t pz = sigma.position(z);
            if (pz > px) {
                ++later;
                furthest = std::max(furthest, pz);
            }
        }
        if (furthest - px != later) return false;
    }
    return true;
}

bool check_umbrella_ordering(const Graph& g, const VertexOrdering& sigma) {
    const std::size_t n = g.vertex_count();
    if (sigma.size() != n) return false;
    for (Vertex v = 0; v < n; ++v) {
        std::size_t lo = sigma.position(v);
        std::size_t hi = lo;
        for (Vertex w : g.neighbors(v)) {
            lo = std::min(lo, sigma.position(w));
            hi = std::max(hi, sigma.position(w));
        }
        if (hi - lo != g.degree(v)) return false;
    }
    return true;
}

}  // namespace ptg
