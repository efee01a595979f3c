#include "ptg/generators.hpp"

#include "ptg/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace ptg {

namespace {

Graph from_edges(std::size_t n, std::vector<Edge> edges) { return Graph(n, edges); }

Graph with_universal(std::size_t n, std::vector<Edge> edges) {
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>(n));
    return Graph(n + 1, edges);
}

Graph from_cliques(std::size_t n, const std::vector<VertexList>& cliques) {
    std::vector<Edge> edges;
    for (const auto& c : cliques)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) edges.emplace_back(std::min(c[i], c[j]), std::max(c[i], c[j]));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, edges);
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"two_k2", "p4", "c4", "net", "tent", "u3k2", "u2p3", "up2p4", "fig3"};
    return names;
}

Graph fixture(std::string_view name) {
    if (name == "two_k2") return from_edges(4, {{0, 1}, {2, 3}});
    if (name == "p4") return from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    if (name == "c4") return from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    if (name == "net") return from_edges(6, {{3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
    if (name == "tent")
        return from_edges(6, {{3, 4}, {3, 5}, {4, 5}, {0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 3}, {2, 5}});
    if (name == "u3k2") return with_universal(6, {{0, 1}, {2, 3}, {4, 5}});
    if (name == "u2p3") return with_universal(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    if (name == "up2p4") return with_universal(6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}});
    if (name == "fig3") {
        enum : Vertex { x1, x2, x3, y1, y2, y3, y4, y5 };
        return from_cliques(8, {{x2, y2, y3}, {x3, y1, y2, y3}, {y2, y3, y4}, {y3, y4, y5}, {x1, y3}});
    }
    throw ContractError("unknown fixture '" + std::string(name) + "'");
}

Graph nested_family(std::size_t k) {
    if (k < 1) throw ContractError("nested family needs k >= 1");
    const std::size_t n = 5 * k;
    auto u = [k](std::size_t i) { return static_cast<Vertex>(k + i - 1); };
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= 4 * k; ++i)
        for (std::size_t j = i + 1; j <= 4 * k && j - i <= 2 * k; ++j) edges.emplace_back(u(i), u(j));
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = i; j <= k; ++j) edges.emplace_back(static_cast<Vertex>(i - 1), u(j));
    return Graph(n, edges);
}

Graph pt_from_weights(std::span<const Rational> weight, const Rational& threshold) {
    if (threshold <= 0) throw ContractError("threshold must be positive");
    for (const auto& w : weight)
        if (w <= 0) throw ContractError("weights must be positive");
    const std::size_t n = weight.size();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (weight[u] + weight[v] >= threshold && abs(Rational(weight[u] - weight[v])) <= threshold)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph threshold_from_creation(const std::vector<bool>& dominating) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < dominating.size(); ++v)
        if (dominating[v])
            for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
    return Graph(dominating.size(), edges);
}

Graph random_threshold(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<bool> seq(n);
    for (std::size_t i = 0; i < n; ++i) seq[i] = coin(rng);
    return threshold_from_creation(seq);
}

Graph random_unit_interval(std::size_t n, std::uint64_t seed, double spread) {
    if (spread < 0) throw ContractError("spread must be nonnegative");
    constexpr std::int64_t unit = 1000;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick(0, static_cast<std::int64_t>(spread * unit));
    std::vector<std::int64_t> left(n);
    for (auto& x : left) x = pick(rng);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (std::abs(left[u] - left[v]) <= unit) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_probability);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

WeightedInstance random_pt_weights(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const long t = 4 * static_cast<long>(std::max<std::size_t>(n, 1));
    std::uniform_int_distribution<long> pick(1, 3 * t);
    WeightedInstance out;
    out.threshold = t;
    out.weight.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.weight.emplace_back(pick(rng));
    return out;
}

Graph benchmark_instance(std::size_t n) {
    if (n < 8) throw ContractError("benchmark instance needs n >= 8");
    const std::size_t band = n - 3;
    std::vector<Edge> edges;
    edges.reserve(3 * band + 6);
    for (Vertex i = 0; i < band; ++i)
        for (Vertex j = i + 1; j < band && j - i <= 3; ++j) edges.emplace_back(i, j);
    for (Vertex a = 0; a < 3; ++a)
        for (Vertex j = 0; j <= a; ++j) edges.emplace_back(j, static_cast<Vertex>(band + a));
    return Graph(n, edges);
}

}  // namespace ptg
