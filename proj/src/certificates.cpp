#include "ptg/errors.hpp"
#include "ptg/paired_threshold.hpp"
#include "ptg/threshold.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ptg {

namespace {

std::string pair_text(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

std::optional<Edge> first_violation(const Graph& g, std::span<const Rational> w, const Rational& sum_t,
                                    const Rational& diff_t) {
    const std::size_t n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const bool predicted = w[u] + w[v] >= sum_t && abs(Rational(w[u] - w[v])) <= diff_t;
            if (predicted != g.adjacent(u, v)) return Edge{u, v};
        }
    return std::nullopt;
}

CertificateCheck failure(std::string message, std::optional<Edge> violation = std::nullopt) {
    CertificateCheck c;
    c.ok = false;
    c.violation = violation;
    c.message = std::move(message);
    return c;
}

CertificateCheck pair_failure(const Graph& g, Edge e) {
    return failure(std::string(g.adjacent(e.first, e.second) ? "edge " : "non-edge ") + pair_text(e.first, e.second) +
                       " is not realized by the weights",
                   e);
}

}  // namespace

bool pt_adjacent(const Rational& a, const Rational& b, const Rational& threshold) {
    return a + b >= threshold && abs(Rational(a - b)) <= threshold;
}

CertificateCheck check_weight_certificate(const Graph& g, const WeightCertificate& cert) {
    const std::size_t n = g.vertex_count();
    const auto& w = cert.weight;
    const Rational& t = cert.threshold;
    if (w.size() != n)
        return failure("expected " + std::to_string(n) + " weights, got " + std::to_string(w.size()));
    if (t <= 0) return failure("threshold must be positive");
    for (Vertex v = 0; v < n; ++v)
        if (w[v] <= 0) return failure("weight of vertex " + std::to_string(v) + " is not positive");

    // The vertices adjacent to u are exactly those (other than u) whose weight
    // lies in [max(T - w(u), w(u) - T), T + w(u)]; matching the window size against the degree
    // and testing each listed neighbor settles every pair.
    std::vector<Rational> sorted(w);
    std::sort(sorted.begin(), sorted.end());
    bool consistent = true;
    for (Vertex u = 0; u < n && consistent; ++u) {
        const Rational lo = std::max(Rational(t - w[u]), Rational(w[u] - t));
        const Rational hi = t + w[u];
        auto first = std::lower_bound(sorted.begin(), sorted.end(), lo);
        auto last = std::upper_bound(sorted.begin(), sorted.end(), hi);
        std::size_t window = static_cast<std::size_t>(last - first);
        if (2 * w[u] >= t) --window;
        if (window != g.degree(u)) consistent = false;
        for (Vertex v : g.neighbors(u))
            if (!pt_adjacent(w[u], w[v], t)) consistent = false;
    }
    if (consistent) return CertificateCheck{true, std::nullopt, {}};
    if (auto e = first_violation(g, w, t, t)) return pair_failure(g, *e);
    return failure("inconsistent certificate");
}

CertificateCheck check_two_threshold(const Graph& g, std::span<const Rational> weight, const Rational& sum_threshold,
                                     const Rational& diff_threshold) {
    const std::size_t n = g.vertex_count();
    if (weight.size() != n)
        return failure("expected " + std::to_string(n) + " weights, got " + std::to_string(weight.size()));
    if (sum_threshold <= 0 || diff_threshold <= 0) return failure("thresholds must be positive");
    for (Vertex v = 0; v < n; ++v)
        if (weight[v] <= 0) return failure("weight of vertex " + std::to_string(v) + " is not positive");
    if (auto e = first_violation(g, weight, sum_threshold, diff_threshold)) return pair_failure(g, *e);
    return CertificateCheck{true, std::nullopt, {}};
}

WeightCertificate normalize_thresholds(const Graph& g, std::span<const Rational> weight, const Rational& sum_threshold,
                                       const Rational& diff_threshold, bool validate) {
    const std::size_t n = g.vertex_count();
    if (weight.size() != n) throw ContractError("weight vector size does not match vertex count");
    if (sum_threshold <= 0 || diff_threshold <= 0) throw ContractError("thresholds must be positive");
    if (validate) {
        auto check = check_two_threshold(g, weight, sum_threshold, diff_threshold);
        if (!check) throw ContractError("weights do not realize the graph: " + check.message);
    }

    // Shifting every weight by (T- - T+)/2 turns the sum test into w(u) + w(v) >= T-.
    WeightCertificate out;
    out.threshold = diff_threshold;
    const Rational& t = out.threshold;
    const Rational shift = (diff_threshold - sum_threshold) / 2;
    out.weight.resize(n);
    for (Vertex v = 0; v < n; ++v) out.weight[v] = weight[v] + shift;

    // Non-positive results are either isolated vertices, which are lifted far
    // above everything, or vertices at exactly 0 whose neighbors all sit at T.
    Rational eps = t;
    for (Vertex v = 0; v < n; ++v)
        if (out.weight[v] != t) eps = std::min(eps, Rational(abs(Rational(out.weight[v] - t))));
    eps /= 2;

    VertexList lifted;
    for (Vertex v = 0; v < n; ++v) {
        if (out.weight[v] > 0) continue;
        if (g.degree(v) == 0) {
            lifted.push_back(v);
        } else if (out.weight[v] == 0) {
            out.weight[v] = eps;
        } else {
            throw ContractError("vertex " + std::to_string(v) + " has neighbors but shifted weight below zero");
        }
    }
    if (!lifted.empty()) {
        Rational top = 0;
        for (Vertex v = 0; v < n; ++v)
            if (out.weight[v] > 0) top = std::max(top, out.weight[v]);
        for (Vertex v : lifted) {
            top += t + 1;
            out.weight[v] = top;
        }
    }
    return out;
}

bool check_broom(const Graph& g, const BroomCertificate& cert) {
    const std::size_t n = g.vertex_count();
    const auto& sigma = cert.sigma;
    if (sigma.size() != n || cert.p > n) return false;
    for (Vertex v = 0; v < n; ++v)
        if (!sigma.contains(v)) return false;
    if (!check_interval_ordering(g, sigma.reversed())) return false;

    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = sigma[i];
        std::size_t lo = n, hi = 0, inside = 0;
        for (Vertex x : g.neighbors(v)) {
            const std::size_t px = sigma.position(x);
            if (i < cert.p && px < cert.p) return false;
            if (i >= cert.p && px < cert.p) continue;
            lo = std::min(lo, px);
            hi = std::max(hi, px);
            ++inside;
        }
        if (i >= cert.p) {
            // closed neighborhood within the suffix
            lo = std::min(lo, i);
            hi = std::max(hi, i);
            ++inside;
        }
        if (inside > 0 && hi - lo + 1 != inside) return false;
    }
    return true;
}

BroomCertificate broom_from_weights(const Graph& g, const WeightCertificate& cert) {
    auto check = check_weight_certificate(g, cert);
    if (!check) throw ContractError("weights do not realize the graph: " + check.message);
    const std::size_t n = g.vertex_count();
    VertexList order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        int c = cmp(cert.weight[a], cert.weight[b]);
        return c != 0 ? c < 0 : a < b;
    });
    std::size_t p = 0;
    while (p < n && 2 * cert.weight[order[p]] < cert.threshold) ++p;
    return BroomCertificate{VertexOrdering(std::move(order)), p};
}

BroomCertificate broom_from_partition(const PTPartition& part) {
    VertexList seq = part.independent;
    seq.insert(seq.end(), part.umbrella.sequence().begin(), part.umbrella.sequence().end());
    const std::size_t p = part.independent.size();
    return BroomCertificate{VertexOrdering(std::move(seq)), p};
}

bool check_partition(const Graph& g, const PTPartition& part) {
    const std::size_t n = g.vertex_count();
    std::vector<char> role(n, 0);  // 1 = I, 2 = U
    for (Vertex v : part.independent) {
        if (v >= n || role[v]) return false;
        role[v] = 1;
    }
    for (Vertex v : part.umbrella.sequence()) {
        if (v >= n || role[v]) return false;
        role[v] = 2;
    }
    if (std::find(role.begin(), role.end(), 0) != role.end()) return false;

    for (std::size_t k = 0; k < part.independent.size(); ++k) {
        const Vertex v = part.independent[k];
        for (Vertex x : g.neighbors(v))
            if (role[x] == 1) return false;
        if (k > 0 && !neighborhood_contained(g, part.independent[k - 1], v)) return false;
    }

    const VertexList& useq = part.umbrella.sequence();
    if (!check_umbrella_ordering(induced_subgraph(g, useq), VertexOrdering::identity(useq.size()))) return false;

    std::vector<char> in_closed(n, 0);
    for (Vertex v : part.independent) {
        in_closed[v] = 1;
        for (Vertex x : g.neighbors(v)) in_closed[x] = 1;
    }
    VertexList closed;
    for (Vertex v = 0; v < n; ++v)
        if (in_closed[v]) closed.push_back(v);
    if (!induces_threshold(g, closed)) return false;

    for (Vertex v : part.independent) {
        if (g.degree(v) == 0) continue;
        std::size_t lo = n, hi = 0;
        for (Vertex x : g.neighbors(v)) {
            lo = std::min(lo, part.umbrella.position(x));
            hi = std::max(hi, part.umbrella.position(x));
        }
        if (hi - lo + 1 != g.degree(v)) return false;
    }

    if (!useq.empty()) {
        const Vertex first = useq.front();
        for (Vertex v : part.independent)
            for (Vertex x : g.neighbors(v))
                if (x != first && !g.adjacent(first, x)) return false;
    }
    return true;
}

}  // namespace ptg
