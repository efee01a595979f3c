#include "ptg/threshold.hpp"

#include "ptg/errors.hpp"

#include <algorithm>
#include <string>

namespace ptg {

std::optional<ThresholdCertificate> recognize_threshold(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const PeelResult peel = peel_universal_isolated(g);
    if (!peel.core.empty()) return std::nullopt;

    // Replaying the peel backwards builds g by repeatedly adding a vertex that
    // is isolated from or dominating everything added so far. The j-th added
    // vertex sits j above or below T/2, so it decides all pairs with earlier ones.
    ThresholdCertificate cert;
    const auto half = static_cast<long>(2 * (n + 1));
    cert.threshold = Rational(2 * half);
    cert.weight.assign(n, Rational(0));
    long rank = 0;
    for (auto it = peel.removal_log.rbegin(); it != peel.removal_log.rend(); ++it) {
        ++rank;
        cert.weight[it->first] = Rational(it->second ? half + rank : half - rank);
    }
    return cert;
}

bool check_threshold_certificate(const Graph& g, const ThresholdCertificate& cert) {
    const std::size_t n = g.vertex_count();
    if (cert.weight.size() != n || cert.threshold <= 0) return false;
    for (Vertex u = 0; u < n; ++u) {
        if (cert.weight[u] <= 0) return false;
        for (Vertex v = u + 1; v < n; ++v)
            if ((cert.weight[u] + cert.weight[v] >= cert.threshold) != g.adjacent(u, v)) return false;
    }
    return true;
}

bool neighborhood_contained(const Graph& g, Vertex a, Vertex b) {
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    return na.size() <= nb.size() && std::includes(nb.begin(), nb.end(), na.begin(), na.end());
}

std::optional<VertexList> neighborhood_containment_order(const Graph& g, std::span<const Vertex> independent) {
    std::vector<bool> in_set(g.vertex_count(), false);
    for (Vertex v : independent) in_set[v] = true;
    for (Vertex v : independent)
        for (Vertex w : g.neighbors(v))
            if (in_set[w])
                throw ContractError("vertices " + std::to_string(v) + " and " + std::to_string(w) +
                                    " are adjacent; set is not independent");

    VertexList order(independent.begin(), independent.end());
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
    });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (!neighborhood_contained(g, order[i - 1], order[i])) return std::nullopt;
    return order;
}

bool induces_threshold(const Graph& g, std::span<const Vertex> subset) {
    return recognize_threshold(induced_subgraph(g, subset)).has_value();
}

bool SimplicialChain::fits(Vertex v) const {
    const std::size_t d = g_->degree(v);
    auto above = by_degree_.lower_bound(d);
    if (above != by_degree_.end() && !neighborhood_contained(*g_, v, above->second)) return false;
    auto below = by_degree_.upper_bound(d);
    if (below != by_degree_.begin()) {
        --below;
        if (!neighborhood_contained(*g_, below->second, v)) return false;
    }
    return true;
}

void SimplicialChain::add(Vertex v) {
    by_degree_.emplace(g_->degree(v), v);
    members_.push_back(v);
}

}  // namespace ptg
