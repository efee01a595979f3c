#include "ptg/errors.hpp"
#include "ptg/paired_threshold.hpp"
#include "ptg/threshold.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptg {

namespace {

Rational integer(long long x) { return Rational(mpz_class(std::to_string(x))); }

}  // namespace

WeightSynthesis synthesize_weights(const Graph& g, const PTPartition& part) {
    const std::size_t n = g.vertex_count();
    const std::size_t p = part.independent.size();
    if (p == 0) throw ContractError("independent side is empty");
    if (part.umbrella.size() == 0) throw ContractError("umbrella side is empty");
    if (p + part.umbrella.size() != n) throw ContractError("partition does not cover the graph");
    if (!is_connected(g)) throw ContractError("graph is not connected");
    if (is_clique(g, part.umbrella.sequence())) throw ContractError("umbrella side is a clique");

    WeightSynthesis out;
    out.p = p;
    out.numbering = part.independent;
    out.numbering.insert(out.numbering.end(), part.umbrella.sequence().begin(), part.umbrella.sequence().end());

    // index[v] is the 1-based number of v.
    std::vector<std::size_t> index(n, 0);
    for (std::size_t i = 0; i < n; ++i) index[out.numbering[i]] = i + 1;
    auto v = [&](std::size_t i) { return out.numbering[i - 1]; };

    std::vector<char> in_ni(n + 1, 0);
    for (Vertex u : part.independent)
        for (Vertex x : g.neighbors(u)) in_ni[index[x]] = 1;

    std::vector<std::size_t> s(n + 1, 0);
    for (std::size_t i = p + 1; i <= n; ++i) {
        std::size_t best = i;
        for (Vertex x : g.neighbors(v(i))) best = std::min(best, index[x]);
        s[i] = best;
    }

    std::size_t q = n + 1;
    for (Vertex x : g.neighbors(v(1))) q = std::min(q, index[x]);
    if (q > n) throw ContractError("first independent vertex has no neighbor");
    std::size_t t = p + 1;
    for (Vertex x : g.neighbors(v(p + 1))) t = std::max(t, index[x]);
    if (t >= n) throw ContractError("closed neighborhood of the first umbrella vertex covers the umbrella side");
    out.q = q;
    out.t = t;

    const auto nn = static_cast<long long>(n);
    const auto pp = static_cast<long long>(p);
    std::vector<Rational> w(n + 1);
    for (std::size_t i = 1; i <= p; ++i) w[i] = integer(static_cast<long long>(i) * nn);
    for (std::size_t i = p + 1; i <= t; ++i) {
        const auto ii = static_cast<long long>(i);
        const auto si = static_cast<long long>(s[i]);
        if (i < q && !in_ni[i]) w[i] = integer((2 * nn - pp) * nn - (nn - ii));
        else if (i < q) w[i] = integer((2 * nn - si) * nn + ii);
        else if (in_ni[i]) w[i] = integer((2 * nn + si) * nn - (nn - ii));
        else w[i] = integer((2 * nn + pp) * nn + ii);
    }
    const Rational two_n_sq = integer(2 * nn * nn);
    for (std::size_t i = t + 1; i <= n; ++i) {
        const std::size_t si = s[i];
        w[i] = two_n_sq + w[si - 1] + Rational(static_cast<long>(i), static_cast<long>(n)) * (w[si] - w[si - 1]);
        w[i].canonicalize();
    }

    out.certificate.threshold = two_n_sq;
    out.certificate.weight.resize(n);
    for (std::size_t i = 1; i <= n; ++i) out.certificate.weight[v(i)] = w[i];
    return out;
}

bool satisfies_weight_chain(const WeightSynthesis& s) {
    const std::size_t n = s.numbering.size();
    if (n == 0 || s.p == 0 || s.t > n || s.t <= s.p) return false;
    const auto& w = s.certificate.weight;
    auto at = [&](std::size_t i) -> const Rational& { return w[s.numbering[i - 1]]; };
    const Rational n_sq = Rational(static_cast<long>(n)) * static_cast<long>(n);
    for (std::size_t i = 2; i <= n; ++i)
        if (!(at(i - 1) < at(i))) return false;
    if (!(at(s.p) < n_sq && n_sq < at(s.p + 1))) return false;
    if (!(at(s.t) < 3 * n_sq)) return false;
    if (s.t < n && !(3 * n_sq < at(s.t + 1))) return false;
    return true;
}

std::vector<Rational> unit_interval_weights(const Graph& g, const VertexOrdering& umbrella, const Rational& threshold,
                                            const Rational& offset) {
    const std::size_t n = g.vertex_count();
    if (threshold <= 0) throw ContractError("threshold must be positive");
    if (umbrella.size() != n) throw ContractError("umbrella ordering must cover the graph");
    std::vector<Rational> w(n);
    if (n == 0) return w;

    // Within a component, the vertices adjacent to its first vertex c climb in
    // steps of T/n above w(c); every later vertex x sits strictly between
    // T + w(s - 1) and T + w(s), where s is its leftmost neighbor.
    const Rational step = threshold / Rational(static_cast<long>(n));
    Rational top = offset;
    bool first_component = true;
    std::size_t start = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const Vertex x = umbrella[k];
        std::size_t s = k;
        for (Vertex y : g.neighbors(x)) s = std::min(s, umbrella.position(y));
        if (s == k) {
            start = k;
            w[x] = first_component ? Rational(threshold + offset) : Rational(top + threshold + 1);
            first_component = false;
        } else if (s == start) {
            w[x] = w[umbrella[start]] + step * static_cast<long>(k - start);
        } else {
            const Rational& below = w[umbrella[s - 1]];
            const Rational& at = w[umbrella[s]];
            w[x] = threshold + below + Rational(static_cast<long>(k + 1), static_cast<long>(n)) * (at - below);
            w[x].canonicalize();
        }
        top = std::max(top, w[x]);
    }
    return w;
}

WeightCertificate synthesize_weights_general(const Graph& g, const PTPartition& part, bool self_check) {
    const std::size_t n = g.vertex_count();
    if (self_check && !check_partition(g, part)) throw ContractError("partition is not valid for the graph");
    if (part.independent.size() + part.umbrella.size() != n) throw ContractError("partition does not cover the graph");

    auto finish = [&](WeightCertificate cert) {
        if (self_check) {
            auto check = check_weight_certificate(g, cert);
            if (!check) throw std::logic_error("synthesized weights failed verification: " + check.message);
        }
        return cert;
    };

    WeightCertificate cert;
    if (n == 0) {
        cert.threshold = 1;
        return cert;
    }
    if (part.umbrella.size() == 0) {
        cert.threshold = static_cast<long>(std::max<std::size_t>(n, 3));
        cert.weight.assign(n, Rational(1));
        return finish(std::move(cert));
    }
    if (part.independent.empty()) {
        cert.threshold = Rational(2 * static_cast<long>(n) * static_cast<long>(n));
        cert.weight = unit_interval_weights(g, part.umbrella, cert.threshold);
        return finish(std::move(cert));
    }
    if (auto th = recognize_threshold(g)) {
        Rational diff = *std::max_element(th->weight.begin(), th->weight.end()) + 1;
        return finish(normalize_thresholds(g, th->weight, th->threshold, diff, self_check));
    }

    if (!is_connected(g)) {
        // The component holding the first umbrella vertex carries every
        // non-isolated vertex of I; all remaining components are unit interval.
        const auto comps = connected_components(g);
        std::vector<std::size_t> comp_of(n);
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (Vertex v : comps[c]) comp_of[v] = c;
        const std::size_t main = comp_of[part.umbrella[0]];
        const VertexList& members = comps[main];

        std::vector<Vertex> local(n, static_cast<Vertex>(-1));
        for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Vertex>(i);
        PTPartition sub;
        VertexList sub_umbrella, others;
        for (Vertex v : part.independent)
            if (comp_of[v] == main) sub.independent.push_back(local[v]);
        for (Vertex v : part.umbrella.sequence()) {
            if (comp_of[v] == main) sub_umbrella.push_back(local[v]);
        }
        sub.umbrella = VertexOrdering(std::move(sub_umbrella), members.size());
        for (Vertex v = 0; v < n; ++v)
            if (comp_of[v] != main) others.push_back(v);

        const Graph main_graph = induced_subgraph(g, members);
        const WeightCertificate inner = synthesize_weights_general(main_graph, sub, self_check);

        const Graph rest_graph = induced_subgraph(g, others);
        auto rest_umbrella = umbrella_ordering(rest_graph);
        if (!rest_umbrella) throw ContractError("a component without the partition's umbrella start is not unit interval");
        const Rational top = *std::max_element(inner.weight.begin(), inner.weight.end());
        auto lifted = unit_interval_weights(rest_graph, *rest_umbrella, inner.threshold, top + 1);

        cert.threshold = inner.threshold;
        cert.weight.resize(n);
        for (std::size_t i = 0; i < members.size(); ++i) cert.weight[members[i]] = inner.weight[i];
        for (std::size_t i = 0; i < others.size(); ++i) cert.weight[others[i]] = lifted[i];
        return finish(std::move(cert));
    }

    return finish(synthesize_weights(g, part).certificate);
}

}  // namespace ptg
