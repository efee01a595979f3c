// Acceptance suite: one PASS/FAIL line per criterion; nonzero exit on any failure.

#include "ptg/generators.hpp"
#include "ptg/interval.hpp"
#include "ptg/oracle.hpp"
#include "ptg/paired_threshold.hpp"
#include "ptg/threshold.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace ptg;

namespace {

struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures++ == 0) first_failure = what;
    }
};

// Shared by criteria 2 and 6: every YES instance is re-checked here.
struct YesAudit {
    Tally certificates;
    Tally interval;

    void record(const Graph& g, const RecognitionResult& r, const std::string& label) {
        if (!r.paired_threshold) return;
        certificates.expect(r.weights && check_weight_certificate(g, *r.weights), label + ": weight certificate");
        certificates.expect(r.broom && check_broom(g, *r.broom), label + ": broom certificate");
        interval.expect(recognize_interval(g).has_value(), label + ": not interval");
    }
};

YesAudit audit;
int failed_criteria = 0;

void report(int number, const char* title, const Tally& t, double seconds) {
    const bool ok = t.failures == 0 && t.checks > 0;
    if (!ok) ++failed_criteria;
    std::printf("%s criterion %d (%s): %zu checks, %zu failures, %.1f s%s%s\n", ok ? "PASS" : "FAIL", number, title,
                t.checks, t.failures, seconds, t.failures ? "; first: " : "", t.first_failure.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string describe(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.vertex_count() << " edges";
    for (auto [u, v] : g.edges()) out << ' ' << u << '-' << v;
    return out.str();
}

Tally containment_sweep;

Tally criterion_oracle() {
    Tally t;
    oracle::enumerate_labeled_graphs(6, [&](const Graph& g) {
        const auto r = recognize(g);
        const bool ptg = oracle::brute_force_is_paired_threshold(g);
        t.expect(r.paired_threshold == ptg, "mismatch on " + describe(g));
        audit.record(g, r, describe(g));
        const bool uig = oracle::brute_force_is_unit_interval(g);
        const bool interval = oracle::brute_force_is_interval(g);
        containment_sweep.expect(!uig || ptg, "unit interval but not PTG: " + describe(g));
        containment_sweep.expect(!ptg || interval, "PTG but not interval: " + describe(g));
    });
    for (std::size_t n : {7U, 8U}) {
        std::mt19937_64 rng(1000 + n);
        for (int i = 0; i < 10000; ++i) {
            const double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
            const Graph g = random_graph(n, density, rng());
            const auto r = recognize(g);
            t.expect(r.paired_threshold == oracle::brute_force_is_paired_threshold(g), "mismatch on " + describe(g));
            audit.record(g, r, describe(g));
        }
    }
    return t;
}

Tally criterion_certificates() {
    Tally extra;
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + rng() % 200;
        const auto inst = random_pt_weights(n, rng());
        const Graph g = pt_from_weights(inst.weight, inst.threshold);
        const auto r = recognize(g);
        extra.expect(r.paired_threshold, "pt_from_weights instance rejected, n=" + std::to_string(n));
        audit.record(g, r, "pt_from_weights n=" + std::to_string(n));
    }
    Tally t = audit.certificates;
    t.checks += extra.checks;
    t.failures += extra.failures;
    if (t.first_failure.empty()) t.first_failure = extra.first_failure;
    return t;
}

Tally criterion_fixtures() {
    Tally t;
    for (const char* name : {"net", "tent", "u3k2", "u2p3", "up2p4"})
        t.expect(!recognize(fixture(name)).paired_threshold, std::string(name) + " accepted");
    for (const char* name : {"net", "tent"}) {
        const Graph g = fixture(name);
        for (Vertex drop = 0; drop < g.vertex_count(); ++drop) {
            VertexList keep;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (v != drop) keep.push_back(v);
            const Graph h = induced_subgraph(g, keep);
            const auto r = recognize(h);
            t.expect(r.paired_threshold, std::string(name) + " minus " + std::to_string(drop) + " rejected");
            audit.record(h, r, std::string(name) + " minus vertex");
        }
    }
    for (const char* name : {"two_k2", "p4", "c4"}) {
        const Graph g = fixture(name);
        t.expect(!recognize_threshold(g), std::string(name) + " recognized as threshold");
        t.expect(!oracle::brute_force_is_threshold(g), std::string(name) + " threshold by brute force");
    }
    return t;
}

Tally criterion_weighted_example() {
    Tally t;
    const char* caption[] = {"20",  "40",  "60",  "724", "725", "726", "747",     "808",    "809",     "810",
                             "831", "832", "853", "854", "875", "876", "1525.85", "1544.9", "1604.95", "1653"};
    std::vector<Rational> w;
    for (const char* s : caption) w.push_back(parse_rational(s));
    const Graph g = pt_from_weights(w, 800);
    const auto r = recognize(g);
    t.expect(r.paired_threshold, "recognize rejected the weighted graph");
    audit.record(g, r, "weighted example");
    t.expect(broom_from_weights(g, WeightCertificate{w, 800}).p == 3, "broom_from_weights p != 3");

    VertexList umbrella;
    for (Vertex v = 3; v < 20; ++v) umbrella.push_back(v);
    const PTPartition part{{0, 1, 2}, VertexOrdering(umbrella, 20)};
    t.expect(check_partition(g, part), "caption partition invalid");
    const auto s = synthesize_weights(g, part);
    t.expect(s.certificate.threshold == 800, "threshold != 2n^2");
    t.expect(satisfies_weight_chain(s), "chain with pivots 400 and 1200 fails");
    t.expect(s.p == 3, "p != 3");
    t.expect(s.q == 8, "q != 8");
    t.expect(s.t == 16, "t != 16");
    t.expect(check_weight_certificate(g, s.certificate).ok, "synthesized weights do not realize the graph");
    return t;
}

Tally criterion_nested() {
    Tally t;
    for (std::size_t k = 1; k <= 8; ++k) {
        const Graph g = nested_family(k);
        const auto r = recognize(g);
        t.expect(r.paired_threshold, "nested_family(" + std::to_string(k) + ") rejected");
        audit.record(g, r, "nested");
        const auto cp = recognize_interval(g);
        t.expect(cp.has_value(), "no clique path");
        if (!cp) continue;
        const auto depth = max_nesting_depth(interval_model_from_clique_path(g, *cp));
        t.expect(depth >= k, "nesting depth " + std::to_string(depth) + " < " + std::to_string(k));
    }
    return t;
}

Tally criterion_containments() {
    Tally t;
    std::mt19937_64 rng(77);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + rng() % 100;
        const Graph g = random_threshold(n, rng());
        const auto r = recognize(g);
        t.expect(r.paired_threshold, "threshold graph rejected, n=" + std::to_string(n));
        audit.record(g, r, "threshold");
    }
    for (const Tally* part : {&containment_sweep, &audit.interval}) {
        t.checks += part->checks;
        t.failures += part->failures;
        if (t.first_failure.empty()) t.first_failure = part->first_failure;
    }
    return t;
}

Graph largest_component(const Graph& g) {
    auto comps = connected_components(g);
    auto it = std::max_element(comps.begin(), comps.end(),
                               [](const VertexList& a, const VertexList& b) { return a.size() < b.size(); });
    return induced_subgraph(g, *it);
}

Tally criterion_closure() {
    Tally t;
    std::mt19937_64 rng(5);
    int pairs = 0;
    while (pairs < 100) {
        const auto inst = random_pt_weights(10 + rng() % 60, rng());
        const Graph base = largest_component(pt_from_weights(inst.weight, inst.threshold));
        if (base.vertex_count() < 4) continue;
        ++pairs;
        const Graph uig = random_unit_interval(5 + rng() % 40, rng(), 6.0);
        const Graph g = disjoint_union(base, uig);
        const auto r = recognize(g);
        t.expect(r.paired_threshold, "union rejected");
        t.expect(r.weights && check_weight_certificate(g, *r.weights), "lifted weights invalid");
        t.expect(r.broom && check_broom(g, *r.broom), "lifted broom invalid");
        audit.record(g, r, "union");
    }
    for (const char* other : {"net", "tent"}) {
        const auto r = recognize(disjoint_union(fixture("net"), fixture(other)));
        t.expect(!r.paired_threshold && r.reason == Reason::TwoNonUIGComponents,
                 std::string("net + ") + other + " reason " + to_string(r.reason));
    }
    return t;
}

double best_time_ms(std::size_t n, int runs) {
    const Graph g = benchmark_instance(n);
    RecognizeOptions options;
    options.self_check = false;
    options.build_weights = false;
    double best = 1e300;
    for (int i = 0; i < runs; ++i) {
        const auto start = std::chrono::steady_clock::now();
        const auto r = recognize(g, options);
        best = std::min(best, seconds_since(start) * 1000.0);
        if (!r.paired_threshold) return -1;
    }
    return best;
}

Tally criterion_performance() {
    Tally t;
    const double small = best_time_ms(10000, 5);
    const double large = best_time_ms(100000, 3);
    t.expect(small > 0 && large > 0, "benchmark instance rejected");
    const double ratio = large / small;
    std::printf("bench: n=1e4 %.1f ms, n=1e5 %.1f ms, ratio %.2f\n", small, large, ratio);
    t.expect(ratio <= 15.0, "time ratio " + std::to_string(ratio) + " > 15");
    t.expect(large < 10000.0, "n=1e5 took " + std::to_string(large) + " ms");
    return t;
}

struct Outcome {
    const char* title;
    Tally tally;
    double seconds = 0;
};

}  // namespace

int main() {
    // Criteria 2 and 6 aggregate checks over YES instances from the others, so
    // they are evaluated last and everything is reported in numeric order.
    std::vector<std::pair<int, Outcome>> outcomes;
    auto run = [&](int number, const char* title, const std::function<Tally()>& body) {
        const auto start = std::chrono::steady_clock::now();
        Tally t = body();
        outcomes.push_back({number, Outcome{title, std::move(t), seconds_since(start)}});
    };
    run(1, "oracle equivalence n=6 exhaustive, n=7,8 random", criterion_oracle);
    run(3, "named obstructions and minimality", criterion_fixtures);
    run(4, "weighted example reproduction", criterion_weighted_example);
    run(5, "nested family", criterion_nested);
    run(7, "union with unit interval graphs", criterion_closure);
    run(6, "class containments", criterion_containments);
    run(2, "certificate soundness", criterion_certificates);
    run(8, "linear scaling", criterion_performance);
    std::sort(outcomes.begin(), outcomes.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [number, o] : outcomes) report(number, o.title, o.tally, o.seconds);
    return failed_criteria == 0 ? 0 : 1;
}
