#include "helpers.hpp"

#include "ptg/errors.hpp"
#include "ptg/generators.hpp"
#include "ptg/interval.hpp"
#include "ptg/oracle.hpp"
#include "ptg/paired_threshold.hpp"
#include "ptg/threshold.hpp"

#include <doctest.h>

using namespace ptg;

TEST_CASE("generators: fixtures") {
    CHECK(fixture("two_k2").edge_count() == 2);
    CHECK(fixture("p4").edge_count() == 3);
    CHECK(fixture("c4").edge_count() == 4);
    CHECK(fixture("net").edge_count() == 6);
    CHECK(fixture("tent").edge_count() == 9);
    CHECK(fixture("u3k2").edge_count() == 9);
    CHECK(fixture("u2p3").edge_count() == 10);
    CHECK(fixture("up2p4").edge_count() == 10);
    CHECK(fixture("fig3").edge_count() == 13);
    CHECK(fixture_names().size() == 9);
    for (const auto& name : fixture_names()) CHECK_NOTHROW(fixture(name));
    CHECK_THROWS_AS(fixture("petersen"), ContractError);
}

TEST_CASE("generators: removing the universal vertex leaves a unit interval graph") {
    for (const char* name : {"u3k2", "u2p3", "up2p4"}) {
        const Graph g = fixture(name);
        CHECK(g.degree(6) == 6);
        const VertexList rest{0, 1, 2, 3, 4, 5};
        CHECK(umbrella_ordering(induced_subgraph(g, rest)));
        CHECK(recognize_interval(g));
    }
}

TEST_CASE("generators: net and tent are minimal non-members") {
    for (const char* name : {"net", "tent"}) {
        const Graph g = fixture(name);
        CHECK_FALSE(oracle::brute_force_is_paired_threshold(g));
        for (Vertex drop = 0; drop < g.vertex_count(); ++drop) {
            VertexList keep;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (v != drop) keep.push_back(v);
            CHECK(oracle::brute_force_is_paired_threshold(induced_subgraph(g, keep)));
        }
    }
}

TEST_CASE("generators: nested family") {
    for (std::size_t k = 1; k <= 6; ++k) {
        const Graph g = nested_family(k);
        REQUIRE(g.vertex_count() == 5 * k);
        CHECK(g.edge_count() == 6 * k * k - k + k * (k + 1) / 2);
        CHECK(g.degree(0) == k);
        for (Vertex i = 0; i < k; ++i)
            for (Vertex j = 0; j < k; ++j) CHECK_FALSE((i != j && g.adjacent(i, j)));
        for (Vertex i = 0; i + 1 < k; ++i) CHECK(neighborhood_contained(g, i, i + 1) != neighborhood_contained(g, i + 1, i));
        CHECK(recognize(g).paired_threshold);
    }
    CHECK_THROWS_AS(nested_family(0), ContractError);
}

TEST_CASE("generators: graphs from weights") {
    const std::vector<Rational> w{1, 1, 3, 10};
    const Graph g = pt_from_weights(w, 3);
    // 0-1 fails the sum test; 3 fails the difference test against everyone
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(g.degree(3) == 0);
    CHECK(check_weight_certificate(g, WeightCertificate{w, 3}));
    CHECK_THROWS_AS(pt_from_weights(w, 0), ContractError);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = random_pt_weights(40, seed);
        const Graph h = pt_from_weights(inst.weight, inst.threshold);
        CHECK(check_weight_certificate(h, WeightCertificate{inst.weight, inst.threshold}));
        CHECK(recognize(h, RecognizeOptions{true, false}).paired_threshold);
    }
}

TEST_CASE("generators: threshold graphs") {
    // isolated, dominating, isolated, dominating
    const Graph g = threshold_from_creation({false, true, false, true});
    CHECK(g.edge_count() == 1 + 3);
    CHECK(g.degree(3) == 3);
    CHECK(g.degree(2) == 1);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph h = random_threshold(1 + seed % 9, seed);
        CHECK(oracle::brute_force_is_threshold(h));
        CHECK(recognize_threshold(h));
    }
}

TEST_CASE("generators: random unit interval and random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = random_unit_interval(8, seed, 3.0);
        CHECK(oracle::brute_force_is_unit_interval(g));
        CHECK(random_graph(8, 0.5, seed) == random_graph(8, 0.5, seed));
    }
    CHECK(random_graph(10, 0.0, 1).edge_count() == 0);
    CHECK(random_graph(10, 1.0, 1).edge_count() == 45);
}

TEST_CASE("generators: benchmark instance") {
    for (std::size_t n : {8U, 20U, 1000U}) {
        const Graph g = benchmark_instance(n);
        CHECK(g.vertex_count() == n);
        const auto r = recognize(g, RecognizeOptions{true, false});
        CHECK(r.paired_threshold);
        CHECK(check_broom(g, *r.broom));
    }
    CHECK_THROWS_AS(benchmark_instance(7), ContractError);
}
