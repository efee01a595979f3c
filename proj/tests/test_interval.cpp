#include "helpers.hpp"

#include "ptg/generators.hpp"
#include "ptg/interval.hpp"
#include "ptg/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ptg;

namespace {

bool is_lex_bfs(const Graph& g, const VertexList& order) {
    // For a < b < c with ac in E and ab not in E there must be d < a with db in E, dc not in E.
    const std::size_t n = order.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                if (!g.adjacent(order[a], order[c]) || g.adjacent(order[a], order[b])) continue;
                bool found = false;
                for (std::size_t d = 0; d < a && !found; ++d)
                    found = g.adjacent(order[d], order[b]) && !g.adjacent(order[d], order[c]);
                if (!found) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("interval: lex_bfs produces a lexicographic BFS order") {
    oracle::enumerate_labeled_graphs(5, [](const Graph& g) {
        const auto order = lex_bfs(g);
        CHECK(order.size() == g.vertex_count());
        if (g.vertex_count() > 0) CHECK(order.front() == 0);
        CHECK(is_lex_bfs(g, order));
    });
}

TEST_CASE("interval: recognition agrees with the oracle on all graphs with 6 vertices") {
    std::size_t yes = 0;
    oracle::enumerate_labeled_graphs(6, [&](const Graph& g) {
        const auto cp = recognize_interval(g);
        const bool truth = oracle::brute_force_is_interval(g);
        REQUIRE(cp.has_value() == truth);
        if (cp) {
            ++yes;
            CHECK(is_valid_clique_path(g, *cp));
            CHECK(model_represents(g, interval_model_from_clique_path(g, *cp)));
        }
    });
    CHECK(yes > 0);
}

TEST_CASE("interval: random interval graphs on up to 60 vertices") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        // Intersection graph of random integer intervals.
        const std::size_t n = 5 + seed % 56;
        std::vector<std::pair<int, int>> iv;
        std::uint64_t x = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        for (std::size_t i = 0; i < n; ++i) {
            x = x * 6364136223846793005ULL + 1442695040888963407ULL;
            const int l = static_cast<int>((x >> 33) % (3 * n));
            const int len = static_cast<int>((x >> 20) % 8);
            iv.emplace_back(l, l + len);
        }
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second) edges.emplace_back(u, v);
        const Graph g(n, edges);
        const auto cp = recognize_interval(g);
        REQUIRE(cp.has_value());
        CHECK(is_valid_clique_path(g, *cp));
    }
}

TEST_CASE("interval: non-interval graphs") {
    CHECK_FALSE(recognize_interval(test::cycle(4)).has_value());
    CHECK_FALSE(recognize_interval(test::cycle(7)).has_value());
    CHECK_FALSE(recognize_interval(fixture("net")).has_value());
    CHECK_FALSE(recognize_interval(fixture("tent")).has_value());
}

TEST_CASE("interval: fig3 has five maximal cliques") {
    const Graph g = fixture("fig3");
    const auto cp = recognize_interval(g);
    REQUIRE(cp);
    CHECK(cp->cliques.size() == 5);
    CHECK(is_valid_clique_path(g, *cp));
    std::vector<VertexList> expected{{1, 4, 5}, {2, 3, 4, 5}, {4, 5, 6}, {5, 6, 7}, {0, 5}};
    for (const auto& c : expected) CHECK(std::find(cp->cliques.begin(), cp->cliques.end(), c) != cp->cliques.end());
}

TEST_CASE("interval: clique path validator rejects bad paths") {
    const Graph p = test::path(4);
    CHECK(is_valid_clique_path(p, CliquePath{{{0, 1}, {1, 2}, {2, 3}}}));
    CHECK_FALSE(is_valid_clique_path(p, CliquePath{{{0, 1}, {2, 3}, {1, 2}}}));
    CHECK_FALSE(is_valid_clique_path(p, CliquePath{{{0, 1}, {1, 2}}}));
    CHECK_FALSE(is_valid_clique_path(p, CliquePath{{{0, 1, 2}, {2, 3}}}));
}

TEST_CASE("interval: umbrella ordering agrees with the unit interval oracle") {
    oracle::enumerate_labeled_graphs(6, [](const Graph& g) {
        const auto sigma = umbrella_ordering(g);
        REQUIRE(sigma.has_value() == oracle::brute_force_is_unit_interval(g));
        if (sigma) CHECK(check_umbrella_ordering(g, *sigma));
    });
    CHECK_FALSE(umbrella_ordering(test::claw()).has_value());
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph g = random_unit_interval(40, seed, 12.0);
        const auto sigma = umbrella_ordering(g);
        REQUIRE(sigma);
        CHECK(check_umbrella_ordering(g, *sigma));
    }
}

TEST_CASE("interval: model from a clique path") {
    const Graph g = test::path(3);
    const auto m = interval_model_from_clique_path(g, CliquePath{{{0, 1}, {1, 2}}});
    CHECK(m.left[0] == 1);
    CHECK(m.right[0] == 1);
    CHECK(m.left[1] == 1);
    CHECK(m.right[1] == 2);
    CHECK(m.left[2] == 2);
    CHECK(model_represents(g, m));
}

TEST_CASE("interval: maximum nesting depth") {
    IntervalModel m;
    m.left = {3, 2, 1, 5};
    m.right = {3, 4, 5, 6};
    CHECK(max_nesting_depth(m) == 3);
    IntervalModel single;
    single.left = {1};
    single.right = {1};
    CHECK(max_nesting_depth(single) == 1);
    CHECK(max_nesting_depth(IntervalModel{}) == 0);
    // Equal endpoints do not nest strictly.
    IntervalModel flat;
    flat.left = {1, 1};
    flat.right = {2, 3};
    CHECK(max_nesting_depth(flat) == 1);
}
