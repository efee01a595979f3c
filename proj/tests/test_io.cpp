#include "helpers.hpp"

#include "ptg/errors.hpp"
#include "ptg/generators.hpp"
#include "ptg/interval.hpp"
#include "ptg/io.hpp"
#include "ptg/paired_threshold.hpp"

#include <doctest.h>

using namespace ptg;

namespace {

std::size_t line_of(std::string_view text) {
    try {
        io::parse_graph(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("io: edge list with arbitrary labels") {
    const auto p = io::parse_graph("# a path\na b\nb c   # trailing comment\n\nc d\n");
    CHECK(p.graph.vertex_count() == 4);
    CHECK(p.graph.edge_count() == 3);
    CHECK(p.labels == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(p.graph.adjacent(0, 1));
    CHECK_FALSE(p.graph.adjacent(0, 2));
}

TEST_CASE("io: edge list with a vertex count header") {
    const auto p = io::parse_graph("n 5\n0 1\n3 4\n");
    CHECK(p.graph.vertex_count() == 5);
    CHECK(p.graph.degree(2) == 0);
    CHECK(p.labels[2] == "2");
    CHECK(io::parse_graph("n 3\n").graph.edge_count() == 0);
    CHECK(io::parse_graph("").graph.vertex_count() == 0);
}

TEST_CASE("io: DIMACS") {
    const auto one = io::parse_graph("c example\np edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(one.graph.vertex_count() == 3);
    CHECK(one.graph.adjacent(0, 1));
    CHECK(one.graph.adjacent(1, 2));
    CHECK(one.labels.front() == "1");

    const auto zero = io::parse_graph("p 2 1\ne 0 1\n");
    CHECK(zero.graph.vertex_count() == 2);
    CHECK(zero.graph.adjacent(0, 1));
    CHECK(zero.labels.front() == "0");
}

TEST_CASE("io: malformed input reports the line") {
    CHECK(line_of("a b\nb b\n") == 2);
    CHECK(line_of("a b\nb a\n") == 2);
    CHECK(line_of("a b\nc\n") == 2);
    CHECK(line_of("n 3\n0 1\n1 3\n") == 3);
    CHECK(line_of("n 3\n0 x\n") == 2);
    CHECK(line_of("p edge 3 1\ne 1 4\n") == 2);
    CHECK(line_of("c x\np edge 3 1\nq 1 2\n") == 3);
    CHECK(line_of("c x\ne 1 2\n") == 2);
    CHECK_THROWS_AS(io::parse_graph("p edge 3 2\ne 1 2\n"), ParseError);
}

TEST_CASE("io: render and parse round trip") {
    for (const auto& name : fixture_names()) {
        const Graph g = fixture(name);
        CHECK(io::parse_graph(io::render_graph(g)).graph == g);
    }
    const Graph lonely = Graph::edgeless(3);
    CHECK(io::parse_graph(io::render_graph(lonely)).graph == lonely);
}

TEST_CASE("io: certificate JSON round trip") {
    const Graph g = nested_family(3);
    const auto r = recognize(g);
    REQUIRE(r.paired_threshold);
    const std::string text = io::certificate_to_json(g, *r.weights, *r.broom);
    const auto back = io::certificate_from_json(text);
    CHECK(back.n == g.vertex_count());
    CHECK(back.weights.weight == r.weights->weight);
    CHECK(back.weights.threshold == r.weights->threshold);
    CHECK(back.broom.p == r.broom->p);
    CHECK(back.broom.sigma == r.broom->sigma);
    CHECK(check_weight_certificate(g, back.weights));
    CHECK(check_broom(g, back.broom));

    const auto fractional = io::certificate_from_json(
        R"({"n": 2, "t_pm": "1.5", "weights": ["0.75", "2"], "broom": {"sigma": [0, 1], "p": 1}})");
    CHECK(fractional.weights.weight[0] == Rational(3, 4));
    CHECK(fractional.weights.threshold == Rational(3, 2));

    CHECK_THROWS_AS(io::certificate_from_json("{"), ParseError);
    CHECK_THROWS_AS(io::certificate_from_json(R"({"n": 2})"), ParseError);
    CHECK_THROWS_AS(io::certificate_from_json(
                        R"({"n": 2, "t_pm": 1, "weights": ["1", "2"], "broom": {"sigma": [0, 1], "p": 1}})"),
                    ParseError);
    CHECK_THROWS_AS(io::certificate_from_json(
                        R"({"n": 2, "t_pm": "1", "weights": ["1"], "broom": {"sigma": [0, 1], "p": 1}})"),
                    ParseError);
    CHECK_THROWS_AS(io::certificate_from_json(
                        R"({"n": 2, "t_pm": "1", "weights": ["1", "2"], "broom": {"sigma": [0, 0], "p": 1}})"),
                    ParseError);
}

TEST_CASE("io: interval model rendering") {
    const auto p = io::parse_graph(io::render_graph(fixture("fig3")));
    const auto cp = recognize_interval(p.graph);
    REQUIRE(cp);
    const auto model = interval_model_from_clique_path(p.graph, *cp);
    const std::string table = io::render_model_table(*cp, model, p.labels);
    CHECK(table.find("cliques 5") != std::string::npos);
    CHECK(table.find("max nesting depth") != std::string::npos);

    const std::string svg = io::render_model_svg(model, p.labels);
    CHECK(svg == io::render_model_svg(model, p.labels));
    CHECK(svg.rfind("<svg", 0) == 0);

    const std::vector<std::string> odd{"<a>", "b&c", "d", "e", "f", "g", "h", "i"};
    const std::string escaped = io::render_model_svg(model, odd);
    CHECK(escaped.find("&lt;a&gt;") != std::string::npos);
    CHECK(escaped.find("b&amp;c") != std::string::npos);
}
