#include "ptg/errors.hpp"
#include "ptg/generators.hpp"
#include "ptg/interval.hpp"
#include "ptg/io.hpp"
#include "ptg/paired_threshold.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ptg;

namespace {

Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

std::vector<std::string> render(const std::vector<Rational>& w) {
    std::vector<std::string> out;
    for (const auto& x : w) out.push_back(to_decimal_string(x));
    return out;
}

py::dict recognition_dict(const RecognitionResult& r) {
    py::dict d;
    d["paired_threshold"] = r.paired_threshold;
    d["reason"] = to_string(r.reason);
    if (r.weights) {
        d["threshold"] = to_decimal_string(r.weights->threshold);
        d["weights"] = render(r.weights->weight);
    }
    if (r.broom) {
        d["sigma"] = r.broom->sigma.sequence();
        d["p"] = r.broom->p;
    }
    if (r.partition) {
        d["independent"] = r.partition->independent;
        d["umbrella"] = r.partition->umbrella.sequence();
    }
    d["left_candidates"] = r.left_candidates;
    d["right_candidates"] = r.right_candidates;
    return d;
}

}  // namespace

PYBIND11_MODULE(_ptg, m) {
    m.doc() = "Paired threshold graph recognition with certificates";

    py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("fixture", [](const std::string& name) { return fixture(name); }, py::arg("name"));
    m.def("fixture_names", &fixture_names);
    m.def("nested_family", &nested_family, py::arg("k"));
    m.def("benchmark_instance", &benchmark_instance, py::arg("n"));
    m.def(
        "pt_from_weights",
        [](const std::vector<std::string>& weights, const std::string& threshold) {
            std::vector<Rational> w;
            for (const auto& s : weights) w.push_back(parse_rational(s));
            return pt_from_weights(w, parse_rational(threshold));
        },
        py::arg("weights"), py::arg("threshold"));
    m.def("parse_graph", [](const std::string& text) { return io::parse_graph(text).graph; }, py::arg("text"));
    m.def("render_graph", &io::render_graph, py::arg("graph"));

    m.def(
        "recognize",
        [](const Graph& g, bool weights, bool self_check) {
            RecognizeOptions options;
            options.build_weights = weights;
            options.self_check = self_check;
            return recognition_dict(recognize(g, options));
        },
        py::arg("graph"), py::arg("weights") = true, py::arg("self_check") = true);
    m.def(
        "check_weight_certificate",
        [](const Graph& g, const std::vector<std::string>& weights, const std::string& threshold) {
            WeightCertificate c;
            for (const auto& s : weights) c.weight.push_back(parse_rational(s));
            c.threshold = parse_rational(threshold);
            return static_cast<bool>(check_weight_certificate(g, c));
        },
        py::arg("graph"), py::arg("weights"), py::arg("threshold"));
    m.def(
        "check_broom",
        [](const Graph& g, const VertexList& sigma, std::size_t p) {
            return check_broom(g, BroomCertificate{VertexOrdering(sigma, g.vertex_count()), p});
        },
        py::arg("graph"), py::arg("sigma"), py::arg("p"));
    m.def(
        "clique_path",
        [](const Graph& g) -> std::optional<std::vector<VertexList>> {
            auto cp = recognize_interval(g);
            if (!cp) return std::nullopt;
            return cp->cliques;
        },
        py::arg("graph"));
}
