// Command-line front end: recognize, certify, verify, generate, model, bench.
// Exit codes: 0 success / YES / valid, 1 NO / invalid, 2 usage or input error.

#include "ptg/errors.hpp"
#include "ptg/generators.hpp"
#include "ptg/interval.hpp"
#include "ptg/io.hpp"
#include "ptg/paired_threshold.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ptg;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

nlohmann::json labeled(const VertexList& vs, const std::vector<std::string>& labels) {
    nlohmann::json a = nlohmann::json::array();
    for (Vertex v : vs) a.push_back(labels[v]);
    return a;
}

int cmd_recognize(const std::string& file, bool as_json) {
    const auto parsed = io::parse_graph(read_file(file));
    RecognizeOptions options;
    options.build_weights = false;
    const auto r = recognize(parsed.graph, options);
    if (as_json) {
        nlohmann::json j;
        j["paired_threshold"] = r.paired_threshold;
        j["reason"] = to_string(r.reason);
        j["n"] = parsed.graph.vertex_count();
        j["m"] = parsed.graph.edge_count();
        if (r.partition) {
            j["independent"] = labeled(r.partition->independent, parsed.labels);
            j["umbrella"] = labeled(r.partition->umbrella.sequence(), parsed.labels);
        }
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& c : r.non_unit_interval_components) comps.push_back(labeled(c, parsed.labels));
        j["non_unit_interval_components"] = comps;
        nlohmann::json core = nlohmann::json::array();
        for (const auto& c : r.core_components) core.push_back(labeled(c, parsed.labels));
        j["core_components"] = core;
        j["left_candidates"] = labeled(r.left_candidates, parsed.labels);
        j["right_candidates"] = labeled(r.right_candidates, parsed.labels);
        std::cout << j.dump(2) << '\n';
    } else if (r.paired_threshold) {
        std::cout << "YES\n";
    } else {
        std::cout << "NO " << to_string(r.reason) << '\n';
    }
    return r.paired_threshold ? 0 : 1;
}

int cmd_certify(const std::string& file, const std::string& out_path) {
    const auto parsed = io::parse_graph(read_file(file));
    const auto r = recognize(parsed.graph);
    if (!r.paired_threshold) {
        std::cerr << "not a paired threshold graph: " << to_string(r.reason) << '\n';
        return 1;
    }
    write_output(out_path, io::certificate_to_json(parsed.graph, *r.weights, *r.broom));
    return 0;
}

int cmd_verify(const std::string& graph_file, const std::string& cert_file) {
    const auto parsed = io::parse_graph(read_file(graph_file));
    const auto cert = io::certificate_from_json(read_file(cert_file));
    const Graph& g = parsed.graph;
    if (cert.n != g.vertex_count()) {
        std::cout << "invalid: certificate has n = " << cert.n << ", graph has " << g.vertex_count() << '\n';
        return 1;
    }
    const auto weights = check_weight_certificate(g, cert.weights);
    if (!weights) {
        std::cout << "invalid weights: " << weights.message << '\n';
        if (weights.violation)
            std::cout << "first violating pair: " << parsed.labels[weights.violation->first] << ' '
                      << parsed.labels[weights.violation->second] << '\n';
        return 1;
    }
    if (!check_broom(g, cert.broom)) {
        std::cout << "invalid broom ordering\n";
        return 1;
    }
    std::cout << "valid\n";
    return 0;
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed,
                 const std::string& out_path) {
    auto param = [&](std::size_t i) -> std::string {
        if (i >= params.size()) throw CLI::ValidationError("generate " + family, "missing parameter " + std::to_string(i + 1));
        return params[i];
    };
    auto count = [&](std::size_t i) { return static_cast<std::size_t>(std::stoull(param(i))); };
    Graph g;
    const auto& names = fixture_names();
    if (std::find(names.begin(), names.end(), family) != names.end()) g = fixture(family);
    else if (family == "nested") g = nested_family(count(0));
    else if (family == "threshold") g = random_threshold(count(0), seed);
    else if (family == "uig") g = random_unit_interval(count(0), seed, params.size() > 1 ? std::stod(params[1]) : count(0) / 4.0);
    else if (family == "random") g = random_graph(count(0), std::stod(param(1)), seed);
    else if (family == "ptweights") {
        const auto inst = random_pt_weights(count(0), seed);
        g = pt_from_weights(inst.weight, inst.threshold);
    } else if (family == "bench") g = benchmark_instance(count(0));
    else throw CLI::ValidationError("generate", "unknown family '" + family + "'");
    write_output(out_path, io::render_graph(g));
    return 0;
}

int cmd_model(const std::string& file, const std::string& svg_path) {
    const auto parsed = io::parse_graph(read_file(file));
    const auto cp = recognize_interval(parsed.graph);
    if (!cp) {
        std::cout << "not an interval graph\n";
        return 1;
    }
    const auto model = interval_model_from_clique_path(parsed.graph, *cp);
    std::cout << io::render_model_table(*cp, model, parsed.labels);
    if (!svg_path.empty()) write_output(svg_path, io::render_model_svg(model, parsed.labels));
    return 0;
}

int cmd_bench(std::size_t n, bool no_selfcheck) {
    const Graph g = benchmark_instance(n);
    RecognizeOptions options;
    options.self_check = !no_selfcheck;
    options.build_weights = false;
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = recognize(g, options);
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::cout << "n " << g.vertex_count() << " m " << g.edge_count() << " ms " << ms << '\n';
    if (!r.paired_threshold) {
        std::cerr << "benchmark instance rejected\n";
        return 1;
    }
    if (!no_selfcheck && !check_broom(g, *r.broom)) {
        std::cerr << "broom certificate failed\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Paired threshold graph recognition and certificates"};
    app.require_subcommand(1);
    int status = 0;

    std::string file, file2, out_path, family, svg_path;
    bool as_json = false, no_selfcheck = false;
    std::vector<std::string> params;
    std::uint64_t seed = 1;
    std::size_t n = 0;

    auto* rec = app.add_subcommand("recognize", "decide membership (exit 0 YES, 1 NO)");
    rec->add_option("file", file, "graph file")->required();
    rec->add_flag("--json", as_json, "print a JSON report");
    rec->callback([&] { status = cmd_recognize(file, as_json); });

    auto* cert = app.add_subcommand("certify", "emit weight and broom certificates as JSON");
    cert->add_option("file", file, "graph file")->required();
    cert->add_option("--out", out_path, "output path (default stdout)");
    cert->callback([&] { status = cmd_certify(file, out_path); });

    auto* ver = app.add_subcommand("verify", "re-check a certificate (exit 0 valid, 1 invalid)");
    ver->add_option("graph", file, "graph file")->required();
    ver->add_option("certificate", file2, "certificate JSON")->required();
    ver->callback([&] { status = cmd_verify(file, file2); });

    auto* gen = app.add_subcommand("generate", "emit a graph: a fixture name, or nested <k>, threshold <n>, "
                                               "uig <n> [spread], random <n> <p>, ptweights <n>, bench <n>");
    gen->add_option("family", family, "family name")->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", out_path, "output path (default stdout)");
    gen->callback([&] { status = cmd_generate(family, params, seed, out_path); });

    auto* mod = app.add_subcommand("model", "clique path and interval model");
    mod->add_option("file", file, "graph file")->required();
    mod->add_option("--svg", svg_path, "write an SVG rendering");
    mod->callback([&] { status = cmd_model(file, svg_path); });

    auto* ben = app.add_subcommand("bench", "time recognition on the benchmark family");
    ben->add_option("n", n, "vertex count (>= 8)")->required();
    ben->add_flag("--no-selfcheck", no_selfcheck, "skip certificate re-checks");
    ben->callback([&] { status = cmd_bench(n, no_selfcheck); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return status;
}
