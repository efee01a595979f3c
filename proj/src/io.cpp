#include "ptg/io.hpp"

#include "ptg/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace ptg::io {

namespace {

using nlohmann::json;

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text, char comment) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(begin, end - begin);
        if (auto c = raw.find(comment); comment && c != std::string_view::npos) raw = raw.substr(0, c);
        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        for (std::string tok; in >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        begin = end + 1;
    }
    return lines;
}

std::size_t to_count(const std::string& tok, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError("expected a nonnegative integer, got '" + tok + "'", line);
    return value;
}

class EdgeCollector {
public:
    void add(std::size_t u, std::size_t v, std::size_t line) {
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line);
        const Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        if (!seen_.insert(e).second)
            throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), line);
        edges_.push_back(e);
    }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    std::set<Edge> seen_;
    std::vector<Edge> edges_;
};

ParsedGraph parse_dimacs(const std::vector<Line>& lines) {
    std::size_t n = 0, m = 0;
    bool header = false;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> raw;
    for (const Line& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "c") continue;
        if (t[0] == "p") {
            if (header) throw ParseError("second problem line", line.number);
            const std::size_t off = (t.size() == 4) ? 2 : 1;
            if (t.size() != off + 2) throw ParseError("expected 'p [edge] <n> <m>'", line.number);
            n = to_count(t[off], line.number);
            m = to_count(t[off + 1], line.number);
            header = true;
        } else if (t[0] == "e") {
            if (!header) throw ParseError("edge before problem line", line.number);
            if (t.size() != 3) throw ParseError("expected 'e <u> <v>'", line.number);
            raw.emplace_back(to_count(t[1], line.number), to_count(t[2], line.number), line.number);
        } else {
            throw ParseError("unrecognized line type '" + t[0] + "'", line.number);
        }
    }
    if (!header) throw ParseError("missing problem line", 0);
    const bool zero_based = std::any_of(raw.begin(), raw.end(),
                                        [](const auto& r) { return std::get<0>(r) == 0 || std::get<1>(r) == 0; });
    const std::size_t base = zero_based ? 0 : 1;
    EdgeCollector edges;
    for (auto [u, v, line] : raw) {
        if (u - base >= n || v - base >= n || u < base || v < base)
            throw ParseError("vertex out of range for n = " + std::to_string(n), line);
        edges.add(u - base, v - base, line);
    }
    if (edges.edges().size() != m)
        throw ParseError("problem line declares " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.edges().size()),
                         0);
    ParsedGraph out{Graph(n, edges.edges()), {}};
    for (std::size_t v = 0; v < n; ++v) out.labels.push_back(std::to_string(v + base));
    return out;
}

ParsedGraph parse_edge_list(const std::vector<Line>& lines) {
    std::optional<std::size_t> declared;
    std::map<std::string, std::size_t> ids;
    std::vector<std::string> labels;
    EdgeCollector edges;
    auto id_of = [&](const std::string& tok, std::size_t line) -> std::size_t {
        if (declared) {
            const std::size_t v = to_count(tok, line);
            if (v >= *declared) throw ParseError("vertex " + tok + " out of range for n = " + std::to_string(*declared), line);
            return v;
        }
        auto [it, fresh] = ids.emplace(tok, labels.size());
        if (fresh) labels.push_back(tok);
        return it->second;
    };
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& t = line.tokens;
        if (i == 0 && t[0] == "n") {
            if (t.size() != 2) throw ParseError("expected 'n <count>'", line.number);
            declared = to_count(t[1], line.number);
            continue;
        }
        if (t.size() != 2) throw ParseError("expected 'u v'", line.number);
        const std::size_t u = id_of(t[0], line.number);
        const std::size_t v = id_of(t[1], line.number);
        edges.add(u, v, line.number);
    }
    if (declared) {
        labels.clear();
        for (std::size_t v = 0; v < *declared; ++v) labels.push_back(std::to_string(v));
    }
    return ParsedGraph{Graph(labels.size(), edges.edges()), labels};
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string require_string(const json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a decimal string", 0);
    return j.get<std::string>();
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
    auto probe = tokenize(text, '#');
    const bool dimacs = !probe.empty() && (probe[0].tokens[0] == "p" || probe[0].tokens[0] == "c" ||
                                           probe[0].tokens[0] == "e");
    if (dimacs) return parse_dimacs(tokenize(text, '\0'));
    return parse_edge_list(probe);
}

std::string render_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string certificate_to_json(const Graph& g, const WeightCertificate& weights, const BroomCertificate& broom) {
    json j;
    j["n"] = g.vertex_count();
    j["t_pm"] = to_decimal_string(weights.threshold);
    json w = json::array();
    for (const auto& x : weights.weight) w.push_back(to_decimal_string(x));
    j["weights"] = std::move(w);
    j["broom"] = {{"sigma", broom.sigma.sequence()}, {"p", broom.p}};
    return j.dump(2) + "\n";
}

ParsedCertificate certificate_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("t_pm") || !j.contains("weights") || !j.contains("broom"))
        throw ParseError("certificate needs keys n, t_pm, weights, broom", 0);
    ParsedCertificate out;
    try {
        out.n = j.at("n").get<std::size_t>();
        out.weights.threshold = parse_rational(require_string(j.at("t_pm"), "t_pm"));
        for (const auto& x : j.at("weights")) out.weights.weight.push_back(parse_rational(require_string(x, "weight")));
        const json& b = j.at("broom");
        VertexList sigma = b.at("sigma").get<VertexList>();
        out.broom.p = b.at("p").get<std::size_t>();
        out.broom.sigma = VertexOrdering(std::move(sigma), out.n);
    } catch (const json::exception& e) {
        throw ParseError(std::string("schema violation: ") + e.what(), 0);
    } catch (const ContractError& e) {
        throw ParseError(std::string("invalid broom ordering: ") + e.what(), 0);
    }
    if (out.weights.weight.size() != out.n) throw ParseError("weights length differs from n", 0);
    return out;
}

std::string render_model_table(const CliquePath& cp, const IntervalModel& model,
                               const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "cliques " << cp.cliques.size() << '\n';
    for (std::size_t i = 0; i < cp.cliques.size(); ++i) {
        out << "  C" << i + 1 << ':';
        for (Vertex v : cp.cliques[i]) out << ' ' << labels[v];
        out << '\n';
    }
    out << "vertex\tleft\tright\n";
    for (std::size_t v = 0; v < model.size(); ++v)
        out << labels[v] << '\t' << to_decimal_string(model.left[v]) << '\t' << to_decimal_string(model.right[v]) << '\n';
    out << "max nesting depth " << max_nesting_depth(model) << '\n';
    return out.str();
}

std::string render_model_svg(const IntervalModel& model, const std::vector<std::string>& labels) {
    constexpr int kUnit = 40, kRow = 18, kMargin = 60;
    Rational hi = 1;
    for (const auto& r : model.right) hi = std::max(hi, r);
    const int columns = static_cast<int>(hi.get_d()) + 1;
    const int width = 2 * kMargin + columns * kUnit;
    const int height = 2 * kMargin + static_cast<int>(model.size()) * kRow;
    auto x_of = [&](const Rational& q) { return kMargin + q.get_d() * kUnit; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int c = 1; c < columns; ++c)
        out << "<line x1=\"" << kMargin + c * kUnit << "\" y1=\"" << kMargin / 2 << "\" x2=\"" << kMargin + c * kUnit
            << "\" y2=\"" << height - kMargin / 2 << "\" stroke=\"#ddd\"/>\n"
            << "<text x=\"" << kMargin + c * kUnit << "\" y=\"" << kMargin / 2 - 4
            << "\" font-size=\"11\" text-anchor=\"middle\">" << c << "</text>\n";
    for (std::size_t v = 0; v < model.size(); ++v) {
        const int y = kMargin + static_cast<int>(v) * kRow;
        const double x1 = x_of(model.left[v]) - kUnit / 4.0;
        const double x2 = x_of(model.right[v]) + kUnit / 4.0;
        out << "<text x=\"" << kMargin - 8 << "\" y=\"" << y + 4 << "\" font-size=\"12\" text-anchor=\"end\">"
            << xml_escape(labels[v]) << "</text>\n";
        out << "<line x1=\"" << x1 << "\" y1=\"" << y << "\" x2=\"" << x2 << "\" y2=\"" << y
            << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ptg::io
