#pragma once

#include "ptg/graph.hpp"
#include "ptg/interval.hpp"
#include "ptg/paired_threshold.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ptg::io {

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> labels;  ///< labels[id] is the input token for vertex id
};

/// Reads either format, chosen by the first meaningful line:
///
/// Edge list: `#` starts a comment; an optional header `n <count>`; then one
/// `u v` pair per line. Without a header, labels are arbitrary tokens given
/// dense ids in first-seen order. With a header, labels must be integers in
/// [0, count), so isolated vertices can be expressed.
///
/// DIMACS: `c` comment lines, one `p [edge] <n> <m>` line, `e <u> <v>` lines.
/// Ids are 1-based unless some endpoint is 0, in which case they are 0-based.
///
/// Throws ParseError (with the line number) on malformed lines, self-loops,
/// duplicate edges and count mismatches.
ParsedGraph parse_graph(std::string_view text);

/// Edge-list text with an `n` header; parse_graph inverts it.
std::string render_graph(const Graph& g);

std::string certificate_to_json(const Graph& g, const WeightCertificate& weights, const BroomCertificate& broom);

struct ParsedCertificate {
    std::size_t n = 0;
    WeightCertificate weights;
    BroomCertificate broom;
};

/// Throws ParseError on malformed JSON or schema violations.
ParsedCertificate certificate_from_json(std::string_view text);

/// Clique path and per-vertex intervals as a plain-text table.
std::string render_model_table(const CliquePath& cp, const IntervalModel& model,
                               const std::vector<std::string>& labels);

/// One horizontal bar per vertex, stacked in vertex order, over a ruler of
/// clique positions.
std::string render_model_svg(const IntervalModel& model, const std::vector<std::string>& labels);

}  // namespace ptg::io
