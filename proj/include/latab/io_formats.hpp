#pragma once

#include "latab/isotopy_graph.hpp"
#include "latab/tableau.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latab {

inline constexpr std::string_view kToolVersion = "latab 0.1.0";

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& reason)
        : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + reason),
          line(line),
          column(column) {}
    int line;
    int column;
};

/// One row per line, entries separated by single spaces, LF endings:
/// "3 1 2\n1 2\n".
std::string render_tableau(const LatinTableau& T);

/// Inverse of render_tableau: infers the shape from line lengths, then runs
/// the full Latin validation.
LatinTableau parse_tableau(std::string_view text);

/// Undirected DOT over one or more components; byte-identical across runs.
/// Nodes are numbered by discovery order across components, labels carry the
/// filling rows; merged edge labels are joined with '='.
std::string render_dot(const std::vector<IsotopyGraph>& components);
std::string render_dot(const IsotopyGraph& g);

/// Fixed-key-order JSON for one component:
/// {shape, vertices, edges, report}, all indices 1-based.
std::string render_json(const IsotopyGraph& g, const AnalysisReport& report);

/// {shape, components: [...]} over a whole shape.
std::string render_json(const Partition& shape,
                        const std::vector<std::pair<const IsotopyGraph*, AnalysisReport>>& components);

/// Human-readable report block used by the analyze command.
std::string render_report_text(const IsotopyGraph& g, const AnalysisReport& report, int index, int count);

}  // namespace latab
