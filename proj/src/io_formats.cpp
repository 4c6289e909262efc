#include "latab/io_formats.hpp"

#include <json.hpp>

#include <sstream>

namespace latab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join_labels(const std::vector<Transform>& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += '=';
        out += to_string(labels[i]);
    }
    return out;
}

}  // namespace

std::string render_tableau(const LatinTableau& T) {
    std::string out;
    for (const auto& row : T.rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

LatinTableau parse_tableau(std::string_view text) {
    std::vector<std::vector<int>> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (line.empty()) {
            if (pos >= text.size()) break;  // tolerate one trailing blank line
            throw ParseError(line_no, 1, "empty row");
        }
        std::vector<int> row;
        std::istringstream iss{std::string(line)};
        std::string token;
        int column = 1;
        std::size_t consumed = 0;
        while (iss >> token) {
            try {
                std::size_t used = 0;
                int v = std::stoi(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                row.push_back(v);
            } catch (const std::exception&) {
                throw ParseError(line_no, column, "'" + token + "' is not an integer");
            }
            consumed += token.size() + 1;
            column = static_cast<int>(consumed) + 1;
        }
        if (row.empty()) throw ParseError(line_no, 1, "empty row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(1, 1, "no rows");
    std::vector<int> parts;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0 && rows[i].size() > rows[i - 1].size())
            throw ParseError(static_cast<int>(i) + 1, 1, "row lengths must be non-increasing");
        parts.push_back(static_cast<int>(rows[i].size()));
    }
    return validate(Partition(std::move(parts)), rows);
}

std::string render_dot(const std::vector<IsotopyGraph>& components) {
    std::string out = "graph isotopy {\n";
    std::size_t base = 0;
    for (const IsotopyGraph& g : components) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::string label;
            for (const auto& row : g.vertex(i).rows()) {
                if (!label.empty()) label += "\\n";
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (j) label += ' ';
                    label += std::to_string(row[j]);
                }
            }
            out += "  v" + std::to_string(base + i + 1) + " [label=\"" + label + "\"];\n";
        }
        for (const auto& e : g.edges())
            out += "  v" + std::to_string(base + e.u + 1) + " -- v" + std::to_string(base + e.v + 1) +
                   " [label=\"" + join_labels(g.edge_labels(e)) + "\"];\n";
        base += g.size();
    }
    out += "}\n";
    return out;
}

std::string render_dot(const IsotopyGraph& g) {
    std::vector<IsotopyGraph> one;
    one.push_back(g);
    return render_dot(one);
}

namespace {

ordered_json component_json(const IsotopyGraph& g, const AnalysisReport& report) {
    ordered_json j;
    j["shape"] = g.shape().to_string();
    ordered_json verts = ordered_json::array();
    for (std::size_t i = 0; i < g.size(); ++i) verts.push_back(g.vertex(i).rows());
    j["vertices"] = std::move(verts);
    ordered_json edges = ordered_json::array();
    for (const auto& e : g.edges()) {
        ordered_json edge;
        edge["u"] = e.u + 1;
        edge["v"] = e.v + 1;
        ordered_json labels = ordered_json::array();
        for (const Transform& t : g.edge_labels(e)) labels.push_back(to_string(t));
        edge["labels"] = std::move(labels);
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);

    ordered_json rep;
    rep["component_size"] = report.component_size;
    rep["degree"] = report.degree;
    rep["degree_formula"] = report.degree_formula;
    ordered_json pairs = ordered_json::array();
    for (const SymmetricPair& p : report.symmetric_pairs) {
        ordered_json sp;
        sp["columns"] = {p.col_i, p.col_j};
        sp["entries"] = {p.ent_x, p.ent_y};
        pairs.push_back(std::move(sp));
    }
    rep["symmetric_pairs"] = std::move(pairs);
    rep["stabilizer_order"] = report.stabilizer_order;
    rep["has_triangle"] = report.has_triangle;
    rep["clique_number"] = report.clique_number;
    rep["cube_dimension"] = report.cube_dimension ? ordered_json(*report.cube_dimension) : ordered_json(nullptr);
    rep["tool"] = kToolVersion;
    rep["basepoint"] = g.basepoint().rows();
    j["report"] = std::move(rep);
    return j;
}

}  // namespace

std::string render_json(const IsotopyGraph& g, const AnalysisReport& report) {
    return component_json(g, report).dump(2) + "\n";
}

std::string render_json(const Partition& shape,
                        const std::vector<std::pair<const IsotopyGraph*, AnalysisReport>>& components) {
    ordered_json j;
    j["shape"] = shape.to_string();
    ordered_json comps = ordered_json::array();
    for (const auto& [g, report] : components) comps.push_back(component_json(*g, report));
    j["components"] = std::move(comps);
    return j.dump(2) + "\n";
}

std::string render_report_text(const IsotopyGraph& g, const AnalysisReport& report, int index, int count) {
    std::string out = "component " + std::to_string(index) + "/" + std::to_string(count) +
                      ": size=" + std::to_string(report.component_size) +
                      " degree=" + std::to_string(report.degree) + "\n";
    out += "  basepoint: " + g.basepoint().to_line() + "\n";
    auto [a, b] = same_length_pairs(g.shape());
    out += "  degree-formula: " + std::to_string(report.degree_formula) + " (a=" + std::to_string(a) +
           " b=" + std::to_string(b) + " p=" + std::to_string(report.symmetric_pairs.size()) + ")\n";
    out += "  symmetric-pairs:";
    if (report.symmetric_pairs.empty()) out += " none";
    for (const SymmetricPair& p : report.symmetric_pairs)
        out += " c(" + std::to_string(p.col_i) + "," + std::to_string(p.col_j) + ")=s(" +
               std::to_string(p.ent_x) + "," + std::to_string(p.ent_y) + ")";
    out += "\n";
    out += "  stabilizer-order: " + std::to_string(report.stabilizer_order) + "\n";
    out += "  has-triangle: " + std::string(report.has_triangle ? "yes" : "no") + "\n";
    out += "  clique-number: " + std::to_string(report.clique_number) + "\n";
    out += "  cube-dimension: " +
           (report.cube_dimension ? std::to_string(*report.cube_dimension) : std::string("none")) + "\n";
    return out;
}

}  // namespace latab
