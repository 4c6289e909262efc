#include <CLI11.hpp>

#include "latab/constructions.hpp"
#include "latab/enumerate.hpp"
#include "latab/io_formats.hpp"
#include "latab/isotopy_graph.hpp"
#include "latab/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace latab;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;
constexpr int kCliBoxLimit = 64;

Partition parse_shape_arg(const std::string& text) {
    Partition shape = Partition::parse(text);
    if (shape.total() > kCliBoxLimit)
        throw std::invalid_argument("shape has " + std::to_string(shape.total()) +
                                    " boxes; the command line is limited to " +
                                    std::to_string(kCliBoxLimit));
    return shape;
}

LatinTableau read_tableau_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tableau(buf.str());
}

void write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << content;
}

int cmd_enumerate(const std::string& shape_text, bool count_only, std::uint64_t limit, int jobs) {
    Partition shape = parse_shape_arg(shape_text);
    if (count_only) {
        std::cout << count_fillings(shape, jobs) << "\n";
        return kExitOk;
    }
    std::uint64_t emitted = 0;
    for_each_filling(shape, [&](const LatinTableau& t) {
        if (emitted) std::cout << "\n";
        std::cout << render_tableau(t);
        ++emitted;
        return limit == 0 || emitted < limit;
    });
    return kExitOk;
}

int cmd_analyze(const std::string& shape_text, const std::string& file, std::size_t cap) {
    std::vector<IsotopyGraph> comps;
    if (!file.empty()) {
        comps.push_back(component(read_tableau_file(file), cap));
        std::cout << "shape: " << comps[0].shape().to_string() << "\n";
    } else {
        Partition shape = parse_shape_arg(shape_text);
        comps = full_graph(shape, cap);
        std::cout << "shape: " << shape.to_string() << "\n";
        std::uint64_t fillings = 0;
        for (const auto& g : comps) fillings += g.size();
        std::cout << "fillings: " << fillings << "\ncomponents: " << comps.size() << "\n";
    }
    std::cout << "\n";
    int index = 1;
    for (const IsotopyGraph& g : comps) {
        AnalysisReport rep = analyze(g);
        std::cout << render_report_text(g, rep, index++, static_cast<int>(comps.size()));
    }
    return kExitOk;
}

int cmd_graph(const std::string& shape_text, const std::string& file, const std::string& dot_path,
              const std::string& json_path, std::size_t cap) {
    std::vector<IsotopyGraph> comps;
    Partition shape;
    bool single = !file.empty();
    if (single) {
        comps.push_back(component(read_tableau_file(file), cap));
        shape = comps[0].shape();
    } else {
        shape = parse_shape_arg(shape_text);
        comps = full_graph(shape, cap);
    }
    if (dot_path.empty() && json_path.empty()) {
        std::cout << render_dot(comps);
        return kExitOk;
    }
    if (!dot_path.empty()) write_file(dot_path, render_dot(comps));
    if (!json_path.empty()) {
        if (single) {
            write_file(json_path, render_json(comps[0], analyze(comps[0])));
        } else {
            std::vector<std::pair<const IsotopyGraph*, AnalysisReport>> items;
            for (const IsotopyGraph& g : comps) items.emplace_back(&g, analyze(g));
            write_file(json_path, render_json(shape, items));
        }
    }
    return kExitOk;
}

int cmd_catalog(bool check) {
    int failures = 0;
    for (const CatalogEntry& entry : appendix_catalog()) {
        std::cout << "entry " << entry.name << "  [rows: " << entry.source << "]\n";
        std::cout << render_tableau(entry.tableau);
        if (check) {
            IsotopyGraph g = component(entry.tableau);
            AnalysisReport rep = analyze(g);
            bool ok = true;
            if (entry.expected.has_triangle && rep.has_triangle != *entry.expected.has_triangle) ok = false;
            if (entry.expected.clique_number && rep.clique_number != *entry.expected.clique_number) ok = false;
            ShapeOutcome out;
            out.shape = g.shape();
            TheoremChecks checks;
            verify_component(g, checks, out);
            if (!out.failures.empty()) ok = false;
            std::cout << "check: " << (ok ? "ok" : "FAIL") << " (triangle="
                      << (rep.has_triangle ? "yes" : "no") << " clique=" << rep.clique_number << ")\n";
            failures += !ok;
        }
        std::cout << "\n";
    }
    if (check) std::cout << (failures ? "FAILED" : "all entries verified") << "\n";
    return failures ? kExitVerificationFailure : kExitOk;
}

int cmd_verify_wpc(int max_n, bool count, int jobs) {
    auto records = verify_wpc_range(max_n, count, jobs);
    std::size_t width = 5;
    for (const WpcRecord& r : records) width = std::max(width, r.shape.to_string().size());
    std::cout << "shape" << std::string(width - 4, ' ') << "wide  fillable  count      consistent\n";
    std::uint64_t inconsistent = 0;
    for (const WpcRecord& r : records) {
        std::string shape = r.shape.to_string();
        std::string count_text = r.filling_count ? std::to_string(*r.filling_count) : "-";
        std::cout << shape << std::string(width - shape.size() + 1, ' ')
                  << (r.wide ? "yes " : "no  ") << "  " << (r.fillable ? "yes     " : "no      ")
                  << "  " << count_text << std::string(count_text.size() < 9 ? 9 - count_text.size() : 1, ' ')
                  << "  " << (r.consistent ? "yes" : "NO") << "\n";
        inconsistent += !r.consistent;
    }
    std::cout << "checked " << records.size() << " shapes up to " << max_n << " boxes: "
              << records.size() - inconsistent << " consistent, " << inconsistent << " inconsistent\n";
    return inconsistent ? kExitVerificationFailure : kExitOk;
}

TheoremChecks parse_checks(const std::string& list) {
    if (list.empty() || list == "all") return TheoremChecks{};
    TheoremChecks checks = TheoremChecks::none();
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "degree") checks.degree = true;
        else if (item == "clique") checks.clique = true;
        else if (item == "triangle") checks.triangle = true;
        else if (item == "cube") checks.cube = true;
        else if (item == "orbit") checks.orbit = true;
        else if (item == "regular") checks.regular = true;
        else throw std::invalid_argument("unknown check '" + item + "'");
    }
    return checks;
}

int cmd_verify_theorems(int max_n, std::size_t cap, int jobs, const std::string& checks_list,
                        bool squareable_only) {
    TheoremOptions opt;
    opt.max_boxes = max_n;
    opt.component_cap = cap;
    opt.jobs = jobs;
    opt.checks = parse_checks(checks_list);
    opt.squareable_only = squareable_only;
    VerificationSummary s = verify_theorems(opt);
    for (const ShapeOutcome& out : s.shapes) {
        if (out.filtered) continue;
        std::cout << "shape " << out.shape.to_string() << ": ";
        if (out.skipped) {
            std::cout << "SKIPPED (" << out.skip_reason << ")\n";
        } else {
            std::cout << out.fillings << " fillings, " << out.components << " components, "
                      << out.failures.size() << " failures\n";
        }
    }
    for (const VerificationFailure& f : s.failures)
        std::cout << "FAIL " << f.check << " shape=" << f.shape << " tableau=\"" << f.tableau
                  << "\": " << f.detail << "\n";
    std::cout << "checks run: " << s.checks_run << ", failures: " << s.failures.size()
              << ", skipped shapes: " << s.skipped.size() << "\n";
    return s.ok() ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Latin tableaux, their transformation orbits, and the structural "
                 "invariants of the resulting graphs"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string shape_text, file, dot_path, json_path, checks_list = "all";
    bool count_only = false, check = false, count = false, squareable_only = false;
    std::uint64_t limit = 0;
    int jobs = 0, max_n = 8, d = 0, k = 1;
    std::size_t cap = kDefaultComponentCap;

    auto* enumerate = app.add_subcommand("enumerate", "List or count all Latin fillings of a shape");
    enumerate->add_option("shape", shape_text, "Shape, e.g. 4,3,3")->required();
    enumerate->add_flag("--count-only", count_only, "Print only the number of fillings");
    enumerate->add_option("--limit", limit, "Stop after this many fillings");
    enumerate->add_option("--jobs", jobs, "Worker threads (0 = default)");

    auto* analyze_cmd = app.add_subcommand("analyze", "Full structural report per component");
    analyze_cmd->add_option("shape", shape_text, "Shape, e.g. 3,2");
    analyze_cmd->add_option("--file", file, "Tableau file (.lt) instead of a shape");
    analyze_cmd->add_option("--cap", cap, "Component vertex cap");

    auto* graph_cmd = app.add_subcommand("graph", "Emit DOT and/or JSON for the orbit graph");
    graph_cmd->add_option("shape", shape_text, "Shape, e.g. 3,2");
    graph_cmd->add_option("--file", file, "Tableau file (.lt) instead of a shape");
    graph_cmd->add_option("--dot", dot_path, "DOT output path ('-' for stdout)");
    graph_cmd->add_option("--json", json_path, "JSON output path ('-' for stdout)");
    graph_cmd->add_option("--cap", cap, "Component vertex cap");

    auto* construct = app.add_subcommand("construct", "Build a named tableau family member");
    auto* td = construct->add_subcommand("td", "Cube-family tableau T_d");
    td->add_option("d", d, "Cube dimension, d >= 0")->required();
    auto* symfam = construct->add_subcommand("symfam", "Symmetric block family member k");
    symfam->add_option("k", k, "Family index, k >= 1")->required();
    construct->require_subcommand(1);

    auto* catalog = app.add_subcommand("catalog", "Tableaux whose orbit graphs contain triangles");
    auto* appendix = catalog->add_subcommand("appendix", "The full triangle catalog");
    appendix->add_flag("--check", check, "Verify the recorded invariants of every entry");
    catalog->require_subcommand(1);

    auto* wpc = app.add_subcommand("verify-wpc", "Check wide <=> fillable over a box range");
    wpc->add_option("--max-n", max_n, "Largest box count (default 8)");
    wpc->add_flag("--count", count, "Also count the fillings of every shape");
    wpc->add_option("--jobs", jobs, "Worker threads (0 = default)");

    auto* theorems = app.add_subcommand("verify-theorems", "Structural checks over every filling in range");
    theorems->add_option("--max-n", max_n, "Largest box count (default 8)");
    theorems->add_option("--cap", cap, "Component vertex cap");
    theorems->add_option("--jobs", jobs, "Worker threads (0 = default)");
    theorems->add_option("--checks", checks_list,
                         "Comma list of degree,clique,triangle,cube,orbit,regular (default all)");
    theorems->add_flag("--squareable-only", squareable_only, "Restrict to squareable shapes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(shape_text, count_only, limit, jobs);
        if (analyze_cmd->parsed()) {
            if (shape_text.empty() == file.empty())
                throw std::invalid_argument("analyze needs exactly one of a shape or --file");
            return cmd_analyze(shape_text, file, cap);
        }
        if (graph_cmd->parsed()) {
            if (shape_text.empty() == file.empty())
                throw std::invalid_argument("graph needs exactly one of a shape or --file");
            return cmd_graph(shape_text, file, dot_path, json_path, cap);
        }
        if (construct->parsed()) {
            if (td->parsed()) {
                if (d < 0) throw std::invalid_argument("d must be non-negative");
                std::cout << render_tableau(build_Td(d));
            } else {
                if (k < 1) throw std::invalid_argument("k must be at least 1");
                std::cout << render_tableau(build_symmetric_family(k));
            }
            return kExitOk;
        }
        if (catalog->parsed()) return cmd_catalog(check);
        if (wpc->parsed()) return cmd_verify_wpc(max_n, count, jobs);
        if (theorems->parsed()) return cmd_verify_theorems(max_n, cap, jobs, checks_list, squareable_only);
    } catch (const ComponentTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TableauError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}
