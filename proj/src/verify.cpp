#include "latab/verify.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latab {

namespace {

void fail(ShapeOutcome& out, const IsotopyGraph& g, const std::string& check, const std::string& tableau,
          const std::string& detail) {
    out.failures.push_back(VerificationFailure{check, g.shape().to_string(), tableau, detail});
}

std::vector<Transform> labels_between(const IsotopyGraph& g, std::uint32_t u, std::uint32_t v) {
    return g.edge_labels(IsotopyGraph::Edge{u, v});
}

bool same_kind_overlap(const std::vector<Transform>& a, const std::vector<Transform>& b) {
    for (const Transform& x : a)
        for (const Transform& y : b)
            if (x.kind == y.kind) return true;
    return false;
}

}  // namespace

void verify_component(const IsotopyGraph& g, const TheoremChecks& checks, ShapeOutcome& out) {
    const bool is_two_by_four = g.shape() == Partition({4, 4});

    int bfs_degree = -1;
    if (checks.regular || checks.degree || checks.cube) {
        ++out.checks_run;
        if (!g.regular()) {
            fail(out, g, "regularity", g.basepoint().to_line(), "vertex degrees differ within one component");
            return;  // the remaining checks all lean on a well-defined degree
        }
        bfs_degree = g.degree();
    }

    std::uint64_t stab = 0;
    bool stab_known = false;
    if (checks.orbit || checks.cube) {
        ++out.checks_run;
        try {
            stab = stabilizer_order(g);
            stab_known = true;
        } catch (const InexactDivision& e) {
            fail(out, g, "orbit-stabilizer", g.basepoint().to_line(), e.what());
        }
    }

    std::vector<std::vector<std::uint32_t>> adj;
    std::vector<std::array<std::uint32_t, 3>> triangles;
    bool has_triangle = false;
    if (checks.clique || checks.triangle) {
        adj = adjacency(g);
        triangles = find_triangles(g, adj);
        has_triangle = !triangles.empty();
    }

    if (checks.clique) {
        ++out.checks_run;
        try {
            int k = clique_number(g, adj);
            if (k != 1 && k != 2 && k != 4)
                fail(out, g, "clique", g.basepoint().to_line(),
                     "clique number " + std::to_string(k) + " outside {1,2,4}");
        } catch (const CliqueTheoremViolation& e) {
            fail(out, g, "clique", g.basepoint().to_line(), e.what());
        }
        for (const auto& tri : triangles) {
            ++out.checks_run;
            bool extends = false;
            for (std::uint32_t x : adj[tri[0]]) {
                if (x == tri[1] || x == tri[2]) continue;
                if (std::binary_search(adj[tri[1]].begin(), adj[tri[1]].end(), x) &&
                    std::binary_search(adj[tri[2]].begin(), adj[tri[2]].end(), x)) {
                    extends = true;
                    break;
                }
            }
            if (!extends)
                fail(out, g, "clique", g.vertex(tri[0]).to_line(), "triangle does not extend to a 4-clique");
        }
    }

    if (checks.triangle && !is_two_by_four) {
        // Outside (4,4), no two edges of a triangle may carry the same kind.
        for (const auto& tri : triangles) {
            ++out.checks_run;
            auto l01 = labels_between(g, tri[0], tri[1]);
            auto l02 = labels_between(g, tri[0], tri[2]);
            auto l12 = labels_between(g, tri[1], tri[2]);
            if (same_kind_overlap(l01, l02) || same_kind_overlap(l01, l12) || same_kind_overlap(l02, l12))
                fail(out, g, "triangle", g.vertex(tri[0]).to_line(),
                     "triangle edges share a transform kind");
        }
    }

    bool is_cube = false;
    if (checks.cube && stab_known) is_cube = cube_dimension(g).has_value();

    for (std::size_t v = 0; v < g.size(); ++v) {
        LatinTableau t = g.vertex(v);
        if (checks.degree) {
            ++out.checks_run;
            int formula = degree_formula(t);
            if (formula != bfs_degree)
                fail(out, g, "degree-formula", t.to_line(),
                     "a+2b-p gives " + std::to_string(formula) + " but the component degree is " +
                         std::to_string(bfs_degree));
        }
        if (checks.triangle) {
            ++out.checks_run;
            auto witnesses = triangle_witnesses(t);
            if (witnesses.empty() == has_triangle)
                fail(out, g, "triangle", t.to_line(),
                     has_triangle ? "component has a triangle but no rc(T)=s(T) witness exists"
                                  : "rc(T)=s(T) witness exists but the component is triangle-free");
            bool some_full_witness = false;
            for (const TriangleWitness& w : witnesses) {
                ++out.checks_run;
                // The three structural conditions follow from rc(T) = s(T)
                // alone, so they must hold for every witness. The bound on the
                // swapped entries does not: a long first row can put larger
                // values into a symmetric column pair, and only some witness
                // at the vertex needs to satisfy it.
                if (!(w.outside_in_pair && w.confined && w.corner_pattern_ok))
                    fail(out, g, "triangle", t.to_line(),
                         "witness " + to_string(w.row_swap) + "," + to_string(w.col_swap) + "," +
                             to_string(w.ent_swap) + " violates the structural conditions");
                if (w.all_conditions()) some_full_witness = true;
            }
            if (!witnesses.empty() && !some_full_witness)
                fail(out, g, "triangle", t.to_line(),
                     "no witness keeps both swapped entries within 1..4");
        }
        if (checks.cube && stab_known) {
            ++out.checks_run;
            std::size_t p = symmetric_pairs(t).size();
            bool criterion = is_squareable(g.shape()) && p < 64 && stab == (std::uint64_t{1} << p);
            if (criterion != is_cube)
                fail(out, g, "cube-criterion", t.to_line(),
                     std::string("criterion ") + (criterion ? "holds" : "fails") + " but the component is " +
                         (is_cube ? "" : "not ") + "a cube");
        }
    }
}

namespace {

ShapeOutcome verify_shape(const Partition& shape, const TheoremOptions& opt) {
    ShapeOutcome out;
    out.shape = shape;
    if (opt.squareable_only && !is_squareable(shape)) {
        out.filtered = true;
        return out;
    }
    std::vector<IsotopyGraph> comps;
    try {
        comps = full_graph(shape, opt.component_cap);
    } catch (const ComponentTooLarge& e) {
        out.skipped = true;
        out.skip_reason = e.what();
        return out;
    }
    out.components = comps.size();
    for (const IsotopyGraph& g : comps) {
        out.fillings += g.size();
        verify_component(g, opt.checks, out);
    }
    return out;
}

}  // namespace

VerificationSummary verify_theorems(const TheoremOptions& options) {
    VerificationSummary summary;
    summary.range = "all fillings of all partitions with at most " + std::to_string(options.max_boxes) +
                    " boxes" + (options.squareable_only ? ", squareable shapes only" : "");
    auto shapes = partitions_up_to(options.max_boxes);
    summary.shapes.resize(shapes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    num_threads(options.jobs > 0 ? options.jobs : omp_get_max_threads())
#endif
    for (std::size_t i = 0; i < shapes.size(); ++i) summary.shapes[i] = verify_shape(shapes[i], options);

    for (const ShapeOutcome& out : summary.shapes) {
        summary.checks_run += out.checks_run;
        if (out.skipped) summary.skipped.push_back(out.skip_reason);
        summary.failures.insert(summary.failures.end(), out.failures.begin(), out.failures.end());
    }
    return summary;
}

}  // namespace latab
