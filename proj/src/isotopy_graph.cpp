#include "latab/isotopy_graph.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace latab {

namespace {

struct CellsHash {
    std::size_t operator()(const Cells& c) const noexcept {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a
        for (std::uint8_t b : c) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Pre-resolved generator action on raw cell vectors. Row and column swaps
// touch fixed index pairs; entry swaps scan the whole filling.
struct GenPlan {
    TransformKind kind;
    std::uint8_t x = 0, y = 0;                   // entry values for Ent
    std::vector<std::pair<std::uint32_t, std::uint32_t>> swaps;  // for Row/Col
};

std::vector<GenPlan> make_plans(const Partition& shape, const std::vector<Transform>& gens) {
    std::vector<std::size_t> offset(static_cast<std::size_t>(shape.rows()) + 1, 0);
    for (int i = 0; i < shape.rows(); ++i)
        offset[static_cast<std::size_t>(i) + 1] = offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(shape[i]);

    std::vector<GenPlan> plans;
    plans.reserve(gens.size());
    for (const Transform& t : gens) {
        GenPlan plan;
        plan.kind = t.kind;
        switch (t.kind) {
            case TransformKind::Row: {
                std::size_t a = offset[static_cast<std::size_t>(t.p - 1)];
                std::size_t b = offset[static_cast<std::size_t>(t.q - 1)];
                for (int j = 0; j < shape[t.p - 1]; ++j)
                    plan.swaps.emplace_back(static_cast<std::uint32_t>(a + static_cast<std::size_t>(j)),
                                            static_cast<std::uint32_t>(b + static_cast<std::size_t>(j)));
                break;
            }
            case TransformKind::Col:
                for (int i = 0; i < shape.rows() && shape[i] >= t.q; ++i)
                    plan.swaps.emplace_back(
                        static_cast<std::uint32_t>(offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(t.p - 1)),
                        static_cast<std::uint32_t>(offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(t.q - 1)));
                break;
            case TransformKind::Ent:
                plan.x = static_cast<std::uint8_t>(t.p);
                plan.y = static_cast<std::uint8_t>(t.q);
                break;
        }
        plans.push_back(std::move(plan));
    }
    return plans;
}

void apply_plan(const GenPlan& plan, const Cells& src, Cells& dst) {
    dst = src;
    if (plan.kind == TransformKind::Ent) {
        for (auto& c : dst) c = c == plan.x ? plan.y : c == plan.y ? plan.x : c;
    } else {
        for (auto [a, b] : plan.swaps) std::swap(dst[a], dst[b]);
    }
}

}  // namespace

int IsotopyGraph::degree() const {
    if (!regular_)
        throw NonRegularComponent("component of shape " + shape_.to_string() +
                                  " is not regular; this contradicts vertex-transitivity");
    return verts_.empty() || vertex_degrees_.empty() ? 0 : vertex_degrees_[0];
}

std::vector<Transform> IsotopyGraph::edge_labels(const Edge& e) const {
    std::vector<Transform> out;
    auto plans = make_plans(shape_, gens_);
    Cells buf;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        apply_plan(plans[i], verts_[e.u], buf);
        if (buf == verts_[e.v]) out.push_back(gens_[i]);
    }
    return out;
}

IsotopyGraph component(const LatinTableau& basepoint, std::size_t cap) {
    IsotopyGraph g;
    g.shape_ = basepoint.shape();
    g.gens_ = generators(g.shape_);
    auto plans = make_plans(g.shape_, g.gens_);

    std::unordered_map<Cells, std::uint32_t, CellsHash> index;
    g.verts_.push_back(basepoint.cells());
    index.emplace(basepoint.cells(), 0);

    Cells buf;
    std::vector<std::uint32_t> nbr;
    for (std::size_t u = 0; u < g.verts_.size(); ++u) {
        nbr.clear();
        for (const GenPlan& plan : plans) {
            apply_plan(plan, g.verts_[u], buf);
            auto it = index.find(buf);
            std::uint32_t id;
            if (it != index.end()) {
                id = it->second;
            } else {
                if (g.verts_.size() >= cap)
                    throw ComponentTooLarge("component of shape " + g.shape_.to_string() +
                                                " exceeds the cap of " + std::to_string(cap) + " vertices",
                                            cap);
                id = static_cast<std::uint32_t>(g.verts_.size());
                g.verts_.push_back(buf);
                index.emplace(buf, id);
            }
            nbr.push_back(id);
        }
        std::sort(nbr.begin(), nbr.end());
        nbr.erase(std::unique(nbr.begin(), nbr.end()), nbr.end());
        g.vertex_degrees_.push_back(static_cast<std::uint16_t>(nbr.size()));
        // Each unordered pair is recorded exactly once, from its smaller id.
        for (std::uint32_t v : nbr)
            if (v > u) g.edges_.push_back({static_cast<std::uint32_t>(u), v});
    }
    for (std::uint16_t d : g.vertex_degrees_)
        if (d != g.vertex_degrees_[0]) g.regular_ = false;
    return g;
}

std::vector<IsotopyGraph> full_graph(const Partition& shape, std::size_t cap) {
    std::vector<IsotopyGraph> out;
    std::unordered_set<Cells, CellsHash> seen;
    for_each_filling(shape, [&](const LatinTableau& t) {
        if (!seen.contains(t.cells())) {
            out.push_back(component(t, cap));
            for (const Cells& c : out.back().vertex_cells()) seen.insert(c);
        }
        return true;
    });
    return out;
}

std::vector<SymmetricPair> symmetric_pairs(const LatinTableau& T) {
    const Partition& shape = T.shape();
    Partition cols = transpose(shape);
    std::vector<SymmetricPair> out;
    for (int i = 1; i <= cols.rows(); ++i) {
        for (int j = i + 1; j <= cols.rows(); ++j) {
            if (cols[i - 1] != cols[j - 1]) continue;
            LatinTableau swapped = apply(Transform{TransformKind::Col, i, j}, T);
            // A column swap never fixes a filling, so the first changed box
            // pins down the only entry pair that could act the same way.
            std::size_t k = 0;
            while (T.cells()[k] == swapped.cells()[k]) ++k;
            int x = T.cells()[k], y = swapped.cells()[k];
            if (x > y) std::swap(x, y);
            if (cols[x - 1] != cols[y - 1]) continue;  // entry swap not legal
            if (apply(Transform{TransformKind::Ent, x, y}, T) == swapped)
                out.push_back(SymmetricPair{i, j, x, y});
        }
    }
    return out;
}

int degree_formula(const LatinTableau& T) {
    auto [a, b] = same_length_pairs(T.shape());
    return static_cast<int>(a + 2 * b) - static_cast<int>(symmetric_pairs(T).size());
}

int vertex_degree(const IsotopyGraph& g) { return g.degree(); }

std::uint64_t stabilizer_order(const IsotopyGraph& g) {
    unsigned __int128 group = isotopy_group_order(g.shape());
    unsigned __int128 size = g.size();
    if (group % size != 0)
        throw InexactDivision("group order is not divisible by component size for shape " +
                              g.shape().to_string());
    unsigned __int128 stab = group / size;
    if (stab > ~std::uint64_t{0})
        throw InexactDivision("stabilizer order exceeds 64 bits for shape " + g.shape().to_string());
    return static_cast<std::uint64_t>(stab);
}

std::uint64_t stabilizer_order(const LatinTableau& T, std::size_t cap) {
    return stabilizer_order(component(T, cap));
}

std::vector<std::vector<std::uint32_t>> adjacency(const IsotopyGraph& g) {
    std::vector<std::vector<std::uint32_t>> adj(g.size());
    for (const auto& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

std::vector<std::array<std::uint32_t, 3>> find_triangles(
    const IsotopyGraph& g, const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<std::array<std::uint32_t, 3>> out;
    for (const auto& e : g.edges()) {
        const auto& nu = adj[e.u];
        const auto& nv = adj[e.v];
        std::size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] < nv[j]) {
                ++i;
            } else if (nu[i] > nv[j]) {
                ++j;
            } else {
                if (nu[i] > e.v) out.push_back({e.u, e.v, nu[i]});
                ++i;
                ++j;
            }
        }
    }
    return out;
}

namespace {

bool edge_exists(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t a, std::uint32_t b) {
    const auto& n = adj[a];
    return std::binary_search(n.begin(), n.end(), b);
}

int bron_kerbosch(const std::vector<std::vector<std::uint32_t>>& adj, std::vector<std::uint32_t>& r,
                  std::vector<std::uint32_t> p, std::vector<std::uint32_t> x) {
    if (p.empty() && x.empty()) return static_cast<int>(r.size());
    // Pivot on the candidate with most neighbors inside p.
    std::uint32_t pivot = 0;
    std::size_t best = 0;
    bool first = true;
    for (std::uint32_t v : p) {
        std::size_t cnt = 0;
        for (std::uint32_t w : p) cnt += edge_exists(adj, v, w);
        if (first || cnt > best) {
            pivot = v;
            best = cnt;
            first = false;
        }
    }
    for (std::uint32_t v : x) {
        std::size_t cnt = 0;
        for (std::uint32_t w : p) cnt += edge_exists(adj, v, w);
        if (first || cnt > best) {
            pivot = v;
            best = cnt;
            first = false;
        }
    }
    int result = static_cast<int>(r.size());
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t v : p)
        if (!edge_exists(adj, pivot, v)) candidates.push_back(v);
    for (std::uint32_t v : candidates) {
        std::vector<std::uint32_t> np, nx;
        for (std::uint32_t w : p)
            if (edge_exists(adj, v, w)) np.push_back(w);
        for (std::uint32_t w : x)
            if (edge_exists(adj, v, w)) nx.push_back(w);
        r.push_back(v);
        result = std::max(result, bron_kerbosch(adj, r, std::move(np), std::move(nx)));
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
    return result;
}

}  // namespace

int max_clique_brute_force(const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<std::uint32_t> r, p(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) p[i] = static_cast<std::uint32_t>(i);
    return bron_kerbosch(adj, r, std::move(p), {});
}

int clique_number(const IsotopyGraph& g, const std::vector<std::vector<std::uint32_t>>& adj,
                  std::size_t brute_max) {
    int classified;
    if (g.edges().empty())
        classified = 1;
    else if (find_triangles(g, adj).empty())
        classified = 2;
    else
        classified = 4;
    if (g.size() <= brute_max) {
        int exact = max_clique_brute_force(adj);
        if (exact != classified)
            throw CliqueTheoremViolation("clique classification " + std::to_string(classified) +
                                         " disagrees with exact maximum clique " + std::to_string(exact) +
                                         " on shape " + g.shape().to_string());
    }
    return classified;
}

namespace {

bool in_pair(int v, int a, int b) { return v == a || v == b; }

TriangleWitness annotate_witness(const LatinTableau& T, Transform r, Transform c, Transform s) {
    TriangleWitness w{r, c, s, true, true, true, false, true};
    const Partition& shape = T.shape();
    int a1 = s.p, a2 = s.q;
    w.entries_small = a1 <= 4 && a2 <= 4;

    int i1 = r.p - 1, i2 = r.q - 1, j1 = c.p - 1, j2 = c.q - 1;
    for (int i = 0; i < shape.rows(); ++i) {
        for (int j = 0; j < shape[i]; ++j) {
            bool in_rows = in_pair(i, i1, i2);
            bool in_cols = in_pair(j, j1, j2);
            bool holds_a = in_pair(T.at(i, j), a1, a2);
            if (in_rows != in_cols && !holds_a) w.outside_in_pair = false;
            if (!in_rows && !in_cols && holds_a) w.confined = false;
        }
    }

    w.corners_exist = shape[i2] > j2;  // rows/columns sorted, so one check suffices
    if (w.corners_exist) {
        int p = T.at(i1, j1), q = T.at(i1, j2);
        int rr = T.at(i2, j1), t = T.at(i2, j2);
        bool diag_fixed = p == t && !in_pair(p, a1, a2);
        bool diag_swapped = in_pair(p, a1, a2) && in_pair(t, a1, a2) && p != t;
        bool anti_fixed = q == rr && !in_pair(q, a1, a2);
        bool anti_swapped = in_pair(q, a1, a2) && in_pair(rr, a1, a2) && q != rr;
        bool small = p <= 4 && q <= 4 && rr <= 4 && t <= 4;
        w.corner_pattern_ok = small && ((diag_fixed && anti_fixed) || (diag_swapped && anti_fixed) ||
                                        (diag_fixed && anti_swapped));
    }
    return w;
}

}  // namespace

std::vector<TriangleWitness> triangle_witnesses(const LatinTableau& T) {
    std::vector<TriangleWitness> out;
    std::vector<Transform> rows, cols;
    for (const Transform& t : generators(T.shape())) {
        if (t.kind == TransformKind::Row) rows.push_back(t);
        if (t.kind == TransformKind::Col) cols.push_back(t);
    }
    Partition colshape = transpose(T.shape());
    for (const Transform& r : rows) {
        for (const Transform& c : cols) {
            LatinTableau rc = apply(r, apply(c, T));
            if (rc == T) continue;
            std::size_t k = 0;
            while (T.cells()[k] == rc.cells()[k]) ++k;
            int x = T.cells()[k], y = rc.cells()[k];
            if (x > y) std::swap(x, y);
            if (colshape[x - 1] != colshape[y - 1]) continue;
            Transform s{TransformKind::Ent, x, y};
            if (apply(s, T) == rc) out.push_back(annotate_witness(T, r, c, s));
        }
    }
    return out;
}

std::optional<int> cube_dimension(const IsotopyGraph& g) {
    if (!g.regular()) return std::nullopt;
    int d = g.degree();
    if (d >= 63) return std::nullopt;
    if (g.size() != (std::size_t{1} << d)) return std::nullopt;
    if (d == 0) return 0;

    auto plans = make_plans(g.shape(), g.generators());
    std::unordered_map<Cells, std::uint32_t, CellsHash> index;
    for (std::uint32_t i = 0; i < g.size(); ++i) index.emplace(g.vertex_cells()[i], i);

    // Group generators by their action on the basepoint. For a cube these
    // classes stay coherent at every vertex and give the coordinate axes.
    Cells buf;
    std::vector<std::uint32_t> base_image(plans.size());
    for (std::size_t i = 0; i < plans.size(); ++i) {
        apply_plan(plans[i], g.vertex_cells()[0], buf);
        base_image[i] = index.at(buf);
    }
    std::vector<int> gen_class(plans.size(), -1);
    int classes = 0;
    for (std::size_t i = 0; i < plans.size(); ++i) {
        if (gen_class[i] >= 0) continue;
        for (std::size_t j = i; j < plans.size(); ++j)
            if (base_image[j] == base_image[i]) gen_class[j] = classes;
        ++classes;
    }
    if (classes != d) return std::nullopt;

    constexpr std::uint64_t kUnset = ~std::uint64_t{0};
    std::vector<std::uint64_t> coord(g.size(), kUnset);
    coord[0] = 0;
    for (std::uint32_t u = 0; u < g.size(); ++u) {
        if (coord[u] == kUnset) return std::nullopt;
        std::vector<std::uint32_t> class_image(static_cast<std::size_t>(d), ~std::uint32_t{0});
        for (std::size_t i = 0; i < plans.size(); ++i) {
            apply_plan(plans[i], g.vertex_cells()[u], buf);
            std::uint32_t v = index.at(buf);
            auto& slot = class_image[static_cast<std::size_t>(gen_class[i])];
            if (slot == ~std::uint32_t{0})
                slot = v;
            else if (slot != v)
                return std::nullopt;  // class splits away from the basepoint grouping
        }
        for (int k = 0; k < d; ++k) {
            std::uint32_t v = class_image[static_cast<std::size_t>(k)];
            std::uint64_t cv = coord[u] ^ (std::uint64_t{1} << k);
            if (coord[v] == kUnset)
                coord[v] = cv;
            else if (coord[v] != cv)
                return std::nullopt;
        }
    }
    std::vector<bool> hit(g.size(), false);
    for (std::uint64_t cv : coord) {
        if (cv >= g.size() || hit[static_cast<std::size_t>(cv)]) return std::nullopt;
        hit[static_cast<std::size_t>(cv)] = true;
    }
    return d;
}

bool cube_criterion(const LatinTableau& T, std::size_t cap) {
    IsotopyGraph g = component(T, cap);
    bool value = false;
    if (is_squareable(T.shape())) {
        std::uint64_t stab = stabilizer_order(g);
        std::size_t p = symmetric_pairs(T).size();
        value = p < 64 && stab == (std::uint64_t{1} << p);
    }
    bool is_cube = cube_dimension(g).has_value();
    if (value != is_cube)
        throw CriterionMismatch("cube criterion " + std::string(value ? "holds" : "fails") +
                                " but the component is " + (is_cube ? "" : "not ") +
                                "a cube, for tableau " + T.to_line());
    return value;
}

AnalysisReport analyze(const IsotopyGraph& g, const AnalyzeOptions& opts) {
    AnalysisReport rep;
    rep.shape = g.shape();
    rep.component_size = g.size();
    rep.degree = g.degree();
    LatinTableau base = g.basepoint();
    rep.symmetric_pairs = symmetric_pairs(base);
    auto [a, b] = same_length_pairs(g.shape());
    rep.degree_formula = static_cast<int>(a + 2 * b) - static_cast<int>(rep.symmetric_pairs.size());
    rep.stabilizer_order = stabilizer_order(g);
    auto adj = adjacency(g);
    rep.has_triangle = !find_triangles(g, adj).empty();
    rep.clique_number = clique_number(g, adj, opts.clique_brute_max);
    rep.cube_dimension = cube_dimension(g);
    return rep;
}

}  // namespace latab
