#pragma once

#include "latab/enumerate.hpp"
#include "latab/partition.hpp"
#include "latab/tableau.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace latab {

inline constexpr std::size_t kDefaultComponentCap = std::size_t{1} << 20;

struct ComponentTooLarge : std::runtime_error {
    ComponentTooLarge(const std::string& msg, std::size_t cap) : std::runtime_error(msg), cap(cap) {}
    std::size_t cap;
};
struct NonRegularComponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InexactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CliqueTheoremViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CriterionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One orbit of the transformation action: vertices are fillings indexed by
/// BFS discovery order from the basepoint, edges are merged per unordered
/// vertex pair. Edge label sets are recomputed on demand rather than stored.
class IsotopyGraph {
public:
    struct Edge {
        std::uint32_t u, v;  // 0-based vertex ids, u < v
    };

    const Partition& shape() const { return shape_; }
    const std::vector<Transform>& generators() const { return gens_; }
    std::size_t size() const { return verts_.size(); }
    const std::vector<Cells>& vertex_cells() const { return verts_; }
    LatinTableau vertex(std::size_t id) const { return LatinTableau::unchecked(shape_, verts_[id]); }
    LatinTableau basepoint() const { return vertex(0); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool regular() const { return regular_; }

    /// Uniform vertex degree; throws NonRegularComponent if the component is
    /// not regular (which would contradict vertex-transitivity).
    int degree() const;

    /// Generators whose action carries one endpoint to the other.
    std::vector<Transform> edge_labels(const Edge& e) const;

private:
    friend IsotopyGraph component(const LatinTableau&, std::size_t);
    Partition shape_;
    std::vector<Transform> gens_;
    std::vector<Cells> verts_;
    std::vector<Edge> edges_;
    std::vector<std::uint16_t> vertex_degrees_;
    bool regular_ = true;
};

/// Breadth-first closure of the basepoint under all generators. Deterministic:
/// vertices are numbered by discovery order, generators applied in canonical
/// order. Throws ComponentTooLarge beyond cap vertices.
IsotopyGraph component(const LatinTableau& basepoint, std::size_t cap = kDefaultComponentCap);

/// Components over all fillings of the shape, ordered by their minimal
/// filling; every filling lands in exactly one component.
std::vector<IsotopyGraph> full_graph(const Partition& shape, std::size_t cap = kDefaultComponentCap);

struct SymmetricPair {
    int col_i, col_j;  // 1-based columns
    int ent_x, ent_y;  // 1-based entry values
    friend bool operator==(const SymmetricPair&, const SymmetricPair&) = default;
};

/// Column pairs whose swap acts on T exactly like some entry swap.
std::vector<SymmetricPair> symmetric_pairs(const LatinTableau& T);

/// a + 2b - p for this filling.
int degree_formula(const LatinTableau& T);

int vertex_degree(const IsotopyGraph& g);

/// |S(shape)| / component size via orbit-stabilizer; the division must be
/// exact, anything else signals a bug.
std::uint64_t stabilizer_order(const IsotopyGraph& g);
std::uint64_t stabilizer_order(const LatinTableau& T, std::size_t cap = kDefaultComponentCap);

/// Sorted neighbor lists, one per vertex.
std::vector<std::vector<std::uint32_t>> adjacency(const IsotopyGraph& g);

/// All 3-cycles as vertex id triples (i < j < k).
std::vector<std::array<std::uint32_t, 3>> find_triangles(const IsotopyGraph& g,
                                                         const std::vector<std::vector<std::uint32_t>>& adj);

struct TriangleWitness {
    Transform row_swap, col_swap, ent_swap;  // rc(T) = s(T)
    bool entries_small;      // both swapped entries lie in 1..4; existence-only,
                             // witnesses with larger entries can coexist
    bool outside_in_pair;    // boxes met by only one of {rows, cols} hold the swapped entries
    bool confined;           // the swapped entries appear nowhere else
    bool corners_exist;      // the two rows intersect the two columns
    bool corner_pattern_ok;  // 2x2 corner matches one of the three allowed patterns
    bool all_conditions() const {
        return entries_small && outside_in_pair && confined && corner_pattern_ok;
    }
};

/// All (row swap, column swap, entry swap) triples with rc(T) = s(T),
/// annotated with the structural conditions they satisfy.
std::vector<TriangleWitness> triangle_witnesses(const LatinTableau& T);

/// 1 for an edgeless component, 4 when a triangle exists, else 2. Components
/// up to brute_max vertices are cross-checked against an exact maximum-clique
/// search; disagreement throws CliqueTheoremViolation.
int clique_number(const IsotopyGraph& g, const std::vector<std::vector<std::uint32_t>>& adj,
                  std::size_t brute_max = 4096);

/// Exact maximum clique by branch and bound; intended for small components.
int max_clique_brute_force(const std::vector<std::vector<std::uint32_t>>& adj);

/// Hypercube recognition by label-class coordinatization: present with the
/// dimension when the component is a cube, absent otherwise.
std::optional<int> cube_dimension(const IsotopyGraph& g);

/// Squareable shape and stabilizer order exactly 2^p. Cross-checked against
/// cube_dimension on the built component; disagreement throws
/// CriterionMismatch.
bool cube_criterion(const LatinTableau& T, std::size_t cap = kDefaultComponentCap);

struct AnalysisReport {
    Partition shape;
    std::uint64_t component_size = 0;
    int degree = 0;
    int degree_formula = 0;
    std::vector<SymmetricPair> symmetric_pairs;  // of the basepoint
    std::uint64_t stabilizer_order = 0;
    bool has_triangle = false;
    int clique_number = 0;
    std::optional<int> cube_dimension;
};

struct AnalyzeOptions {
    std::size_t clique_brute_max = 4096;
};

AnalysisReport analyze(const IsotopyGraph& g, const AnalyzeOptions& opts = {});

}  // namespace latab
