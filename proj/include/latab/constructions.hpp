#pragma once

#include "latab/isotopy_graph.hpp"
#include "latab/tableau.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latab {

/// The cube family: T_d has an isotopy graph isomorphic to the d-cube.
/// d in {0,1,2,3} are fixed fillings; even d >= 4 uses the staircase-by-two
/// rule, odd d > 3 prepends one row to T_{d-1}.
LatinTableau build_Td(int d);

/// Fillings of (2k, 2k, 2(k-1), 2(k-1), ..., 2, 2) whose 2x2 blocks all carry
/// the pattern x y / y x. Every such tableau has symmetries beyond its
/// symmetric column pairs, so for k >= 2 the component is never a cube.
LatinTableau build_symmetric_family(int k);

struct CatalogExpectation {
    std::optional<bool> has_triangle;
    std::optional<int> clique_number;
};

struct CatalogEntry {
    std::string name;
    LatinTableau tableau;
    CatalogExpectation expected;
    std::string source;  // original row strings, "..." marking extendable rows
};

/// Complete catalog of shapes whose components contain triangles, one sample
/// filling per shape. Extendable entries are instantiated minimally.
std::vector<CatalogEntry> appendix_catalog();

}  // namespace latab
