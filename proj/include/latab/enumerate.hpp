#pragma once

#include "latab/partition.hpp"
#include "latab/tableau.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace latab {

/// Serial reference enumerator. Emits every Latin filling of the shape
/// exactly once, in row-major lexicographic order; the visitor returns false
/// to stop early. This is the oracle the parallel paths are tested against.
void for_each_filling(const Partition& shape, const std::function<bool(const LatinTableau&)>& visit);

std::uint64_t count_fillings_serial(const Partition& shape);

/// OpenMP kernel: splits the search on first-row prefixes and sums the
/// per-prefix counts. jobs <= 0 uses the runtime default thread count.
std::uint64_t count_fillings(const Partition& shape, int jobs = 0);

/// Materializes all fillings in the serial emission order; the parallel
/// buckets are concatenated in prefix rank order, so output is identical for
/// every jobs value.
std::vector<LatinTableau> all_fillings(const Partition& shape, int jobs = 0);

std::optional<LatinTableau> first_filling(const Partition& shape);
bool is_fillable(const Partition& shape);

struct WpcRecord {
    Partition shape;
    bool wide = false;
    bool fillable = false;
    std::optional<std::uint64_t> filling_count;  // populated only on request
    bool consistent = false;                     // wide == fillable
};

/// Wideness is decided from the definition, fillability from search; the two
/// routes are independent. Counting is optional because fillability alone
/// short-circuits at the first solution.
WpcRecord verify_wpc(const Partition& shape, bool want_count = false, int jobs = 0);

std::vector<WpcRecord> verify_wpc_range(int max_boxes, bool want_count = false, int jobs = 0);

}  // namespace latab
