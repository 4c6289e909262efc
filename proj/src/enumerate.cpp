#include "latab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latab {

namespace {

// Backtracking state: cells filled row-major, smallest legal entry first.
// Masks hold bit v-1 for a used value v, so entries are capped at 64.
struct Searcher {
    explicit Searcher(const Partition& shape) : shape(shape) {
        if (!shape.empty() && shape[0] > 64)
            throw std::invalid_argument("enumeration supports first rows up to length 64");
        nrows = shape.rows();
        cells.assign(static_cast<std::size_t>(shape.total()), 0);
        col_used.assign(shape.empty() ? 0 : static_cast<std::size_t>(shape[0]), 0);
        row_offset.assign(static_cast<std::size_t>(nrows), 0);
        for (int i = 1; i < nrows; ++i)
            row_offset[static_cast<std::size_t>(i)] =
                row_offset[static_cast<std::size_t>(i - 1)] + static_cast<std::size_t>(shape[i - 1]);
    }

    const Partition& shape;
    int nrows = 0;
    Cells cells;
    std::vector<std::uint64_t> col_used;
    std::vector<std::size_t> row_offset;

    // Fixes cells[0..prefix.size()) of row 0. Prefix values are distinct by
    // construction, so only the column masks need seeding.
    void seed_prefix(const std::vector<std::uint8_t>& prefix) {
        for (std::size_t j = 0; j < prefix.size(); ++j) {
            cells[j] = prefix[j];
            col_used[j] = std::uint64_t{1} << (prefix[j] - 1);
        }
    }

    template <class Emit>
    bool run(int row, int col, std::uint64_t row_used, Emit&& emit) {
        if (row == nrows) return emit(cells);
        int len = shape[row];
        if (col == len) return run(row + 1, 0, 0, emit);
        std::uint64_t full = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
        std::uint64_t candidates = full & ~(row_used | col_used[static_cast<std::size_t>(col)]);
        while (candidates) {
            int v = std::countr_zero(candidates) + 1;
            std::uint64_t bit = candidates & -candidates;
            candidates ^= bit;
            cells[row_offset[static_cast<std::size_t>(row)] + static_cast<std::size_t>(col)] =
                static_cast<std::uint8_t>(v);
            col_used[static_cast<std::size_t>(col)] |= bit;
            bool keep_going = run(row, col + 1, row_used | bit, emit);
            col_used[static_cast<std::size_t>(col)] &= ~bit;
            if (!keep_going) return false;
        }
        return true;
    }

    template <class Emit>
    void search(Emit&& emit) {
        if (nrows == 0) return;
        run(0, 0, 0, emit);
    }

    template <class Emit>
    void search_with_prefix(const std::vector<std::uint8_t>& prefix, Emit&& emit) {
        if (nrows == 0) return;
        seed_prefix(prefix);
        std::uint64_t row_used = 0;
        for (std::uint8_t v : prefix) row_used |= std::uint64_t{1} << (v - 1);
        run(0, static_cast<int>(prefix.size()), row_used, emit);
    }
};

// All length-depth sequences of distinct values from 1..width, lexicographic.
std::vector<std::vector<std::uint8_t>> first_row_prefixes(int width, int depth) {
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> prefix;
    std::uint64_t used = 0;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(prefix.size()) == depth) {
            out.push_back(prefix);
            return;
        }
        for (int v = 1; v <= width; ++v) {
            std::uint64_t bit = std::uint64_t{1} << (v - 1);
            if (used & bit) continue;
            used |= bit;
            prefix.push_back(static_cast<std::uint8_t>(v));
            self(self);
            prefix.pop_back();
            used &= ~bit;
        }
    };
    rec(rec);
    return out;
}

int prefix_depth_for(const Partition& shape, long min_tasks) {
    int width = shape[0];
    long tasks = 1;
    int depth = 0;
    while (depth < width && tasks < min_tasks) {
        tasks *= width - depth;
        ++depth;
    }
    return depth;
}

int thread_count(int jobs) {
#ifdef _OPENMP
    return jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
    return 1;
#endif
}

}  // namespace

void for_each_filling(const Partition& shape, const std::function<bool(const LatinTableau&)>& visit) {
    if (shape.empty()) return;
    Searcher s(shape);
    s.search([&](const Cells& cells) { return visit(LatinTableau::unchecked(shape, cells)); });
}

std::uint64_t count_fillings_serial(const Partition& shape) {
    if (shape.empty()) return 0;
    std::uint64_t n = 0;
    Searcher s(shape);
    s.search([&](const Cells&) {
        ++n;
        return true;
    });
    return n;
}

std::uint64_t count_fillings(const Partition& shape, int jobs) {
    if (shape.empty()) return 0;
    int threads = thread_count(jobs);
    int depth = prefix_depth_for(shape, std::max(64L, 16L * threads));
    if (threads == 1 || depth == 0) return count_fillings_serial(shape);
    auto prefixes = first_row_prefixes(shape[0], depth);
    std::uint64_t total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(threads)
#endif
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        Searcher s(shape);
        std::uint64_t local = 0;
        s.search_with_prefix(prefixes[i], [&](const Cells&) {
            ++local;
            return true;
        });
        total += local;
    }
    return total;
}

std::vector<LatinTableau> all_fillings(const Partition& shape, int jobs) {
    std::vector<LatinTableau> out;
    if (shape.empty()) return out;
    int threads = thread_count(jobs);
    int depth = prefix_depth_for(shape, std::max(64L, 16L * threads));
    if (threads == 1 || depth == 0) {
        for_each_filling(shape, [&](const LatinTableau& t) {
            out.push_back(t);
            return true;
        });
        return out;
    }
    auto prefixes = first_row_prefixes(shape[0], depth);
    std::vector<std::vector<LatinTableau>> buckets(prefixes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        Searcher s(shape);
        s.search_with_prefix(prefixes[i], [&](const Cells& cells) {
            buckets[i].push_back(LatinTableau::unchecked(shape, cells));
            return true;
        });
    }
    for (auto& bucket : buckets)
        out.insert(out.end(), std::make_move_iterator(bucket.begin()), std::make_move_iterator(bucket.end()));
    return out;
}

std::optional<LatinTableau> first_filling(const Partition& shape) {
    std::optional<LatinTableau> found;
    for_each_filling(shape, [&](const LatinTableau& t) {
        found = t;
        return false;
    });
    return found;
}

bool is_fillable(const Partition& shape) { return first_filling(shape).has_value(); }

WpcRecord verify_wpc(const Partition& shape, bool want_count, int jobs) {
    WpcRecord rec;
    rec.shape = shape;
    rec.wide = is_wide(shape);
    rec.fillable = is_fillable(shape);
    if (want_count) rec.filling_count = count_fillings(shape, jobs);
    rec.consistent = rec.wide == rec.fillable;
    return rec;
}

std::vector<WpcRecord> verify_wpc_range(int max_boxes, bool want_count, int jobs) {
    auto shapes = partitions_up_to(max_boxes);
    std::vector<WpcRecord> out(shapes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(jobs))
#endif
    for (std::size_t i = 0; i < shapes.size(); ++i) out[i] = verify_wpc(shapes[i], want_count, 1);
    return out;
}

}  // namespace latab
