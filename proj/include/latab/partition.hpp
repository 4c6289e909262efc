#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace latab {

/// Non-increasing sequence of positive integers; doubles as a Young-diagram
/// shape. Rows and columns are 1-based in all text output, 0-based internally.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses "4,3,3". Rejects non-positive or increasing parts, naming the
    /// offending 1-based index in the exception message.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int total() const { return total_; }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

Partition transpose(const Partition& p);

/// Dominance order: mu >= nu iff every prefix sum of mu is at least the
/// corresponding prefix sum of nu. Defined only for equal totals; throws
/// std::invalid_argument otherwise.
bool dominates(const Partition& mu, const Partition& nu);

/// All value-distinct partitions obtained by deleting parts, including p
/// itself and excluding the empty tuple. Sorted ascending.
std::vector<Partition> subpartitions(const Partition& p);

/// Wide: every subpartition dominates its own transpose.
bool is_wide(const Partition& p);

/// Squareable: no length occurs three or more times among rows or columns.
bool is_squareable(const Partition& p);

struct SameLengthPairs {
    long rows = 0;  // a: pairs of equal-length rows
    long cols = 0;  // b: pairs of equal-length columns
};
SameLengthPairs same_length_pairs(const Partition& p);

/// Order of the full transformation group of the shape:
/// (prod k! over row-length multiplicities) * (same over columns)^2.
/// Throws std::overflow_error if it exceeds 128 bits.
unsigned __int128 isotopy_group_order(const Partition& p);

/// Partitions of exactly n, first part descending ((3), (2,1), (1,1,1), ...).
std::vector<Partition> partitions_with_total(int n);

/// Partitions with 1..max_boxes boxes, ordered by total then as above.
std::vector<Partition> partitions_up_to(int max_boxes);

}  // namespace latab
