#pragma once

#include "latab/partition.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latab {

enum class TransformKind : std::uint8_t { Row, Col, Ent };

/// One transposition acting on a tableau: two equal-length rows, two
/// equal-length columns, or two equally frequent entry values. 1-based, p < q.
struct Transform {
    TransformKind kind;
    int p;
    int q;
    friend bool operator==(const Transform&, const Transform&) = default;
};

std::string to_string(const Transform& t);                    // "c(1,2)"
std::optional<Transform> parse_transform(std::string_view s); // inverse of the above

struct TableauError : std::runtime_error {
    enum class Kind { ShapeMismatch, RowNotPermutation, ColumnRepeat };
    TableauError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

struct IllegalTransform : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Cells = std::vector<std::uint8_t>;  // row-major filling

/// A checked Latin filling of a Young diagram: row i is a permutation of
/// 1..lambda_i and no column repeats an entry.
class LatinTableau {
public:
    LatinTableau(Partition shape, const std::vector<std::vector<int>>& rows);

    /// Wraps cells already known to satisfy the Latin constraints.
    static LatinTableau unchecked(Partition shape, Cells cells);

    const Partition& shape() const { return shape_; }
    const Cells& cells() const { return cells_; }
    int at(int row, int col) const;  // 0-based
    std::vector<std::vector<int>> rows() const;
    std::string to_line() const;     // rows joined with " / "

    friend bool operator==(const LatinTableau& a, const LatinTableau& b) {
        return a.shape_ == b.shape_ && a.cells_ == b.cells_;
    }
    friend std::strong_ordering operator<=>(const LatinTableau& a, const LatinTableau& b) {
        if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
        return a.cells_ <=> b.cells_;
    }

private:
    LatinTableau() = default;
    Partition shape_;
    Cells cells_;
};

/// Checked construction; throws TableauError naming the offending row/column.
LatinTableau validate(const Partition& shape, const std::vector<std::vector<int>>& rows);

/// Multiplicity sequence of the entries 1,2,...; always equals transpose(shape).
Partition content(const LatinTableau& t);

bool is_legal(const Transform& t, const Partition& shape);

/// All legal transforms: row pairs, then column pairs, then entry pairs,
/// each block in lexicographic order. Length is a + 2b.
std::vector<Transform> generators(const Partition& shape);

/// Applies one transform; throws IllegalTransform if the pair is not legal
/// for the shape. Every legal transform is an involution.
LatinTableau apply(const Transform& t, const LatinTableau& T);

}  // namespace latab
