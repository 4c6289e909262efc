#include "latab/tableau.hpp"

#include <algorithm>
#include <charconv>

namespace latab {

std::string to_string(const Transform& t) {
    char k = t.kind == TransformKind::Row ? 'r' : t.kind == TransformKind::Col ? 'c' : 's';
    return std::string(1, k) + "(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
}

std::optional<Transform> parse_transform(std::string_view s) {
    if (s.size() < 6 || s[1] != '(' || s.back() != ')') return std::nullopt;
    TransformKind kind;
    switch (s[0]) {
        case 'r': kind = TransformKind::Row; break;
        case 'c': kind = TransformKind::Col; break;
        case 's': kind = TransformKind::Ent; break;
        default: return std::nullopt;
    }
    std::string_view body = s.substr(2, s.size() - 3);
    std::size_t comma = body.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    int p = 0, q = 0;
    auto parse_int = [](std::string_view item, int& out) {
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), out);
        return ec == std::errc() && ptr == item.data() + item.size();
    };
    if (!parse_int(body.substr(0, comma), p) || !parse_int(body.substr(comma + 1), q)) return std::nullopt;
    if (p <= 0 || q <= p) return std::nullopt;
    return Transform{kind, p, q};
}

LatinTableau::LatinTableau(Partition shape, const std::vector<std::vector<int>>& rows) {
    *this = validate(shape, rows);
}

LatinTableau LatinTableau::unchecked(Partition shape, Cells cells) {
    LatinTableau t;
    t.shape_ = std::move(shape);
    t.cells_ = std::move(cells);
    return t;
}

int LatinTableau::at(int row, int col) const {
    std::size_t offset = 0;
    for (int i = 0; i < row; ++i) offset += static_cast<std::size_t>(shape_[i]);
    return cells_[offset + static_cast<std::size_t>(col)];
}

std::vector<std::vector<int>> LatinTableau::rows() const {
    std::vector<std::vector<int>> out;
    std::size_t offset = 0;
    for (int i = 0; i < shape_.rows(); ++i) {
        out.emplace_back(cells_.begin() + static_cast<long>(offset),
                         cells_.begin() + static_cast<long>(offset + static_cast<std::size_t>(shape_[i])));
        offset += static_cast<std::size_t>(shape_[i]);
    }
    return out;
}

std::string LatinTableau::to_line() const {
    std::string out;
    std::size_t offset = 0;
    for (int i = 0; i < shape_.rows(); ++i) {
        if (i) out += " / ";
        for (int j = 0; j < shape_[i]; ++j) {
            if (j) out += ' ';
            out += std::to_string(cells_[offset + static_cast<std::size_t>(j)]);
        }
        offset += static_cast<std::size_t>(shape_[i]);
    }
    return out;
}

LatinTableau validate(const Partition& shape, const std::vector<std::vector<int>>& rows) {
    // Entries live in uint8 cells and 64-bit masks; rows cap out at 64 boxes.
    if (!shape.empty() && shape[0] > 64)
        throw std::invalid_argument("tableaux support rows up to length 64, shape has " +
                                    std::to_string(shape[0]));
    if (static_cast<int>(rows.size()) != shape.rows())
        throw TableauError(TableauError::Kind::ShapeMismatch,
                           "tableau has " + std::to_string(rows.size()) + " rows, shape " +
                               shape.to_string() + " has " + std::to_string(shape.rows()));
    for (int i = 0; i < shape.rows(); ++i)
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != shape[i])
            throw TableauError(TableauError::Kind::ShapeMismatch,
                               "row " + std::to_string(i + 1) + " has " +
                                   std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                                   " entries, shape expects " + std::to_string(shape[i]));

    Cells cells;
    cells.reserve(static_cast<std::size_t>(shape.total()));
    for (int i = 0; i < shape.rows(); ++i) {
        std::uint64_t seen = 0;
        for (int v : rows[static_cast<std::size_t>(i)]) {
            if (v < 1 || v > shape[i] || (seen >> (v - 1)) & 1)
                throw TableauError(TableauError::Kind::RowNotPermutation,
                                   "row " + std::to_string(i + 1) + " is not a permutation of 1.." +
                                       std::to_string(shape[i]) + " (entry " + std::to_string(v) + ")");
            seen |= std::uint64_t{1} << (v - 1);
            cells.push_back(static_cast<std::uint8_t>(v));
        }
    }

    // Column constraint: rows are left-justified, so column j spans rows 0..lambda'_j-1.
    for (int j = 0; j < (shape.empty() ? 0 : shape[0]); ++j) {
        std::uint64_t seen = 0;
        std::vector<int> first_row(65, 0);
        std::size_t offset = 0;
        for (int i = 0; i < shape.rows() && shape[i] > j; ++i) {
            int v = cells[offset + static_cast<std::size_t>(j)];
            if ((seen >> (v - 1)) & 1)
                throw TableauError(TableauError::Kind::ColumnRepeat,
                                   "column " + std::to_string(j + 1) + " repeats entry " +
                                       std::to_string(v) + " (rows " +
                                       std::to_string(first_row[static_cast<std::size_t>(v)]) + " and " +
                                       std::to_string(i + 1) + ")");
            seen |= std::uint64_t{1} << (v - 1);
            first_row[static_cast<std::size_t>(v)] = i + 1;
            offset += static_cast<std::size_t>(shape[i]);
        }
    }

    LatinTableau t = LatinTableau::unchecked(shape, std::move(cells));
    // Row and column constraints force content(t) == transpose(shape); a cheap
    // recount guards against logic rot here.
    if (content(t) != transpose(shape))
        throw TableauError(TableauError::Kind::ShapeMismatch, "content does not match transposed shape");
    return t;
}

Partition content(const LatinTableau& t) {
    if (t.shape().empty()) return Partition{};
    std::vector<int> counts(static_cast<std::size_t>(t.shape()[0]), 0);
    for (std::uint8_t v : t.cells()) ++counts[static_cast<std::size_t>(v - 1)];
    return Partition(std::move(counts));
}

bool is_legal(const Transform& t, const Partition& shape) {
    if (t.p < 1 || t.q <= t.p) return false;
    if (t.kind == TransformKind::Row)
        return t.q <= shape.rows() && shape[t.p - 1] == shape[t.q - 1];
    // Column and entry legality are both read off the transposed shape: the
    // content of any filling equals transpose(shape).
    Partition cols = transpose(shape);
    return t.q <= cols.rows() && cols[t.p - 1] == cols[t.q - 1];
}

std::vector<Transform> generators(const Partition& shape) {
    std::vector<Transform> out;
    auto pairs_of = [&out](const std::vector<int>& parts, TransformKind kind) {
        int n = static_cast<int>(parts.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (parts[static_cast<std::size_t>(i)] == parts[static_cast<std::size_t>(j)])
                    out.push_back(Transform{kind, i + 1, j + 1});
    };
    pairs_of(shape.parts(), TransformKind::Row);
    Partition cols = transpose(shape);
    pairs_of(cols.parts(), TransformKind::Col);
    pairs_of(cols.parts(), TransformKind::Ent);
    return out;
}

LatinTableau apply(const Transform& t, const LatinTableau& T) {
    const Partition& shape = T.shape();
    if (!is_legal(t, shape))
        throw IllegalTransform("transform " + to_string(t) + " is not legal for shape " + shape.to_string());

    Cells cells = T.cells();
    switch (t.kind) {
        case TransformKind::Row: {
            std::size_t off_p = 0, off_q = 0, offset = 0;
            for (int i = 0; i < shape.rows(); ++i) {
                if (i == t.p - 1) off_p = offset;
                if (i == t.q - 1) off_q = offset;
                offset += static_cast<std::size_t>(shape[i]);
            }
            std::swap_ranges(cells.begin() + static_cast<long>(off_p),
                             cells.begin() + static_cast<long>(off_p + static_cast<std::size_t>(shape[t.p - 1])),
                             cells.begin() + static_cast<long>(off_q));
            break;
        }
        case TransformKind::Col: {
            // Equal column lengths mean every row meeting column q also meets p.
            std::size_t offset = 0;
            for (int i = 0; i < shape.rows(); ++i) {
                if (shape[i] >= t.q)
                    std::swap(cells[offset + static_cast<std::size_t>(t.p - 1)],
                              cells[offset + static_cast<std::size_t>(t.q - 1)]);
                offset += static_cast<std::size_t>(shape[i]);
            }
            break;
        }
        case TransformKind::Ent: {
            auto x = static_cast<std::uint8_t>(t.p);
            auto y = static_cast<std::uint8_t>(t.q);
            for (auto& c : cells) c = c == x ? y : c == y ? x : c;
            break;
        }
    }
    return LatinTableau::unchecked(shape, std::move(cells));
}

}  // namespace latab
