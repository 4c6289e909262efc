#include "latab/constructions.hpp"

#include <stdexcept>

namespace latab {

namespace {

std::vector<std::vector<int>> rows_from_digits(const std::vector<std::string>& rows) {
    std::vector<std::vector<int>> out;
    for (const std::string& row : rows) {
        std::vector<int> r;
        for (char ch : row) r.push_back(ch - '0');
        out.push_back(std::move(r));
    }
    return out;
}

LatinTableau tableau_from_digits(const std::vector<std::string>& rows) {
    auto r = rows_from_digits(rows);
    std::vector<int> parts;
    for (const auto& row : r) parts.push_back(static_cast<int>(row.size()));
    return validate(Partition(std::move(parts)), r);
}

// Row k from the bottom of the even-d tableau: 2k-1, 2k-3, ..., 3, 1, 2, 4, ..., 2k.
std::vector<int> even_family_row(int k) {
    std::vector<int> row;
    for (int v = 2 * k - 1; v >= 1; v -= 2) row.push_back(v);
    for (int v = 2; v <= 2 * k; v += 2) row.push_back(v);
    return row;
}

LatinTableau build_even(int d) {
    std::vector<std::vector<int>> rows;
    for (int k = d / 2; k >= 1; --k) rows.push_back(even_family_row(k));
    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return validate(Partition(std::move(parts)), rows);
}

}  // namespace

LatinTableau build_Td(int d) {
    if (d < 0) throw std::invalid_argument("cube family needs d >= 0");
    switch (d) {
        case 0: return tableau_from_digits({"1"});
        case 1: return tableau_from_digits({"12"});
        case 2: return tableau_from_digits({"312", "12"});
        case 3: return tableau_from_digits({"2431", "4312", "312", "12"});
        default: break;
    }
    if (d % 2 == 0) return build_even(d);
    // Odd d > 3: first row d-1, d-2, d-4, ..., 3, 1, 2, 4, ..., d-3 on top of T_{d-1}.
    std::vector<int> first;
    first.push_back(d - 1);
    for (int v = d - 2; v >= 1; v -= 2) first.push_back(v);
    for (int v = 2; v <= d - 3; v += 2) first.push_back(v);
    LatinTableau lower = build_Td(d - 1);
    std::vector<std::vector<int>> rows;
    rows.push_back(std::move(first));
    for (const auto& row : lower.rows()) rows.push_back(row);
    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return validate(Partition(std::move(parts)), rows);
}

LatinTableau build_symmetric_family(int k) {
    if (k < 1) throw std::invalid_argument("symmetric family needs k >= 1");
    // Row pair r (from the top) meets column pair c in a 2x2 block filled
    // x y / y x with x = 2(k+2-r-c), y = x-1.
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= k; ++r) {
        std::vector<int> odd_row, even_row;
        for (int c = 1; c <= k + 1 - r; ++c) {
            int x = 2 * (k + 2 - r - c);
            odd_row.push_back(x);
            odd_row.push_back(x - 1);
            even_row.push_back(x - 1);
            even_row.push_back(x);
        }
        rows.push_back(std::move(odd_row));
        rows.push_back(std::move(even_row));
    }
    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return validate(Partition(std::move(parts)), rows);
}

std::vector<CatalogEntry> appendix_catalog() {
    struct Raw {
        std::vector<std::string> rows;
        std::string source;
    };
    // Ellipsis-bearing rows may be extended arbitrarily without destroying the
    // triangle; the catalog ships the minimal instance. The (5,5,2,2) entry
    // needs its second row completed to "34521" so that the trailing "21"
    // lands under the first row's "12".
    const std::vector<Raw> raws = {
        {{"3412", "4321", "12", "21"}, "3412..., 4321, 12, 21"},
        {{"53412", "34521", "12", "21"}, "534...12..., 34......21, 12, 21"},
        {{"231", "312", "12"}, "231, 312, 12"},
        {{"3412", "4321", "123", "21"}, "3412, 4321, 123, 21"},
        {{"213", "321"}, "213, 321"},
        {{"213", "321", "1"}, "213, 321, 1"},
        {{"2143", "3412", "123"}, "2143, 3412, 123"},
        {{"3412", "4321"}, "3412, 4321"},
        {{"3412", "4321", "1"}, "3412, 4321, 1"},
        {{"3412", "4321", "12"}, "3412, 4321, 12"},
        {{"3412", "4321", "21", "1"}, "3412, 4321, 21, 1"},
        {{"3412", "12", "21"}, "3412..., 12, 21"},
        {{"132", "213", "321"}, "132..., 213, 321"},
        {{"4321", "213", "321", "1"}, "4321..., 213, 321, 1"},
        {{"4213", "2341", "1432", "312"}, "4213..., 2341, 1432, 312"},
        {{"1234", "3412", "4321"}, "1234..., 3412, 4321"},
        {{"1234", "3412", "4321", "21"}, "1234..., 3412, 4321, 21"},
        {{"52341", "3412", "4321", "21", "1"}, "52341..., 3412, 4321, 21, 1"},
        {{"563412", "3412", "4321", "21", "12"}, "563412..., 3412, 4321, 21, 12"},
        {{"34521", "4321", "12", "21"}, "34521..., 4321..., 12, 21"},
        {{"1234", "2143", "3412", "4321"}, "1234, 2143, 3412, 4321"},
        {{"52341", "2143", "3412", "4321"}, "52341..., 2143..., 3412, 4321"},
        {{"52341", "2143", "3412", "4321", "1"}, "52341..., 2143..., 3412, 4321, 1"},
        {{"25341", "51432", "3412", "4321", "12"}, "25341, 51432, 3412, 4321, 12"},
        {{"563412", "2143", "3412", "4321", "12"}, "563412..., 2143..., 3412, 4321, 12"},
        {{"653421", "52431", "3412", "4321", "21", "1"}, "653421..., 52431..., 3412, 4321, 21, 1"},
        {{"653421", "564312", "3412", "4321", "21", "12"}, "653421, 564312, 3412, 4321, 21, 12"},
        {{"6534721", "564321", "3412", "4321", "21", "12"}, "6534721..., 564321..., 3412, 4321, 21, 12"},
    };
    std::vector<CatalogEntry> out;
    for (const Raw& raw : raws) {
        LatinTableau t = tableau_from_digits(raw.rows);
        std::string name = "(" + t.shape().to_string() + ")";
        out.push_back(CatalogEntry{std::move(name), std::move(t),
                                   CatalogExpectation{true, 4}, raw.source});
    }
    return out;
}

}  // namespace latab
