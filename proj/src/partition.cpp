#include "latab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace latab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition: part " + std::to_string(i + 1) +
                                        " must be positive, got " + std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition: part " + std::to_string(i + 1) +
                                        " exceeds part " + std::to_string(i) +
                                        " (parts must be non-increasing)");
    }
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    int index = 1;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = comma == std::string_view::npos
                                    ? text.substr(pos)
                                    : text.substr(pos, comma - pos);
        int value = 0;
        const char* first = item.data();
        const char* last = item.data() + item.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || item.empty())
            throw std::invalid_argument("shape: part " + std::to_string(index) +
                                        " is not an integer");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        ++index;
    }
    return Partition(std::move(parts));  // re-checks positivity/monotonicity with indices
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition transpose(const Partition& p) {
    if (p.empty()) return Partition{};
    std::vector<int> cols(static_cast<std::size_t>(p[0]), 0);
    for (int len : p.parts())
        for (int j = 0; j < len; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

bool dominates(const Partition& mu, const Partition& nu) {
    if (mu.total() != nu.total())
        throw std::invalid_argument("dominance is defined only for partitions of the same total (" +
                                    std::to_string(mu.total()) + " vs " + std::to_string(nu.total()) + ")");
    long sum_mu = 0, sum_nu = 0;
    int n = std::max(mu.rows(), nu.rows());
    for (int i = 0; i < n; ++i) {
        sum_mu += i < mu.rows() ? mu[i] : 0;
        sum_nu += i < nu.rows() ? nu[i] : 0;
        if (sum_mu < sum_nu) return false;
    }
    return true;
}

std::vector<Partition> subpartitions(const Partition& p) {
    // Enumerate per-value kept-counts; value-distinct results come out directly.
    std::vector<std::pair<int, int>> runs;  // (value, multiplicity), descending values
    for (int v : p.parts()) {
        if (!runs.empty() && runs.back().first == v)
            ++runs.back().second;
        else
            runs.emplace_back(v, 1);
    }
    std::vector<Partition> out;
    std::vector<int> keep(runs.size(), 0);
    while (true) {
        std::vector<int> parts;
        for (std::size_t i = 0; i < runs.size(); ++i)
            parts.insert(parts.end(), static_cast<std::size_t>(keep[i]), runs[i].first);
        if (!parts.empty()) out.push_back(Partition(std::move(parts)));
        std::size_t i = 0;
        for (; i < runs.size(); ++i) {
            if (keep[i] < runs[i].second) {
                ++keep[i];
                std::fill(keep.begin(), keep.begin() + static_cast<long>(i), 0);
                break;
            }
        }
        if (i == runs.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_wide(const Partition& p) {
    for (const Partition& mu : subpartitions(p))
        if (!dominates(mu, transpose(mu))) return false;
    return true;
}

namespace {

bool has_triple_length(const std::vector<int>& parts) {
    int run = 1;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        run = parts[i] == parts[i - 1] ? run + 1 : 1;
        if (run >= 3) return true;
    }
    return false;
}

long pair_count(const std::vector<int>& parts) {
    long total = 0;
    long run = 1;
    for (std::size_t i = 1; i <= parts.size(); ++i) {
        if (i < parts.size() && parts[i] == parts[i - 1]) {
            ++run;
        } else {
            total += run * (run - 1) / 2;
            run = 1;
        }
    }
    return total;
}

unsigned __int128 checked_mul(unsigned __int128 a, unsigned __int128 b) {
    if (a != 0 && b > ~static_cast<unsigned __int128>(0) / a)
        throw std::overflow_error("isotopy group order exceeds 128 bits");
    return a * b;
}

unsigned __int128 multiplicity_factorial_product(const std::vector<int>& parts) {
    unsigned __int128 result = 1;
    long run = 1;
    for (std::size_t i = 1; i <= parts.size(); ++i) {
        if (i < parts.size() && parts[i] == parts[i - 1]) {
            ++run;
        } else {
            for (long k = 2; k <= run; ++k) result = checked_mul(result, static_cast<unsigned __int128>(k));
            run = 1;
        }
    }
    return result;
}

}  // namespace

bool is_squareable(const Partition& p) {
    return !has_triple_length(p.parts()) && !has_triple_length(transpose(p).parts());
}

SameLengthPairs same_length_pairs(const Partition& p) {
    return SameLengthPairs{pair_count(p.parts()), pair_count(transpose(p).parts())};
}

unsigned __int128 isotopy_group_order(const Partition& p) {
    unsigned __int128 row_group = multiplicity_factorial_product(p.parts());
    unsigned __int128 col_group = multiplicity_factorial_product(transpose(p).parts());
    return checked_mul(row_group, checked_mul(col_group, col_group));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        gen_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_with_total(int n) {
    std::vector<Partition> out;
    if (n <= 0) return out;
    std::vector<int> prefix;
    gen_partitions(n, n, prefix, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_boxes) {
    std::vector<Partition> out;
    for (int n = 1; n <= max_boxes; ++n) {
        auto ps = partitions_with_total(n);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

}  // namespace latab
