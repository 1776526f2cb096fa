#pragma once

#include "qjordan/poly.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qjordan {

// Integer partition: weakly decreasing positive parts.  Trailing zeros in
// the input are stripped so equal partitions compare equal.
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
                throw std::invalid_argument("parts must be weakly decreasing and positive");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const {  // 1-based, 0 beyond the last row
        return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }
    int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// 1-based (row, col) of a box in a Ferrers diagram.
struct BoxPosition {
    int row = 0;
    int col = 0;
    friend bool operator==(const BoxPosition&, const BoxPosition&) = default;
};

// Chain of partitions from the empty partition, each covering the previous;
// equivalent to a standard Young tableau.
struct TableauPath {
    std::vector<Partition> chain;  // chain[i] is a partition of i, chain[0] = empty
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    if (!p.empty()) {
        cols.resize(static_cast<size_t>(p.part(1)));
        for (int part : p.parts())
            for (int j = 0; j < part; ++j) ++cols[static_cast<size_t>(j)];
    }
    return Partition{std::move(cols)};
}

// All covers mu <. lambda obtained by adding one box, ordered by row index.
inline std::vector<std::pair<Partition, BoxPosition>> covers_up(const Partition& mu) {
    std::vector<std::pair<Partition, BoxPosition>> out;
    for (int r = 1; r <= mu.length() + 1; ++r) {
        if (mu.part(r) < mu.part(r - 1) || r == 1) {
            auto parts = mu.parts();
            if (r <= mu.length())
                ++parts[static_cast<size_t>(r - 1)];
            else
                parts.push_back(1);
            out.emplace_back(Partition{std::move(parts)}, BoxPosition{r, mu.part(r) + 1});
        }
    }
    return out;
}

// All mu <. lambda obtained by removing one box, ordered by row index.
// Empty input yields an empty sequence.
inline std::vector<std::pair<Partition, BoxPosition>> covers_down(const Partition& lambda) {
    std::vector<std::pair<Partition, BoxPosition>> out;
    for (int r = 1; r <= lambda.length(); ++r) {
        if (lambda.part(r) > lambda.part(r + 1)) {
            auto parts = lambda.parts();
            --parts[static_cast<size_t>(r - 1)];
            out.emplace_back(Partition{std::move(parts)}, BoxPosition{r, lambda.part(r)});
        }
    }
    return out;
}

// n_lambda = sum (i-1) * lambda_i
inline int n_lambda(const Partition& lambda) {
    int s = 0;
    for (int i = 1; i <= lambda.length(); ++i) s += (i - 1) * lambda.part(i);
    return s;
}

// Number of standard Young tableaux of shape lambda, by path counting in
// Young's lattice.  The cache is shared and lock-protected.
inline Int num_syt(const Partition& lambda) {
    static std::map<Partition, Int> cache;
    static std::mutex mtx;
    if (lambda.empty()) return 1;
    {
        std::lock_guard lock(mtx);
        if (auto it = cache.find(lambda); it != cache.end()) return it->second;
    }
    Int total = 0;
    for (const auto& [mu, box] : covers_down(lambda)) total += num_syt(mu);
    std::lock_guard lock(mtx);
    return cache.emplace(lambda, total).first->second;
}

// All chains from the empty partition to lambda.
inline std::vector<TableauPath> enumerate_syt(const Partition& lambda) {
    if (lambda.empty()) return {TableauPath{{Partition{}}}};
    std::vector<TableauPath> out;
    for (const auto& [mu, box] : covers_down(lambda)) {
        for (auto& path : enumerate_syt(mu)) {
            path.chain.push_back(lambda);
            out.push_back(std::move(path));
        }
    }
    return out;
}

namespace detail {
inline void partitions_rec(int n, int max_part, std::vector<int>& acc,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace detail

// All partitions of n in lexicographically descending order, optionally
// restricted to a given number of parts.
inline std::vector<Partition> partitions_of(int n, std::optional<int> num_parts = std::nullopt) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Partition> all;
    std::vector<int> acc;
    detail::partitions_rec(n, n, acc, all);
    if (!num_parts) return all;
    std::vector<Partition> filtered;
    for (auto& p : all)
        if (p.length() == *num_parts) filtered.push_back(std::move(p));
    return filtered;
}

}  // namespace qjordan
