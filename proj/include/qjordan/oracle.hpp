#pragma once

#include "qjordan/jordan.hpp"
#include "qjordan/partition.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace qjordan {

// Dense n by n matrix of residues mod a small prime.
class ModMatrix {
public:
    ModMatrix(int n, int p) : n_(n), p_(p), entries_(static_cast<size_t>(n) * n, 0) {}

    int n() const { return n_; }
    int p() const { return p_; }
    int at(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }  // 0-based
    void set(int i, int j, int v) { entries_[static_cast<size_t>(i) * n_ + j] = static_cast<uint8_t>(v); }

    bool is_zero() const {
        for (auto e : entries_) if (e != 0) return false;
        return true;
    }

    bool strictly_upper_triangular() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j <= i; ++j)
                if (at(i, j) != 0) return false;
        return true;
    }

    ModMatrix operator*(const ModMatrix& o) const {
        ModMatrix r(n_, p_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const int a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < n_; ++j)
                    r.set(i, j, (r.at(i, j) + a * o.at(k, j)) % p_);
            }
        return r;
    }

    // Jordan matrix J_lambda: block-diagonal with superdiagonal ones.
    static ModMatrix jordan(const Partition& lambda, int p) {
        ModMatrix m(lambda.n(), p);
        int offset = 0;
        for (int part : lambda.parts()) {
            for (int i = 0; i < part - 1; ++i) m.set(offset + i, offset + i + 1, 1);
            offset += part;
        }
        return m;
    }

private:
    int n_;
    int p_;
    std::vector<uint8_t> entries_;
};

// Rank over F_p by Gaussian elimination.
inline int mat_rank(const ModMatrix& X) {
    const int n = X.n();
    const int p = X.p();
    std::vector<std::vector<int>> a(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = X.at(i, j);
    auto inv_mod = [p](int x) {
        int r = 1, b = x, e = p - 2;  // Fermat, p prime
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int row = rank; row < n; ++row)
            if (a[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(rank)]);
        const int scale = inv_mod(a[static_cast<size_t>(rank)][static_cast<size_t>(col)]);
        for (int j = col; j < n; ++j)
            a[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
                a[static_cast<size_t>(rank)][static_cast<size_t>(j)] * scale % p;
        for (int row = 0; row < n; ++row) {
            if (row == rank) continue;
            const int f = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < n; ++j)
                a[static_cast<size_t>(row)][static_cast<size_t>(j)] =
                    (a[static_cast<size_t>(row)][static_cast<size_t>(j)] +
                     (p - f) * a[static_cast<size_t>(rank)][static_cast<size_t>(j)]) % p;
        }
        ++rank;
    }
    return rank;
}

// Ranks of the powers of J_lambda, combinatorially: rank(J^k) is the number
// of boxes beyond the first k columns.
inline std::vector<int> jordan_power_ranks(const Partition& lambda) {
    const Partition lc = conjugate(lambda);
    std::vector<int> ranks;
    int total = lambda.n();
    ranks.push_back(total);
    for (int k = 1; k <= lc.length(); ++k) {
        total -= lc.part(k);
        ranks.push_back(total);
    }
    if (ranks.size() == 1) ranks.push_back(0);  // empty partition: (0, 0) degenerates
    return ranks;
}

// Jordan type from the rank sequence of matrix powers: lambda'_k equals
// rank(X^{k-1}) - rank(X^k).
inline Partition jordan_type(const ModMatrix& X) {
    if (!X.strictly_upper_triangular())
        throw std::invalid_argument("matrix must be strictly upper triangular");
    std::vector<int> col_sizes;
    ModMatrix power = X;
    int prev_rank = X.n();
    for (int k = 1; prev_rank > 0; ++k) {
        const int r = (k == 1) ? mat_rank(X) : mat_rank(power);
        col_sizes.push_back(prev_rank - r);
        prev_rank = r;
        if (r > 0) power = power * X;
        if (k > X.n()) throw std::logic_error("matrix is not nilpotent");
    }
    return conjugate(Partition{std::move(col_sizes)});
}

struct TypeCensus {
    int n = 0;
    int p = 0;
    std::map<Partition, uint64_t> counts;
};

// Exhaustive census of strictly upper-triangular matrices over F_p tallied
// by Jordan type.  Free entries are enumerated column-major as a base-p
// counter.
inline TypeCensus census(int n, int p, uint64_t budget = 100000000ULL) {
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("p must be one of 2, 3, 5");
    const int free_entries = n * (n - 1) / 2;
    uint64_t total = 1;
    for (int i = 0; i < free_entries; ++i) {
        total *= static_cast<uint64_t>(p);
        if (total > budget)
            throw std::invalid_argument("enumeration budget exceeded: needs p^" +
                                        std::to_string(free_entries) + " matrices");
    }
    std::vector<std::pair<int, int>> slots;  // (row, col), 0-based, column-major
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i, j);

    TypeCensus out{n, p, {}};
    std::vector<int> digits(slots.size(), 0);
    ModMatrix X(n, p);
    for (uint64_t count = 0; count < total; ++count) {
        ++out.counts[jordan_type(X)];
        for (size_t d = 0; d < digits.size(); ++d) {
            if (++digits[d] < p) {
                X.set(slots[d].first, slots[d].second, digits[d]);
                break;
            }
            digits[d] = 0;
            X.set(slots[d].first, slots[d].second, 0);
        }
    }
    return out;
}

// Count, over all border vectors v, of matrices [J_mu v; 0 0] of Jordan
// type lambda; equals c_{mu,lambda}(p).
inline uint64_t border_extension_count(const Partition& mu, const Partition& lambda, int p) {
    bool is_cover = false;
    BoxPosition box;
    for (const auto& [lam, b] : covers_up(mu))
        if (lam == lambda) {
            is_cover = true;
            box = b;
        }
    if (!is_cover) throw std::invalid_argument("mu must be covered by lambda");
    const int m = mu.n();
    uint64_t total = 1;
    for (int i = 0; i < m; ++i) total *= static_cast<uint64_t>(p);
    ModMatrix base = ModMatrix::jordan(mu, p);
    ModMatrix X(m + 1, p);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) X.set(i, j, base.at(i, j));
    uint64_t hits = 0;
    for (uint64_t v = 0; v < total; ++v) {
        uint64_t rest = v;
        for (int i = 0; i < m; ++i) {
            X.set(i, m, static_cast<int>(rest % p));
            rest /= p;
        }
        if (jordan_type(X) == lambda) ++hits;
    }
    return hits;
}

}  // namespace qjordan
