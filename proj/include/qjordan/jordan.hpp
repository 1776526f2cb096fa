#pragma once

#include "qjordan/partition.hpp"
#include "qjordan/poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qjordan {

inline Int binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// Weight c_{mu,lambda}(q) of the cover edge adding `box` to mu:
//   q^{|mu| - mu'_1}                                 if the box is in column 1,
//   q^{|mu| - mu'_{j-1}} (q^{mu'_{j-1} - mu'_j} - 1)  if it is in column j >= 2.
inline Poly edge_weight(const Partition& mu, const BoxPosition& box) {
    for (const auto& [lam, b] : covers_up(mu)) {
        if (b == box) {
            const Partition muc = conjugate(mu);
            const int m = mu.n();
            const int j = box.col;
            if (j == 1) return Poly::q_power(m - muc.part(1));
            return Poly::q_power(m - muc.part(j - 1)) *
                   (Poly::q_power(muc.part(j - 1) - muc.part(j)) - Poly{Int{1}});
        }
    }
    throw std::invalid_argument("not a cover");
}

// F_lambda(q) by the covering recurrence, memoized across calls.
inline Poly f_lambda(const Partition& lambda) {
    static std::map<Partition, Poly> cache;
    static std::mutex mtx;
    if (lambda.empty()) return Poly{Int{1}};
    {
        std::lock_guard lock(mtx);
        if (auto it = cache.find(lambda); it != cache.end()) return it->second;
    }
    Poly total;
    for (const auto& [mu, box] : covers_down(lambda))
        total += edge_weight(mu, box) * f_lambda(mu);
    std::lock_guard lock(mtx);
    return cache.emplace(lambda, std::move(total)).first->second;
}

// Weight of a tableau chain: product over steps of
//   q^{i - l(lambda^(i))}                          (box i in column 1)
//   q^{i - lambda^(i)'_j} - q^{i-1 - lambda^(i)'_{j-1}}  (box i in column j >= 2)
inline Poly tableau_weight(const TableauPath& T) {
    Poly w{Int{1}};
    for (size_t i = 1; i < T.chain.size(); ++i) {
        const Partition& prev = T.chain[i - 1];
        const Partition& cur = T.chain[i];
        // locate the added box
        int row = 0;
        for (int r = 1; r <= cur.length(); ++r)
            if (cur.part(r) != prev.part(r)) {
                row = r;
                break;
            }
        const int j = cur.part(row);
        const int step = static_cast<int>(i);
        if (j == 1) {
            w *= Poly::q_power(step - cur.length());
        } else {
            const Partition curc = conjugate(cur);
            w *= Poly::q_power(step - curc.part(j)) -
                 Poly::q_power(step - 1 - curc.part(j - 1));
        }
    }
    return w;
}

// F_lambda(q) as a sum over standard Young tableaux of shape lambda.
inline Poly f_lambda_syt(const Partition& lambda) {
    Poly total;
    for (const auto& T : enumerate_syt(lambda)) total += tableau_weight(T);
    return total;
}

// Generalized Catalan number C_{n,k} = C(n+k,k) - C(n+k,k-1); zero outside
// 0 <= k <= n so the triangle recurrence holds uniformly.
inline Int catalan(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k == 0) return 1;
    return binomial(n + k, k) - binomial(n + k, k - 1);
}

inline int choose2(int n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Hook shape lambda = (n-k+1, 1^{k-1}) with n > k >= 2.
inline Poly f_hook(int n, int k) {
    if (!(n > k && k >= 2)) throw std::invalid_argument("not a proper hook");
    const int alpha = choose2(n - 1) - choose2(k - 1);
    Poly sum;
    for (int i = 0; i <= k - 1; ++i)
        sum += Poly::monomial(binomial(n - i - 1, k - i - 1), alpha - i);
    return Poly::q_minus_one().pow(n - k) * sum;
}

// Two-row shape lambda = (r,s), r >= s >= 1.
inline Poly f_two_rows(int r, int s) {
    if (!(r >= s && s >= 1)) throw std::invalid_argument("need r >= s >= 1");
    if (r > s) {
        Poly sum;
        for (int i = 0; i <= s; ++i) sum += Poly::monomial(catalan(r + s - i, i), i);
        return Poly::q_minus_one().pow(r + s - 2) *
               Poly::q_power(choose2(r + s - 1) - 2 * s + 1) * sum;
    }
    Poly sum;
    for (int i = 0; i <= r - 1; ++i) sum += Poly::monomial(catalan(2 * r - 1 - i, i), i);
    return Poly::q_minus_one().pow(2 * r - 2) * Poly::q_power(choose2(2 * r - 2)) * sum;
}

// Alternative factorization of F_{(r,r)} over Dyck-path diagonal touches.
inline Poly f_two_equal_alt(int r) {
    if (r < 1) throw std::invalid_argument("need r >= 1");
    const Poly q_plus_one{std::vector<Int>{1, 1}};
    Poly sum;
    for (int i = 0; i <= r - 1; ++i)
        sum += Poly::monomial(catalan(r - 1, r - 1 - i), 2 * (r - 1) * (r - 1) - i) *
               q_plus_one.pow(i);
    return Poly::q_minus_one().pow(2 * r - 2) * sum;
}

// Lattice path from (0,0) to (n,k) staying weakly below y = x.
struct DyckPath {
    enum Step : char { East = 'E', North = 'N' };
    std::vector<Step> steps;
};

namespace detail {
inline void dyck_rec(int n, int k, int x, int y, DyckPath& acc, std::vector<DyckPath>& out) {
    if (x == n && y == k) {
        out.push_back(acc);
        return;
    }
    if (x < n) {
        acc.steps.push_back(DyckPath::East);
        dyck_rec(n, k, x + 1, y, acc, out);
        acc.steps.pop_back();
    }
    if (y < k && y < x) {
        acc.steps.push_back(DyckPath::North);
        dyck_rec(n, k, x, y + 1, acc, out);
        acc.steps.pop_back();
    }
}
}  // namespace detail

inline std::vector<DyckPath> dyck_paths(int n, int k) {
    if (!(0 <= k && k <= n)) throw std::invalid_argument("need 0 <= k <= n");
    std::vector<DyckPath> out;
    DyckPath acc;
    detail::dyck_rec(n, k, 0, 0, acc, out);
    return out;
}

struct DyckStats {
    int coarea = 0;          // whole squares between the path and the x-axis
    std::vector<int> rho;    // rho_i = x_i - i + 1 for the i-th north step, bottom row first
};

inline DyckStats dyck_stats(const DyckPath& path) {
    DyckStats st;
    int x = 0, y = 0;
    for (auto step : path.steps) {
        if (step == DyckPath::East) {
            st.coarea += y;
            ++x;
        } else {
            ++y;
            st.rho.push_back(x - y + 1);
        }
    }
    return st;
}

// Two-column shape lambda = (2^r, 1^s):
//   (q-1)^r q^{C(r,2)} sum over Dyck paths to (r+s, r) of
//   q^{coarea} prod [rho_i]_q.
inline Poly f_two_columns(int r, int s) {
    if (r < 0 || s < 0 || r + s < 1) throw std::invalid_argument("need r,s >= 0 and r+s >= 1");
    Poly sum;
    for (const auto& path : dyck_paths(r + s, r)) {
        const auto st = dyck_stats(path);
        Poly term = Poly::q_power(st.coarea);
        for (int rho : st.rho) term *= Poly::q_int(rho);
        sum += term;
    }
    return Poly::q_minus_one().pow(r) * Poly::q_power(choose2(r)) * sum;
}

// G_lambda(q) with F_lambda = (q-1)^{n - l(lambda)} G_lambda; the extracted
// multiplicity must match or the recurrence implementation is broken.
inline Poly g_lambda(const Partition& lambda) {
    if (lambda.empty()) return Poly{Int{1}};
    const auto fac = extract_qminus1(f_lambda(lambda));
    if (fac.multiplicity != lambda.n() - lambda.length())
        throw std::logic_error("(q-1)-multiplicity does not equal n - l(lambda)");
    return fac.quotient;
}

// Coefficient-wise comparison of the two F_{(k+1,k+1)} factorizations with
// the (q-1)^{2k} factor removed.
struct CatalanIdentityReport {
    Poly touch_form;   // sum_i C_{k,k-i} q^{2k^2-i} (q+1)^i
    Poly stirling_form;  // q^{C(2k,2)} sum_i C_{2k-i,i} q^i
    // (m, coefficient of q^{2k^2-m} on each side)
    std::vector<std::tuple<int, Int, Int>> coefficients;
    bool equal = false;
};

inline CatalanIdentityReport catalan_coefficient_identity(int k) {
    if (k < 0) throw std::invalid_argument("need k >= 0");
    CatalanIdentityReport rep;
    const Poly q_plus_one{std::vector<Int>{1, 1}};
    for (int i = 0; i <= k; ++i)
        rep.touch_form +=
            Poly::monomial(catalan(k, k - i), 2 * k * k - i) * q_plus_one.pow(i);
    Poly sum;
    for (int i = 0; i <= k; ++i) sum += Poly::monomial(catalan(2 * k + 1 - i, i), i);
    rep.stirling_form = Poly::q_power(choose2(2 * k)) * sum;
    for (int m = 0; m <= k; ++m)
        rep.coefficients.emplace_back(m, rep.touch_form.coeff(2 * k * k - m),
                                      rep.stirling_form.coeff(2 * k * k - m));
    rep.equal = rep.touch_form == rep.stirling_form;
    return rep;
}

}  // namespace qjordan
