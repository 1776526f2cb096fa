#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qjordan {

using Int = boost::multiprecision::cpp_int;

// Univariate polynomial in q with exact integer coefficients.
// coeffs[i] is the coefficient of q^i; canonical form has no trailing
// zeros, so the zero polynomial is the empty sequence.
class Poly {
public:
    Poly() = default;

    explicit Poly(Int constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }

    explicit Poly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    // c * q^e
    static Poly monomial(Int c, int e) {
        if (c == 0) return Poly{};
        std::vector<Int> v(static_cast<size_t>(e) + 1);
        v.back() = std::move(c);
        return Poly{std::move(v)};
    }

    static Poly q_power(int e) { return monomial(1, e); }

    // [n]_q = 1 + q + ... + q^{n-1}
    static Poly q_int(int n) {
        return Poly{std::vector<Int>(static_cast<size_t>(n), Int{1})};
    }

    static Poly q_minus_one() { return Poly{std::vector<Int>{-1, 1}}; }

    bool is_zero() const { return coeffs_.empty(); }

    // degree of the zero polynomial is left undefined
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }

    const Int& coeff(int i) const {
        static const Int zero{0};
        if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return zero;
        return coeffs_[static_cast<size_t>(i)];
    }

    const Int& leading_coeff() const {
        if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    friend bool operator==(const Poly&, const Poly&) = default;

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return Poly{std::move(v)};
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
        return Poly{std::move(v)};
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly{std::move(v)};
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(int e) const {
        Poly r{Int{1}};
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    // exact Horner evaluation at an integer point
    Int eval(const Int& x) const {
        Int r{0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
        return r;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

struct QMinusOneFactorization {
    int multiplicity = 0;
    Poly quotient;  // the part not divisible by q-1
};

// Largest m with (q-1)^m | p, together with the exact quotient.
// Repeated synthetic division by q-1, stopping once p(1) != 0.
inline QMinusOneFactorization extract_qminus1(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no factorization");
    QMinusOneFactorization out;
    out.quotient = p;
    while (out.quotient.eval(1) == 0) {
        const auto& c = out.quotient.coeffs();
        std::vector<Int> quot(c.size() - 1);
        // p = (q-1) * quot  =>  quot[i-1] = c[i] + quot[i]
        Int carry{0};
        for (size_t i = c.size(); i-- > 1;) {
            carry += c[i];
            quot[i - 1] = carry;
        }
        out.quotient = Poly{std::move(quot)};
        ++out.multiplicity;
    }
    return out;
}

// q^d * p(1/q): coefficient of q^i in the result is the coefficient of
// q^{d-i} in p.  Requires d >= deg(p).
inline Poly reverse_scaled(const Poly& p, int d) {
    if (d < 0) throw std::invalid_argument("would produce negative exponents");
    if (p.is_zero()) return Poly{};
    if (d < *p.degree()) throw std::invalid_argument("would produce negative exponents");
    std::vector<Int> v(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) v[static_cast<size_t>(i)] = p.coeff(d - i);
    return Poly{std::move(v)};
}

}  // namespace qjordan
