#include "qjordan/poly.hpp"
#include "qjordan/text.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qjordan;

namespace {

Poly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<Int> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coeff(rng);
    return Poly{std::move(c)};
}

}  // namespace

TEST(Poly, AddCancellation) {
    EXPECT_EQ(Poly::q_minus_one() + Poly{Int{1}}, Poly::q_power(1));
}

TEST(Poly, AddIdentity) {
    const Poly p = parse_poly("3*q^2 + q - 7");
    EXPECT_EQ(Poly{} + p, p);
}

TEST(Poly, AddHand) {
    // (2q^2+q) + (3q^3+q^2) = 3q^3+3q^2+q
    const Poly a = parse_poly("2*q^2 + q");
    const Poly b = parse_poly("3*q^3 + q^2");
    EXPECT_EQ(a + b, parse_poly("3*q^3 + 3*q^2 + q"));
}

TEST(Poly, MulDifferenceOfSquares) {
    const Poly q_plus_one = parse_poly("q + 1");
    EXPECT_EQ(Poly::q_minus_one() * q_plus_one, parse_poly("q^2 - 1"));
}

TEST(Poly, MulIdentity) {
    const Poly p = parse_poly("5*q^4 - 2*q");
    EXPECT_EQ(p * Poly{Int{1}}, p);
}

TEST(Poly, MulF31Expansion) {
    // (q-1)^2 (3q^3+q^2)
    const Poly f31 = Poly::q_minus_one().pow(2) * parse_poly("3*q^3 + q^2");
    EXPECT_EQ(f31, parse_poly("3*q^5 - 5*q^4 + q^3 + q^2"));
}

TEST(Poly, EvalInt) {
    EXPECT_EQ(parse_poly("q^2 - 1").eval(2), 3);
    EXPECT_EQ(Poly{}.eval(12345), 0);
    const Poly f31 = Poly::q_minus_one().pow(2) * parse_poly("3*q^3 + q^2");
    EXPECT_EQ(f31.eval(2), 28);
}

TEST(Poly, ExtractQMinusOne) {
    const auto a = extract_qminus1(parse_poly("q^2 - 1"));
    EXPECT_EQ(a.multiplicity, 1);
    EXPECT_EQ(a.quotient, parse_poly("q + 1"));

    const auto b = extract_qminus1(Poly{Int{1}});
    EXPECT_EQ(b.multiplicity, 0);
    EXPECT_EQ(b.quotient, Poly{Int{1}});

    const Poly f22 = Poly::q_minus_one().pow(2) * parse_poly("2*q^2 + q");
    const auto c = extract_qminus1(f22);
    EXPECT_EQ(c.multiplicity, 2);
    EXPECT_EQ(c.quotient, parse_poly("2*q^2 + q"));

    EXPECT_THROW(extract_qminus1(Poly{}), std::invalid_argument);
}

TEST(Poly, ReverseScaled) {
    EXPECT_EQ(reverse_scaled(parse_poly("q^3 + 3*q^2 + 3*q"), 4),
              parse_poly("3*q^3 + 3*q^2 + q"));
    EXPECT_EQ(reverse_scaled(Poly{Int{1}}, 0), Poly{Int{1}});
    EXPECT_EQ(reverse_scaled(Poly::q_power(1), 2), Poly::q_power(1));
    EXPECT_THROW(reverse_scaled(parse_poly("q^3"), 2), std::invalid_argument);
}

TEST(Poly, ReverseScaledRoundTrip) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly p = random_poly(rng);
        if (p.is_zero()) continue;
        const int d = *p.degree() + trial % 3;
        EXPECT_EQ(reverse_scaled(reverse_scaled(p, d), d), p);
    }
}

TEST(Poly, ExtractThenRemultiply) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Poly p = random_poly(rng);
        if (p.is_zero()) continue;
        p *= Poly::q_minus_one().pow(trial % 4);
        const auto fac = extract_qminus1(p);
        EXPECT_EQ(Poly::q_minus_one().pow(fac.multiplicity) * fac.quotient, p);
        EXPECT_NE(fac.quotient.eval(1), 0);
    }
}

TEST(Poly, RingAxioms) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
    }
}

TEST(Poly, ZeroDegreeIsUndefined) {
    EXPECT_FALSE(Poly{}.degree().has_value());
    EXPECT_EQ(*parse_poly("q^4").degree(), 4);
}
