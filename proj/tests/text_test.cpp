#include "qjordan/jordan.hpp"
#include "qjordan/text.hpp"

#include <gtest/gtest.h>

using namespace qjordan;

TEST(PolyText, Expanded) {
    EXPECT_EQ(to_string(Poly{}), "0");
    EXPECT_EQ(to_string(Poly{Int{1}}), "1");
    EXPECT_EQ(to_string(Poly{Int{-3}}), "-3");
    EXPECT_EQ(to_string(Poly::q_power(1)), "q");
    EXPECT_EQ(to_string(Poly::q_minus_one()), "q - 1");
    EXPECT_EQ(to_string(Poly::monomial(2, 3)), "2*q^3");
    EXPECT_EQ(to_string(Poly::q_minus_one().pow(2) * parse_poly("3*q^3 + q^2")),
              "3*q^5 - 5*q^4 + q^3 + q^2");
    EXPECT_EQ(to_string(Poly{std::vector<Int>{-1, 0, 1}}), "q^2 - 1");
}

TEST(PolyText, Factored) {
    EXPECT_EQ(to_factored_string(Poly::q_minus_one().pow(2) * parse_poly("3*q^3 + q^2")),
              "(q-1)^2 * (3*q^3 + q^2)");
    EXPECT_EQ(to_factored_string(Poly::q_minus_one()), "(q-1) * (1)");
    EXPECT_EQ(to_factored_string(parse_poly("2*q^2 + q")), "2*q^2 + q");
    EXPECT_EQ(to_factored_string(Poly{}), "0");
    EXPECT_EQ(to_factored_string(Poly{Int{1}}), "1");
}

TEST(PolyText, Parse) {
    EXPECT_EQ(parse_poly("0"), Poly{});
    EXPECT_EQ(parse_poly("q - 1"), Poly::q_minus_one());
    EXPECT_EQ(parse_poly("-q^2 + 2"), (Poly{std::vector<Int>{2, 0, -1}}));
    EXPECT_EQ(parse_poly("(q-1)^2 * (3*q^3 + q^2)"),
              Poly::q_minus_one().pow(2) * parse_poly("3*q^3 + q^2"));
    EXPECT_EQ(parse_poly("(q-1) * (1)"), Poly::q_minus_one());
    EXPECT_EQ(parse_poly("(2*q + 1)"), parse_poly("2*q + 1"));
    EXPECT_THROW(parse_poly("q^"), std::exception);
    EXPECT_THROW(parse_poly("3q"), std::exception);
}

TEST(PolyText, RoundTrip) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : partitions_of(n)) {
            const Poly f = f_lambda(lam);
            EXPECT_EQ(parse_poly(to_string(f)), f);
            EXPECT_EQ(parse_poly(to_factored_string(f)), f);
        }
}

TEST(PartitionText, RoundTrip) {
    EXPECT_EQ(to_string(Partition({4, 2, 2, 1})), "4,2,2,1");
    EXPECT_EQ(parse_partition("4,2,2,1"), Partition({4, 2, 2, 1}));
    EXPECT_EQ(to_string(Partition{}), "-");
    EXPECT_EQ(parse_partition("-"), Partition{});
    EXPECT_THROW(parse_partition("1,2"), std::invalid_argument);
}

TEST(PlacementText, RoundTrip) {
    const RookPlacement C(FerrersBoard::staircase(7), {{2, 3}, {1, 5}, {5, 6}, {4, 7}});
    EXPECT_EQ(to_string(C), "2,3;1,5;5,6;4,7");
    EXPECT_EQ(parse_placement("2,3;1,5;5,6;4,7", 7), C);
    EXPECT_EQ(to_string(parse_placement("-", 4)), "-");
    EXPECT_EQ(parse_placement("-", 4).num_rooks(), 0);
    EXPECT_THROW(parse_placement("1,1", 4), std::invalid_argument);
}

TEST(SetPartitionText, RoundTrip) {
    const SetPartition S({{3, 8, 9}, {1, 5}, {6, 7}, {2}, {4}});
    EXPECT_EQ(to_string(S), "3,8,9|1,5|6,7|2|4");
    EXPECT_EQ(parse_set_partition("3,8,9|1,5|6,7|2|4"), S);
    EXPECT_EQ(to_string(parse_set_partition("1|2|3")), "1|2|3");
    EXPECT_THROW(parse_set_partition("1|3"), std::invalid_argument);
}
