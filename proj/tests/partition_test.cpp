#include "qjordan/partition.hpp"
#include "qjordan/text.hpp"

#include <gtest/gtest.h>

using namespace qjordan;

TEST(Partition, Construction) {
    EXPECT_EQ(Partition({4, 2, 2, 1, 0, 0}), Partition({4, 2, 2, 1}));
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
    EXPECT_EQ(Partition{}.n(), 0);
    EXPECT_EQ(Partition({4, 2, 2, 1}).n(), 9);
}

TEST(Partition, Conjugate) {
    EXPECT_EQ(conjugate(Partition({4, 2, 2, 1})), Partition({4, 3, 1, 1}));
    EXPECT_EQ(conjugate(Partition{}), Partition{});
    EXPECT_EQ(conjugate(Partition({5})), Partition({1, 1, 1, 1, 1}));
}

TEST(Partition, ConjugateInvolution) {
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : partitions_of(n)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Partition, CoversUp) {
    const auto from_empty = covers_up(Partition{});
    ASSERT_EQ(from_empty.size(), 1u);
    EXPECT_EQ(from_empty[0].first, Partition({1}));
    EXPECT_EQ(from_empty[0].second, (BoxPosition{1, 1}));

    const auto from_21 = covers_up(Partition({2, 1}));
    ASSERT_EQ(from_21.size(), 3u);
    EXPECT_EQ(from_21[0].first, Partition({3, 1}));
    EXPECT_EQ(from_21[0].second, (BoxPosition{1, 3}));
    EXPECT_EQ(from_21[1].first, Partition({2, 2}));
    EXPECT_EQ(from_21[1].second, (BoxPosition{2, 2}));
    EXPECT_EQ(from_21[2].first, Partition({2, 1, 1}));
    EXPECT_EQ(from_21[2].second, (BoxPosition{3, 1}));

    const auto from_111 = covers_up(Partition({1, 1, 1}));
    ASSERT_EQ(from_111.size(), 2u);
    EXPECT_EQ(from_111[0].first, Partition({2, 1, 1}));
    EXPECT_EQ(from_111[0].second, (BoxPosition{1, 2}));
    EXPECT_EQ(from_111[1].first, Partition({1, 1, 1, 1}));
    EXPECT_EQ(from_111[1].second, (BoxPosition{4, 1}));
}

TEST(Partition, CoversDown) {
    const auto from_1 = covers_down(Partition({1}));
    ASSERT_EQ(from_1.size(), 1u);
    EXPECT_EQ(from_1[0].first, Partition{});
    EXPECT_EQ(from_1[0].second, (BoxPosition{1, 1}));

    const auto from_31 = covers_down(Partition({3, 1}));
    ASSERT_EQ(from_31.size(), 2u);
    EXPECT_EQ(from_31[0].first, Partition({2, 1}));
    EXPECT_EQ(from_31[0].second, (BoxPosition{1, 3}));
    EXPECT_EQ(from_31[1].first, Partition({3}));
    EXPECT_EQ(from_31[1].second, (BoxPosition{2, 1}));

    const auto from_22 = covers_down(Partition({2, 2}));
    ASSERT_EQ(from_22.size(), 1u);
    EXPECT_EQ(from_22[0].first, Partition({2, 1}));
    EXPECT_EQ(from_22[0].second, (BoxPosition{2, 2}));

    EXPECT_TRUE(covers_down(Partition{}).empty());
}

TEST(Partition, CoversUpDownConsistency) {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& mu : partitions_of(n)) {
            for (const auto& [lam, box] : covers_up(mu)) {
                bool found = false;
                for (const auto& [back, box2] : covers_down(lam))
                    if (back == mu) {
                        found = true;
                        EXPECT_EQ(box, box2);
                    }
                EXPECT_TRUE(found);
            }
        }
    }
}

TEST(Partition, NLambda) {
    EXPECT_EQ(n_lambda(Partition({7})), 0);
    EXPECT_EQ(n_lambda(Partition({1, 1, 1, 1})), 6);
    EXPECT_EQ(n_lambda(Partition({4, 2, 2, 1})), 9);
}

TEST(Partition, NumSyt) {
    EXPECT_EQ(num_syt(Partition({6})), 1);
    EXPECT_EQ(num_syt(Partition({3, 1})), 3);
    EXPECT_EQ(num_syt(Partition({2, 2})), 2);
}

TEST(Partition, EnumerateSyt) {
    EXPECT_EQ(enumerate_syt(Partition({1, 1})).size(), 1u);
    EXPECT_EQ(enumerate_syt(Partition({3, 1})).size(), 3u);
    EXPECT_EQ(enumerate_syt(Partition({2, 2, 1})).size(), 5u);
}

TEST(Partition, EnumerateSytMatchesCount) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : partitions_of(n)) {
            const auto paths = enumerate_syt(lam);
            EXPECT_EQ(Int(paths.size()), num_syt(lam));
            for (const auto& T : paths) {
                ASSERT_EQ(static_cast<int>(T.chain.size()), n + 1);
                for (size_t i = 0; i < T.chain.size(); ++i)
                    EXPECT_EQ(T.chain[i].n(), static_cast<int>(i));
            }
        }
}

TEST(Partition, RskSanity) {
    // sum over lambda of (f^lambda)^2 = n!
    for (int n = 0; n <= 8; ++n) {
        Int total = 0;
        for (const auto& lam : partitions_of(n)) {
            const Int f = num_syt(lam);
            total += f * f;
        }
        Int factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        EXPECT_EQ(total, factorial);
    }
}

TEST(Partition, PartitionsOf) {
    const auto two_parts = partitions_of(4, 2);
    ASSERT_EQ(two_parts.size(), 2u);
    EXPECT_EQ(two_parts[0], Partition({3, 1}));
    EXPECT_EQ(two_parts[1], Partition({2, 2}));

    const auto zero = partitions_of(0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].empty());

    EXPECT_EQ(partitions_of(5).size(), 7u);

    // lexicographically descending
    const auto all = partitions_of(6);
    for (size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1].parts(), all[i].parts());
}

TEST(Partition, TextRoundTrip) {
    EXPECT_EQ(to_string(Partition({4, 2, 2, 1})), "4,2,2,1");
    EXPECT_EQ(to_string(Partition{}), "-");
    EXPECT_EQ(parse_partition("4,2,2,1"), Partition({4, 2, 2, 1}));
    EXPECT_EQ(parse_partition("-"), Partition{});
}
