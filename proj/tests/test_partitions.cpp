#include <superdual/partition.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace superdual;

namespace {

// Column lengths counted box by box on the diagram.
Partition conjugate_by_columns(const Partition &lambda)
{
    std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts()) {
        for (int c = 0; c < part; ++c) {
            ++cols[static_cast<std::size_t>(c)];
        }
    }
    return Partition(cols);
}

// Standard tableaux counted by removing corners recursively.
std::int64_t count_standard(std::vector<int> rows)
{
    while (!rows.empty() && rows.back() == 0) {
        rows.pop_back();
    }
    if (rows.empty()) {
        return 1;
    }
    std::int64_t total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i + 1 == rows.size() || rows[i] > rows[i + 1]) {
            --rows[i];
            total += count_standard(rows);
            ++rows[i];
        }
    }
    return total;
}

} // namespace

TEST(Partition, CanonicalFormDropsTrailingZeros)
{
    EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
    EXPECT_EQ(Partition({3, 1})[5], 0);
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
}

TEST(Partition, ParseAndRender)
{
    EXPECT_EQ(Partition::parse("7,5,4,3,1"), Partition({7, 5, 4, 3, 1}));
    EXPECT_EQ(Partition::parse(""), Partition());
    EXPECT_EQ(Partition::parse("0"), Partition());
    EXPECT_EQ(Partition({7, 5, 4, 3, 1}).to_string(), "7,5,4,3,1");
    EXPECT_THROW(Partition::parse("3,,1"), std::invalid_argument);
    EXPECT_THROW(Partition::parse("1,3"), std::invalid_argument);
    EXPECT_THROW(Partition::parse("a"), std::invalid_argument);
}

TEST(Partition, ConjugateExamples)
{
    EXPECT_EQ(Partition({7, 5, 4, 3, 1}).conjugate(), Partition({5, 4, 4, 3, 2, 1, 1}));
    EXPECT_EQ(Partition().conjugate(), Partition());
    EXPECT_EQ(Partition({1, 1, 1}).conjugate(), Partition({3}));
}

TEST(Partition, ConjugateMatchesColumnCountAndIsInvolutive)
{
    for (int k = 0; k <= 12; ++k) {
        for (const auto &lambda : partitions_of(k)) {
            EXPECT_EQ(lambda.conjugate(), conjugate_by_columns(lambda)) << lambda.to_string();
            EXPECT_EQ(lambda.conjugate().conjugate(), lambda) << lambda.to_string();
        }
    }
}

TEST(Partition, PartitionCounts)
{
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int k = 0; k <= 10; ++k) {
        EXPECT_EQ(partitions_of(k).size(), p[static_cast<std::size_t>(k)]);
    }
}

TEST(Partition, HookCondition)
{
    EXPECT_TRUE(is_hook(Partition({7, 2, 2, 1, 1}), {1, 2}));
    EXPECT_TRUE(is_hook(Partition(), {0, 1}));
    EXPECT_TRUE(is_hook(Partition(), {3, 0}));
    EXPECT_FALSE(is_hook(Partition({3, 3}), {1, 2}));
    EXPECT_FALSE(is_hook(Partition({1, 1}), {1, 0}));
}

TEST(Partition, ModifiedFrobeniusExamples)
{
    const FrobeniusCoordinates fc = modified_frobenius(Partition({7, 5, 4, 3, 1}));
    EXPECT_EQ(fc.p, std::vector<int>({7, 4, 2}));
    EXPECT_EQ(fc.q, std::vector<int>({4, 2, 1}));
    EXPECT_EQ(fc.to_string(), "p=7,4,2 q=4,2,1");
    EXPECT_TRUE(modified_frobenius(Partition()).p.empty());
    const FrobeniusCoordinates one = modified_frobenius(Partition({1}));
    EXPECT_EQ(one.p, std::vector<int>({1}));
    EXPECT_EQ(one.q, std::vector<int>({0}));
}

TEST(Partition, FrobeniusRoundTripAndSize)
{
    for (int k = 0; k <= 10; ++k) {
        for (const auto &lambda : partitions_of(k)) {
            const FrobeniusCoordinates fc = modified_frobenius(lambda);
            int total = 0;
            for (std::size_t i = 0; i < fc.p.size(); ++i) {
                total += fc.p[i] + fc.q[i];
                EXPECT_GT(fc.p[i], 0);
                if (i > 0) {
                    EXPECT_LT(fc.p[i], fc.p[i - 1]);
                    EXPECT_LT(fc.q[i], fc.q[i - 1]);
                }
            }
            EXPECT_EQ(total, k);
            EXPECT_EQ(from_frobenius(fc), lambda);
        }
    }
    EXPECT_THROW(from_frobenius({{2, 3}, {1, 0}}), std::invalid_argument);
}

TEST(Partition, RectangleAtypicalityExamples)
{
    EXPECT_EQ(rectangle_atypicality(Partition({1}), {1, 1}), 0);
    EXPECT_EQ(rectangle_atypicality(Partition(), {1, 1}), 1);
    EXPECT_EQ(rectangle_atypicality(Partition({2, 2}), {2, 2}), 0);
    EXPECT_THROW(rectangle_atypicality(Partition({3, 3}), {1, 2}), std::invalid_argument);
}

TEST(Partition, TypicalExactlyWhenLastEvenRowIsLong)
{
    for (int m = 0; m <= 3; ++m) {
        for (int n = 0; n <= 3; ++n) {
            if (m + n == 0) {
                continue;
            }
            for (int k = 0; k <= 8; ++k) {
                for (const auto &lambda : hook_partitions(k, {m, n})) {
                    const bool typical = m == 0 || lambda[static_cast<std::size_t>(m - 1)] >= n;
                    EXPECT_EQ(rectangle_atypicality(lambda, {m, n}) == 0, typical)
                        << lambda.to_string() << " in (" << m << "|" << n << ")";
                }
            }
        }
    }
}

TEST(Partition, OspLabels)
{
    const OspLabels l = osp_labels(Partition({3, 2, 1}), {1, 2});
    EXPECT_EQ(l.natural, Weight::from_integers({3}, {2, 1}));
    EXPECT_EQ(l.natural_minus, Weight::from_integers({3}, {2, -1}));
    EXPECT_EQ(l.natural.to_string(), "3*d1 + 2*e1 + e2");
    const OspLabels z = osp_labels(Partition(), {1, 2});
    EXPECT_EQ(z.natural, Weight(HookContext{1, 2}));
    EXPECT_EQ(z.natural, z.natural_minus);
    EXPECT_THROW(osp_labels(Partition({3, 3}), {1, 2}), std::invalid_argument);
}

TEST(Partition, SpechtDimension)
{
    EXPECT_EQ(specht_dimension(Partition({5})), 1);
    EXPECT_EQ(specht_dimension(Partition({1, 1, 1, 1})), 1);
    EXPECT_EQ(specht_dimension(Partition({2, 1})), 2);
    for (int d = 0; d <= 7; ++d) {
        std::int64_t sum = 0, fact = 1;
        for (int k = 2; k <= d; ++k) {
            fact *= k;
        }
        for (const auto &lambda : partitions_of(d)) {
            const std::int64_t f = specht_dimension(lambda);
            EXPECT_EQ(f, count_standard(lambda.parts())) << lambda.to_string();
            sum += f * f;
        }
        EXPECT_EQ(sum, fact) << "d=" << d;
    }
}

TEST(Partition, RandomContainmentIsTransitive)
{
    std::mt19937 rng(7);
    const auto all = partitions_up_to(7);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        const Partition &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
        if (a.contains(b) && b.contains(c)) {
            EXPECT_TRUE(a.contains(c));
        }
        EXPECT_EQ(a.contains(b), a.conjugate().contains(b.conjugate()));
    }
}
