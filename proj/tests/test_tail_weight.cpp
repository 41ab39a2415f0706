#include <superdual/tail_weight.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace superdual;
using namespace superdual::tail;

namespace {

const std::vector<std::vector<int>> heads{{}, {2}, {3, -1}};

} // namespace

TEST(TailWeight, StorageIsNormalized)
{
    const TailWeight a({1}, TailKind::Y, 2, {5, 3, 2, 2});
    EXPECT_EQ(a.tail_prefix(), (std::vector<int>{5, 3}));
    EXPECT_EQ(a.coefficient(2), 5);
    EXPECT_EQ(a.coefficient(6), 2);
    EXPECT_EQ(a.coefficient(200), 2);
    EXPECT_EQ(a.tail_partition(), Partition({3, 1}));
    EXPECT_THROW(a.coefficient(3), std::out_of_range);
    EXPECT_EQ(a, TailWeight::make_y({1}, Partition({3, 1}), 2));

    const TailWeight b = TailWeight::make_ybar({}, Partition({2, 2}), 1);
    EXPECT_EQ(b.coefficient(1), 1);
    EXPECT_EQ(b.coefficient(3), 1);
    EXPECT_EQ(b.coefficient(5), -1);
    EXPECT_THROW(b.coefficient(2), std::out_of_range);
}

TEST(TailWeight, InvalidTailsRejected)
{
    EXPECT_THROW(TailWeight({}, TailKind::Y, 0, {1, 2}), std::invalid_argument);
    EXPECT_THROW(TailWeight({}, TailKind::Y, 1, {0}), std::invalid_argument);
    EXPECT_THROW(TailWeight({}, TailKind::Ybar, 0, {-1}), std::invalid_argument);
    EXPECT_THROW(kind_from_name("Z"), std::invalid_argument);
    EXPECT_THROW(natural_map(TailWeight::make_ybar({}, Partition({1}), 0)), std::invalid_argument);
    EXPECT_THROW(theta_map(TailWeight::make_ybar({}, Partition({1}), 0)), std::invalid_argument);
    EXPECT_THROW(truncate_weight(TailWeight::make_y({}, Partition({1}), 0), 1), std::invalid_argument);
}

TEST(TailWeight, NaturalMapExamples)
{
    const auto self = natural_map(TailWeight::make_y({4, 1}, Partition({2, 1}), 0));
    EXPECT_EQ(self.kind(), TailKind::Ybar);
    EXPECT_EQ(self.head(), (std::vector<int>{4, 1}));
    EXPECT_EQ(self.tail_partition(), Partition({2, 1}));
    const auto col = natural_map(TailWeight::make_y({}, Partition({3}), 1));
    EXPECT_EQ(col.tail_partition(), Partition({1, 1, 1}));
    EXPECT_EQ(col.level(), 1);
}

TEST(TailWeight, NaturalMapRoundTrip)
{
    for (const auto &h : heads) {
        for (int d = -2; d <= 2; ++d) {
            for (const auto &plus : partitions_up_to(10)) {
                const auto y = TailWeight::make_y(h, plus, d);
                const auto bar = natural_map(y);
                EXPECT_EQ(natural_map_inverse(bar), y);
                EXPECT_EQ(bar.tail_partition().size(), plus.size());
                EXPECT_EQ(natural_map(natural_map_inverse(bar)), bar);
            }
        }
    }
}

TEST(TailWeight, ThetaExamples)
{
    // (lambda+)' = (7,5,4,3,1) has modified coordinates (7,4,2 | 4,2,1).
    const Partition plus = Partition({7, 5, 4, 3, 1}).conjugate();
    for (int d : {0, 2}) {
        const auto t = theta_map(TailWeight::make_y({}, plus, d));
        EXPECT_EQ(t.kind(), TailKind::Ytilde);
        const std::vector<int> expected{7 - d, 4 + d, 4 - d, 2 + d, 2 - d, 1 + d};
        for (int k = 1; k <= 6; ++k) {
            EXPECT_EQ(t.coefficient(k), expected[static_cast<std::size_t>(k - 1)]) << k;
        }
        EXPECT_EQ(t.coefficient(7), -d);
        EXPECT_EQ(t.coefficient(8), d);
        const auto fc = t.tail_frobenius();
        EXPECT_EQ(fc.p, (std::vector<int>{7, 4, 2}));
        EXPECT_EQ(fc.q, (std::vector<int>{4, 2, 1}));
    }
    const auto empty = theta_map(TailWeight::make_y({}, Partition(), 0));
    EXPECT_TRUE(empty.tail_prefix().empty());
    for (int k = 1; k <= 10; ++k) {
        EXPECT_EQ(empty.coefficient(k), 0);
    }
}

TEST(TailWeight, ThetaInjectiveAndInvertible)
{
    for (const auto &h : heads) {
        for (int d = -2; d <= 2; ++d) {
            std::set<std::vector<int>> images;
            for (const auto &plus : partitions_up_to(8)) {
                const auto y = TailWeight::make_y(h, plus, d);
                const auto t = theta_map(y);
                EXPECT_EQ(theta_inverse(t), y);
                EXPECT_TRUE(images.insert(t.tail_prefix()).second) << plus.to_string();
                const auto fc = t.tail_frobenius();
                int total = 0;
                for (std::size_t i = 0; i < fc.p.size(); ++i) {
                    total += (t.coefficient(static_cast<int>(2 * i + 1)) + d) +
                             (t.coefficient(static_cast<int>(2 * i + 2)) - d);
                }
                EXPECT_EQ(total, plus.size());
            }
        }
    }
}

TEST(TailWeight, CompatibilityTriangle)
{
    for (const auto &h : heads) {
        for (int d = -2; d <= 2; ++d) {
            for (const auto &plus : partitions_up_to(8)) {
                const auto y = TailWeight::make_y(h, plus, d);
                const auto bar = natural_map(y);
                const auto t = theta_map(y);
                EXPECT_EQ(bar.head(), t.head());
                EXPECT_EQ(bar.tail_partition(), from_frobenius(t.tail_frobenius()));
            }
        }
    }
}

TEST(TailWeight, TruncationExamples)
{
    const auto empty = TailWeight::make_ybar({3}, Partition(), 2);
    for (int n = 1; n <= 4; ++n) {
        const auto r = truncate_weight(empty, n);
        ASSERT_TRUE(std::holds_alternative<Weight>(r));
        EXPECT_EQ(std::get<Weight>(r), Weight::from_integers({3}, std::vector<int>(static_cast<std::size_t>(n), -2)));
    }
    const auto one = TailWeight::make_ybar({5}, Partition({1}), 0);
    const auto r1 = truncate_weight(one, 1);
    ASSERT_TRUE(std::holds_alternative<Weight>(r1));
    EXPECT_EQ(std::get<Weight>(r1), Weight::from_integers({5}, {1}));
    EXPECT_TRUE(std::holds_alternative<ZeroModule>(truncate_weight(one, 0)));
}

TEST(TailWeight, TruncationCaseSplitAndMonotonicity)
{
    for (int d = -2; d <= 2; ++d) {
        for (const auto &plus : partitions_up_to(8)) {
            const auto bar = TailWeight::make_ybar({1, 0}, plus, d);
            for (int n = 1; n <= 9; ++n) {
                const auto r = truncate_weight(bar, n);
                const bool nonzero = static_cast<int>(plus.length()) <= n;
                EXPECT_EQ(std::holds_alternative<Weight>(r), nonzero) << plus.to_string() << " n=" << n;
                if (!nonzero) {
                    continue;
                }
                const auto &w = std::get<Weight>(r);
                EXPECT_EQ(w.epsilon().size(), static_cast<std::size_t>(n));
                for (int j = 1; j <= n; ++j) {
                    EXPECT_EQ(w.epsilon()[static_cast<std::size_t>(j - 1)], Rational(bar.coefficient(2 * j - 1)));
                }
                const auto next = truncate_weight(bar, n + 1);
                ASSERT_TRUE(std::holds_alternative<Weight>(next));
                const auto &wn = std::get<Weight>(next);
                EXPECT_TRUE(std::equal(w.epsilon().begin(), w.epsilon().end(), wn.epsilon().begin()));
                EXPECT_EQ(wn.delta(), w.delta());
            }
        }
    }
}

TEST(TailWeight, JsonRoundTrip)
{
    const auto y = TailWeight::make_y({2, -1}, Partition({3, 1}), 1);
    for (const auto &w : {y, natural_map(y), theta_map(y)}) {
        const auto j = to_json(w);
        EXPECT_EQ(tail_weight_from_json(j), w);
        EXPECT_EQ(j.at("tail_constant"), 1);
        EXPECT_EQ(j.at("kind"), kind_name(w.kind()));
    }
    EXPECT_EQ(to_json(y).at("index_base"), "1");
    EXPECT_EQ(to_json(natural_map(y)).at("index_base"), "1/2");
}
