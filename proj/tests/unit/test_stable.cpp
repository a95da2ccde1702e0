#include <gtest/gtest.h>

#include "chipfire/stable.hpp"
#include "reference.hpp"

using namespace chipfire;

TEST(Stable, BitPatternOfARow) {
    const Row r{5, 1, {2, 5, 5, 2}};
    EXPECT_EQ(to_string(stable_row(r)), "0110");
    EXPECT_EQ(to_string(stable_row(Row{4, 0, {1, 4, 6, 4, 1}})), "10001");
}

TEST(Stable, ChipCountIsConserved) {
    for (unsigned n = 0; n <= 12; ++n) {
        const StableConfig s = stable_configuration(n);
        EXPECT_EQ(s.chip_count(), std::uint64_t{1} << n) << "n=" << n;
    }
}

TEST(Stable, HasChip) {
    const StableConfig s = stable_configuration(4);
    EXPECT_TRUE(s.has_chip({4, 0}));   // row 4, F = 1
    EXPECT_FALSE(s.has_chip({2, 2}));  // row 4, F = 6
    EXPECT_TRUE(s.has_chip({3, 2}));   // row 5, F = 5
    EXPECT_FALSE(s.has_chip({0, 0}));
    EXPECT_FALSE(s.has_chip({100, 100}));
}

TEST(Stable, DistanceDistributionForSixteenChips) {
    const DistanceDistribution d = distance_distribution(4);
    EXPECT_EQ(d.half_width, 4);
    EXPECT_EQ(d.counts, (std::vector<ChipCount>{2, 1, 2, 3, 0, 3, 2, 1, 2}));
    EXPECT_EQ(d.total(), ChipCount(16));
    EXPECT_EQ(second_raw_moment(d), ChipCount(104));
    EXPECT_EQ(d.at(5), ChipCount(0));
}

TEST(Stable, DistanceDistributionMatchesReference) {
    for (unsigned n = 0; n <= 12; ++n) {
        std::int64_t m = 0;
        const auto expected = ref::distance(n, m);
        const DistanceDistribution d = distance_distribution(n);
        ASSERT_EQ(d.half_width, m) << "n=" << n;
        ASSERT_EQ(d.counts.size(), expected.size());
        for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(d.counts[k], ChipCount(expected[k])) << "n=" << n;
        EXPECT_EQ(distance_distribution(stable_configuration(n)), d) << "n=" << n;
    }
}

TEST(Stable, DistanceDistributionForThirtyTwoThousandChips) {
    // D_15 from i = -45 in to the centre; the right half mirrors it.
    const std::uint64_t left[] = {545, 517, 489, 461, 433, 406, 380, 355, 332, 310, 290, 271, 254, 253, 272, 282,
                                  292, 300, 289, 309, 312, 299, 353, 358, 389, 411, 425, 439, 474, 495, 514, 437,
                                  433, 427, 458, 426, 423, 407, 380, 360, 321, 277, 232, 186, 108, 0};
    const DistanceDistribution d = distance_distribution(15);
    ASSERT_EQ(d.half_width, 45);
    ASSERT_EQ(d.counts.size(), 91u);
    for (std::int64_t k = 0; k <= 45; ++k) {
        EXPECT_EQ(d.at(k - 45), ChipCount(left[k])) << "i=" << k - 45;
        EXPECT_EQ(d.at(45 - k), ChipCount(left[k])) << "i=" << 45 - k;
    }
    EXPECT_EQ(d.total(), ChipCount(1u << 15));
}

TEST(Stable, TotalFiringsBothRoutes) {
    const std::uint64_t known[] = {0, 1, 5, 15, 52, 163, 458, 1359, 4296, 12890, 38570};
    for (unsigned n = 0; n <= 10; ++n) {
        EXPECT_EQ(total_firings_via_sum(n), ChipCount(known[n])) << "n=" << n;
        EXPECT_EQ(total_firings_via_moment(n), ChipCount(known[n])) << "n=" << n;
    }
    for (unsigned n = 11; n <= 13; ++n) {
        EXPECT_EQ(total_firings_via_sum(n), ChipCount(ref::total_firings(n)));
        EXPECT_EQ(total_firings_via_moment(n), total_firings_via_sum(n));
    }
}

TEST(Stable, AccumulatorIsOrderIndependent) {
    const auto rows = collect_rows(9);
    DistanceAccumulator forward, backward;
    for (const auto& r : rows) forward.add(r);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) backward.add(*it);
    EXPECT_EQ(forward.finish(9), backward.finish(9));
}
