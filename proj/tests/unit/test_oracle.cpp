#include <gtest/gtest.h>

#include "chipfire/core.hpp"
#include "chipfire/error.hpp"
#include "chipfire/oracle.hpp"

using namespace chipfire;
using namespace chipfire::oracle;

TEST(Oracle, MoveTotalsEqualTotalFirings) {
    EXPECT_EQ(simulate(2, Strategy::row_by_row()).moves, 5u);
    EXPECT_EQ(simulate(5, Strategy::random(3)).moves, 163u);
    EXPECT_EQ(simulate(8, Strategy::leftmost_first()).moves, 4296u);
}

TEST(Oracle, EveryFiringConservesChips) {
    Simulator sim(6, Strategy::random(11));
    const ChipCount total = ChipCount::pow2(6);
    std::uint64_t steps = 0;
    while (sim.step()) {
        ASSERT_EQ(sim.state().total_chips(), total);
        ++steps;
    }
    EXPECT_TRUE(sim.stable());
    EXPECT_EQ(steps, sim.state().moves);
    EXPECT_FALSE(sim.step());
}

TEST(Oracle, ArrivalsReproduceTheIntermediateConfiguration) {
    for (unsigned n = 0; n <= 7; ++n) {
        const OracleState s = simulate(n, Strategy::fifo_queue());
        const auto arrived = arrivals(s);
        for_each_row(n, [&](const Row& r) {
            for (std::size_t k = 0; k < r.size(); ++k) {
                const LatticePoint p = r.point(k);
                ASSERT_EQ(arrived.at(p.x, p.y), r.values[k]) << "n=" << n;
                ASSERT_EQ(ChipCount(s.firings.at(p.x, p.y)), r.values[k].half());
                ASSERT_EQ(s.chips.at(p.x, p.y), ChipCount(r.values[k].is_odd() ? 1 : 0));
            }
        });
    }
}

TEST(Oracle, ConfluenceAcrossStrategies) {
    for (unsigned n = 1; n <= 6; ++n) {
        const ConfluenceReport rep = confluence_check(n, 4, 99);
        EXPECT_TRUE(rep.pass) << rep.detail;
        EXPECT_EQ(rep.runs, 4u + 3u);
    }
    EXPECT_THROW(confluence_check(3, 1, 0), std::invalid_argument);
}

TEST(Oracle, Guards) {
    EXPECT_THROW(Simulator(11, Strategy::row_by_row()), std::invalid_argument);
    EXPECT_THROW(simulate(4, Strategy::row_by_row(), 10), CapExceededError);
    EXPECT_EQ(simulate(4, Strategy::row_by_row(), 52).moves, 52u);
}

TEST(Oracle, GridReadsOutsideAreZero) {
    Grid<std::uint64_t> g(2, 2);
    g.ref(1, 1) = 5;
    g.ensure(4, 0);
    EXPECT_EQ(g.at(1, 1), 5u);
    EXPECT_EQ(g.at(100, 100), 0u);
    Grid<std::uint64_t> h;
    h.ensure(1, 1);
    h.ref(1, 1) = 5;
    EXPECT_TRUE(same_cells(g, h));
}

TEST(Oracle, StrategyNames) {
    EXPECT_EQ(Strategy::leftmost_first().name(), "leftmost-first");
    EXPECT_NE(Strategy::random(1).name(), Strategy::random(2).name());
}
