#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chipfire/core.hpp"

namespace chipfire {

/// Bit k is set iff the k-th entry of a row is odd, i.e. that vertex keeps one chip.
using BitPattern = std::vector<bool>;

BitPattern stable_row(const Row& r);

/// "0110"-style rendering, leftmost entry first.
std::string to_string(const BitPattern& bits);

struct StableRow {
    std::uint64_t index = 0;
    std::uint64_t y_min = 0;
    BitPattern bits;

    std::uint64_t chips() const;
    friend bool operator==(const StableRow&, const StableRow&) = default;
};

/// Final stable configuration, stored per nonzero row of F (rows before n have all-zero patterns).
struct StableConfig {
    unsigned n = 0;
    std::vector<StableRow> rows;

    std::uint64_t chip_count() const;
    bool has_chip(LatticePoint p) const;
};

StableConfig stable_configuration(unsigned n);

/// Chips of the stable configuration grouped by distance i = y - x, for i = -m..m.
struct DistanceDistribution {
    unsigned n = 0;
    std::int64_t half_width = 0;
    std::vector<ChipCount> counts;  ///< counts[i + half_width]

    ChipCount at(std::int64_t i) const;
    ChipCount total() const;
    friend bool operator==(const DistanceDistribution&, const DistanceDistribution&) = default;
};

DistanceDistribution distance_distribution(const StableConfig& s);

/// Streaming accumulator for the distance distribution; feed it rows of F in any order.
class DistanceAccumulator {
public:
    void add(const Row& r);
    DistanceDistribution finish(unsigned n) const;

private:
    std::vector<ChipCount> left_;   // left_[d - 1] counts distance -d
    std::vector<ChipCount> right_;  // right_[d] counts distance +d
};

/// Same distribution computed directly from the streamed rows of F.
DistanceDistribution distance_distribution(unsigned n);

/// Sum over i of i^2 * D(i), exactly.
ChipCount second_raw_moment(const DistanceDistribution& d);

/// Total firings T(n) as half the second raw moment of the stable distribution.
/// Throws ConsistencyError if the moment is odd.
ChipCount total_firings_via_moment(unsigned n);

/// Total firings T(n) as the sum of floor(F(v) / 2) over all vertices.
ChipCount total_firings_via_sum(unsigned n);

}  // namespace chipfire
