#include "chipfire/stable.hpp"

#include <algorithm>
#include <cstdlib>

namespace chipfire {

BitPattern stable_row(const Row& r) {
    BitPattern bits(r.values.size());
    for (std::size_t k = 0; k < r.values.size(); ++k) bits[k] = r.values[k].is_odd();
    return bits;
}

std::string to_string(const BitPattern& bits) {
    std::string s;
    s.reserve(bits.size());
    for (bool b : bits) s.push_back(b ? '1' : '0');
    return s;
}

std::uint64_t StableRow::chips() const {
    return static_cast<std::uint64_t>(std::count(bits.begin(), bits.end(), true));
}

std::uint64_t StableConfig::chip_count() const {
    std::uint64_t total = 0;
    for (const auto& r : rows) total += r.chips();
    return total;
}

bool StableConfig::has_chip(LatticePoint p) const {
    const auto row = p.row();
    // Rows are stored densely from index 0.
    if (row >= rows.size()) return false;
    const auto& r = rows[row];
    if (p.y < r.y_min || p.y >= r.y_min + r.bits.size()) return false;
    return r.bits[p.y - r.y_min];
}

StableConfig stable_configuration(unsigned n) {
    StableConfig s{n, {}};
    for_each_row(n, [&](const Row& r) { s.rows.push_back({r.index, r.y_min, stable_row(r)}); });
    return s;
}

ChipCount DistanceDistribution::at(std::int64_t i) const {
    if (i < -half_width || i > half_width) return {};
    return counts[static_cast<std::size_t>(i + half_width)];
}

ChipCount DistanceDistribution::total() const {
    ChipCount t;
    for (auto c : counts) t += c;
    return t;
}

namespace {

void bump(std::vector<ChipCount>& v, std::size_t at) {
    if (v.size() <= at) v.resize(at + 1);
    v[at] += 1;
}

DistanceDistribution assemble(unsigned n, const std::vector<ChipCount>& left,
                              const std::vector<ChipCount>& right) {
    std::size_t m = 0;
    for (std::size_t d = 0; d < left.size(); ++d)
        if (!left[d].is_zero()) m = std::max(m, d + 1);
    for (std::size_t d = 0; d < right.size(); ++d)
        if (!right[d].is_zero()) m = std::max(m, d);

    DistanceDistribution out{n, static_cast<std::int64_t>(m), std::vector<ChipCount>(2 * m + 1)};
    for (std::size_t d = 1; d <= m && d - 1 < left.size(); ++d) out.counts[m - d] = left[d - 1];
    for (std::size_t d = 0; d <= m && d < right.size(); ++d) out.counts[m + d] = right[d];
    return out;
}

void place(std::vector<ChipCount>& left, std::vector<ChipCount>& right, std::int64_t distance) {
    if (distance < 0) {
        bump(left, static_cast<std::size_t>(-distance) - 1);
    } else {
        bump(right, static_cast<std::size_t>(distance));
    }
}

}  // namespace

DistanceDistribution distance_distribution(const StableConfig& s) {
    std::vector<ChipCount> left, right;
    for (const auto& r : s.rows) {
        for (std::size_t k = 0; k < r.bits.size(); ++k) {
            if (!r.bits[k]) continue;
            const LatticePoint p{r.index - (r.y_min + k), r.y_min + k};
            place(left, right, p.distance());
        }
    }
    return assemble(s.n, left, right);
}

void DistanceAccumulator::add(const Row& r) {
    for (std::size_t k = 0; k < r.values.size(); ++k) {
        if (r.values[k].is_odd()) place(left_, right_, r.point(k).distance());
    }
}

DistanceDistribution DistanceAccumulator::finish(unsigned n) const { return assemble(n, left_, right_); }

DistanceDistribution distance_distribution(unsigned n) {
    DistanceAccumulator acc;
    for_each_row(n, [&](const Row& r) { acc.add(r); });
    return acc.finish(n);
}

ChipCount second_raw_moment(const DistanceDistribution& d) {
    ChipCount moment;
    for (std::int64_t i = -d.half_width; i <= d.half_width; ++i) {
        const auto sq = static_cast<std::uint64_t>(std::llabs(i));
        moment += ChipCount(sq) * ChipCount(sq) * d.at(i);
    }
    return moment;
}

ChipCount total_firings_via_moment(unsigned n) {
    const ChipCount moment = second_raw_moment(distance_distribution(n));
    if (moment.is_odd()) {
        throw ConsistencyError("second raw moment " + moment.to_string() + " is odd for n=" + std::to_string(n));
    }
    return moment.half();
}

ChipCount total_firings_via_sum(unsigned n) {
    ChipCount total;
    for_each_row(n, [&](const Row& r) { total += kernels::totals_serial(r.values).firings; });
    return total;
}

}  // namespace chipfire
