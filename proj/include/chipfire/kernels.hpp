#pragma once

#include <cstddef>
#include <span>

#include "chipfire/chip_count.hpp"

namespace chipfire {

/// Which implementation of the row kernels to run. Both produce identical results;
/// the serial one is the reference the parallel one is tested against.
enum class Kernel { serial, parallel };

namespace kernels {

/// Rows narrower than this run serially even under Kernel::parallel.
inline constexpr std::size_t kParallelMinWidth = 4096;

/// Fires every vertex of a row to exhaustion and collects what lands on the next row.
/// out.size() must be in.size() + 1; out[k] = in[k-1]/2 + in[k]/2 (floored, zero outside `in`).
void fire_row_serial(std::span<const ChipCount> in, std::span<ChipCount> out);
void fire_row_parallel(std::span<const ChipCount> in, std::span<ChipCount> out);

struct RowTotals {
    ChipCount sum;       ///< chips arriving on the row
    ChipCount firings;   ///< sum of floor(v / 2): how often the row fires
    std::uint64_t odd = 0;  ///< entries left holding one chip

    friend bool operator==(const RowTotals&, const RowTotals&) = default;
};

RowTotals totals_serial(std::span<const ChipCount> row);
RowTotals totals_parallel(std::span<const ChipCount> row);

/// First differences with zero padding: out[k] = in[k] - in[k-1], out.size() == in.size() + 1.
void diff_serial(std::span<const ChipCount> in, std::span<ChipDelta> out);
void diff_parallel(std::span<const ChipCount> in, std::span<ChipDelta> out);

inline void fire_row(Kernel k, std::span<const ChipCount> in, std::span<ChipCount> out) {
    k == Kernel::parallel ? fire_row_parallel(in, out) : fire_row_serial(in, out);
}

inline RowTotals totals(Kernel k, std::span<const ChipCount> row) {
    return k == Kernel::parallel ? totals_parallel(row) : totals_serial(row);
}

inline void diff(Kernel k, std::span<const ChipCount> in, std::span<ChipDelta> out) {
    k == Kernel::parallel ? diff_parallel(in, out) : diff_serial(in, out);
}

}  // namespace kernels
}  // namespace chipfire
