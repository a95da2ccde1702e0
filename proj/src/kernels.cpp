#include "chipfire/kernels.hpp"

#include <cassert>
#include <vector>

#include <omp.h>

namespace chipfire::kernels {

// Halves of entries <= 2^126 never overflow when added, so the hot loops work on raw values.

void fire_row_serial(std::span<const ChipCount> in, std::span<ChipCount> out) {
    assert(out.size() == in.size() + 1);
    u128 carry = 0;
    for (std::size_t k = 0; k < in.size(); ++k) {
        const u128 h = in[k].raw() >> 1;
        out[k] = ChipCount::from_raw(carry + h);
        carry = h;
    }
    out[in.size()] = ChipCount::from_raw(carry);
}

void fire_row_parallel(std::span<const ChipCount> in, std::span<ChipCount> out) {
    assert(out.size() == in.size() + 1);
    const auto len = static_cast<std::ptrdiff_t>(in.size());
    const ChipCount* src = in.data();
    ChipCount* dst = out.data();
#pragma omp parallel for schedule(static) if (in.size() >= kParallelMinWidth)
    for (std::ptrdiff_t k = 0; k <= len; ++k) {
        const u128 left = k > 0 ? src[k - 1].raw() >> 1 : 0;
        const u128 right = k < len ? src[k].raw() >> 1 : 0;
        dst[k] = ChipCount::from_raw(left + right);
    }
}

RowTotals totals_serial(std::span<const ChipCount> row) {
    RowTotals t;
    for (ChipCount v : row) {
        t.sum += v;
        t.firings += v.half();
        t.odd += v.is_odd() ? 1 : 0;
    }
    return t;
}

RowTotals totals_parallel(std::span<const ChipCount> row) {
    if (row.size() < kParallelMinWidth) return totals_serial(row);
    std::vector<RowTotals> partial(static_cast<std::size_t>(omp_get_max_threads()));
    const auto len = static_cast<std::ptrdiff_t>(row.size());
#pragma omp parallel
    {
        RowTotals local;
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t k = 0; k < len; ++k) {
            const ChipCount v = row[static_cast<std::size_t>(k)];
            local.sum += v;
            local.firings += v.half();
            local.odd += v.is_odd() ? 1 : 0;
        }
        partial[static_cast<std::size_t>(omp_get_thread_num())] = local;
    }
    RowTotals t;
    for (const auto& p : partial) {
        t.sum += p.sum;
        t.firings += p.firings;
        t.odd += p.odd;
    }
    return t;
}

void diff_serial(std::span<const ChipCount> in, std::span<ChipDelta> out) {
    assert(out.size() == in.size() + 1);
    ChipCount prev;
    for (std::size_t k = 0; k < in.size(); ++k) {
        out[k] = ChipDelta::difference(in[k], prev);
        prev = in[k];
    }
    out[in.size()] = ChipDelta::difference(ChipCount{}, prev);
}

void diff_parallel(std::span<const ChipCount> in, std::span<ChipDelta> out) {
    assert(out.size() == in.size() + 1);
    const auto len = static_cast<std::ptrdiff_t>(in.size());
#pragma omp parallel for schedule(static) if (in.size() >= kParallelMinWidth)
    for (std::ptrdiff_t k = 0; k <= len; ++k) {
        const ChipCount cur = k < len ? in[static_cast<std::size_t>(k)] : ChipCount{};
        const ChipCount prev = k > 0 ? in[static_cast<std::size_t>(k - 1)] : ChipCount{};
        out[static_cast<std::size_t>(k)] = ChipDelta::difference(cur, prev);
    }
}

}  // namespace chipfire::kernels
