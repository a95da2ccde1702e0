#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chipfire/chip_count.hpp"
#include "chipfire/kernels.hpp"

namespace chipfire {

/// Vertex (x, y) of the quadrant lattice. Edges go (x, y) -> (x + 1, y) and (x, y) -> (x, y + 1).
struct LatticePoint {
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    constexpr std::uint64_t row() const { return x + y; }
    /// y - x: negative on the left of the symmetry axis.
    constexpr std::int64_t distance() const {
        return static_cast<std::int64_t>(y) - static_cast<std::int64_t>(x);
    }

    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// One antidiagonal x + y = index of the intermediate firing configuration F.
///
/// Only the nonzero span is stored, ordered by increasing y: values[k] is F at
/// y = y_min + k, x = index - y. "Left" always means smaller y; every asymmetric
/// notion in the library (leftmost entry, left half, sign of differences) is
/// relative to this orientation. An empty `values` denotes an all-zero row.
struct Row {
    std::uint64_t index = 0;
    std::uint64_t y_min = 0;
    std::vector<ChipCount> values;

    bool empty() const { return values.empty(); }
    std::size_t size() const { return values.size(); }
    std::uint64_t y_max() const { return y_min + values.size() - 1; }

    /// F(index - y, y); zero outside the stored span.
    ChipCount at_y(std::uint64_t y) const;
    LatticePoint point(std::size_t k) const { return {index - (y_min + k), y_min + k}; }

    friend bool operator==(const Row&, const Row&) = default;
};

/// Structural validity: positive contiguous values inside the quadrant, palindromic.
bool is_valid_row(const Row& r);

/// Row 0 holding 2^n chips at the root. Throws OverflowError when n > kMaxExponent.
Row initial_row(unsigned n);

/// Row index + 1: every vertex of `r` fires until it holds fewer than two chips.
/// The result is trimmed to its nonzero span; an all-zero result is an empty row.
Row next_row(const Row& r, Kernel kernel = Kernel::serial);

/// Same as next_row but reuses `out`'s storage. `scratch` is a work buffer.
void next_row_into(const Row& r, Row& out, std::vector<ChipCount>& scratch,
                   Kernel kernel = Kernel::serial);

/// Streams the nonzero rows of F for 2^n chips, one row at a time.
///
/// Memory is two row buffers, so the footprint is bounded by the widest row.
/// The stream ends at the first all-zero row; `row_cap` (default: the proven
/// bound on the last row, plus one) only guards against runaway iteration.
class ConfigStream {
public:
    explicit ConfigStream(unsigned n, std::optional<std::uint64_t> row_cap = std::nullopt,
                          Kernel kernel = Kernel::serial);

    /// Next nonzero row, or nullptr once the stream is exhausted. The pointer stays
    /// valid until the following call. Throws CapExceededError if the cap is hit
    /// while rows remain.
    const Row* next();

    unsigned n() const { return n_; }
    std::uint64_t rows_emitted() const { return rows_emitted_; }
    std::uint64_t row_cap() const { return cap_; }
    /// Largest row width held so far.
    std::size_t peak_width() const { return peak_width_; }

private:
    unsigned n_;
    std::uint64_t cap_;
    Kernel kernel_;
    Row current_;
    Row pending_;
    std::vector<ChipCount> scratch_;
    std::uint64_t rows_emitted_ = 0;
    std::size_t peak_width_ = 0;
    bool done_ = false;
};

ConfigStream intermediate_configuration(unsigned n, std::optional<std::uint64_t> row_cap = std::nullopt,
                                        Kernel kernel = Kernel::serial);

/// All nonzero rows for 2^n chips. Only sensible for moderate n.
std::vector<Row> collect_rows(unsigned n, Kernel kernel = Kernel::serial);

/// Calls fn(const Row&) for every nonzero row. Returns the number of rows.
template <typename Fn>
std::uint64_t for_each_row(unsigned n, Fn&& fn, Kernel kernel = Kernel::serial) {
    ConfigStream stream(n, std::nullopt, kernel);
    while (const Row* r = stream.next()) fn(*r);
    return stream.rows_emitted();
}

/// F(x, y) by streaming to row x + y; zero past the last nonzero row.
ChipCount entry(unsigned n, std::uint64_t x, std::uint64_t y);

}  // namespace chipfire
