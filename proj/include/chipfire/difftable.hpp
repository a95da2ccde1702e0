#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chipfire/core.hpp"

namespace chipfire {

/// Row `index` of the difference table F'(x, y) = F(x - 1, y) - F(x, y - 1).
/// Same orientation as Row: values[k] is at y = y_min + k, so positive entries are on the left.
struct DiffRow {
    std::uint64_t index = 0;
    std::uint64_t y_min = 0;
    std::vector<ChipDelta> values;

    bool empty() const { return values.empty(); }
    std::size_t size() const { return values.size(); }
    /// Number of leading entries with y <= x.
    std::size_t left_half_size() const;

    friend bool operator==(const DiffRow&, const DiffRow&) = default;
};

/// Differences of row i from F's row i - 1 (`prev`). One entry longer than `prev`.
DiffRow diff_row(const Row& prev, Kernel kernel = Kernel::serial);

/// Streams DiffRows 1 .. (last nonzero row of F) + 1, one row behind a ConfigStream.
class DiffTableStream {
public:
    explicit DiffTableStream(unsigned n, Kernel kernel = Kernel::serial);

    /// Next diff row or nullptr when finished; valid until the following call.
    const DiffRow* next();
    /// The F row the current diff row was built from.
    const Row* source() const { return source_; }

private:
    ConfigStream rows_;
    Kernel kernel_;
    DiffRow current_;
    const Row* source_ = nullptr;
    bool done_ = false;
};

std::vector<DiffRow> diff_table(unsigned n);

ChipCount row_max_abs(const DiffRow& d);

/// Left half (y <= x) with one implicit leading zero weakly rises, then weakly falls.
bool unimodal_check(const DiffRow& d);

struct Plateau {
    std::size_t start = 0;
    std::size_t length = 0;
    ChipDelta value;

    friend bool operator==(const Plateau&, const Plateau&) = default;
};

/// Maximal runs (length >= 2) of equal consecutive values.
std::vector<Plateau> plateaus(const DiffRow& d);

enum class Sign : char { plus = '+', zero = '0', minus = '-' };

/// Signs of values[k + 1] - values[k], left to right. Zero only for exact equality.
std::vector<Sign> sign_row(const DiffRow& d);
std::vector<std::vector<Sign>> sign_map(unsigned n);

std::string to_string(const std::vector<Sign>& signs);

}  // namespace chipfire
