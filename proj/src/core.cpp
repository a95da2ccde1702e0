#include "chipfire/core.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "chipfire/structure.hpp"

namespace chipfire {

ChipCount Row::at_y(std::uint64_t y) const {
    if (values.empty() || y < y_min || y > y_max()) return {};
    return values[y - y_min];
}

bool is_valid_row(const Row& r) {
    if (r.empty()) return true;
    if (r.y_min + r.values.size() - 1 > r.index) return false;
    const auto n = r.values.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (r.values[k].is_zero()) return false;
        if (r.values[k] != r.values[n - 1 - k]) return false;
    }
    // Palindromic about the axis y = x means the span is centred on index / 2.
    return r.y_min + r.y_max() == r.index;
}

Row initial_row(unsigned n) { return Row{0, 0, {ChipCount::pow2(n)}}; }

void next_row_into(const Row& r, Row& out, std::vector<ChipCount>& scratch, Kernel kernel) {
    out.index = r.index + 1;
    out.values.clear();
    if (r.empty()) {
        out.y_min = 0;
        return;
    }
    scratch.resize(r.values.size() + 1);
    kernels::fire_row(kernel, r.values, scratch);

    // Parent (x - 1, y) sits at the same y, parent (x, y - 1) one position left,
    // so scratch[k] lives at y = r.y_min + k.
    std::size_t lo = 0;
    std::size_t hi = scratch.size();
    while (lo < hi && scratch[lo].is_zero()) ++lo;
    while (hi > lo && scratch[hi - 1].is_zero()) --hi;
    if (lo == hi) {
        out.y_min = 0;
        return;
    }
    out.y_min = r.y_min + lo;
    out.values.assign(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
                      scratch.begin() + static_cast<std::ptrdiff_t>(hi));
}

Row next_row(const Row& r, Kernel kernel) {
    Row out;
    std::vector<ChipCount> scratch;
    next_row_into(r, out, scratch, kernel);
    return out;
}

namespace {

std::uint64_t default_cap(unsigned n) {
    const ChipCount bound = row_bound(n);
    if (!bound.fits_u64() || bound.to_u64() == std::numeric_limits<std::uint64_t>::max()) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return bound.to_u64() + 1;
}

}  // namespace

ConfigStream::ConfigStream(unsigned n, std::optional<std::uint64_t> row_cap, Kernel kernel)
    : n_(n), cap_(row_cap.value_or(0)), kernel_(kernel), current_(initial_row(n)) {
    if (row_cap && *row_cap == 0) throw std::invalid_argument("row cap must be at least 1");
    if (!row_cap) cap_ = default_cap(n);
}

const Row* ConfigStream::next() {
    if (done_) return nullptr;
    if (rows_emitted_ > 0) {
        next_row_into(current_, pending_, scratch_, kernel_);
        std::swap(current_, pending_);
        if (current_.empty()) {
            done_ = true;
            return nullptr;
        }
    }
    if (rows_emitted_ == cap_) {
        done_ = true;
        throw CapExceededError("row cap " + std::to_string(cap_) + " reached for n=" + std::to_string(n_) +
                               " before the configuration terminated");
    }
    ++rows_emitted_;
    peak_width_ = std::max(peak_width_, current_.values.size());
    return &current_;
}

ConfigStream intermediate_configuration(unsigned n, std::optional<std::uint64_t> row_cap, Kernel kernel) {
    return ConfigStream(n, row_cap, kernel);
}

std::vector<Row> collect_rows(unsigned n, Kernel kernel) {
    std::vector<Row> rows;
    for_each_row(n, [&](const Row& r) { rows.push_back(r); }, kernel);
    return rows;
}

ChipCount entry(unsigned n, std::uint64_t x, std::uint64_t y) {
    const std::uint64_t target = x + y;
    ConfigStream stream(n);
    while (const Row* r = stream.next()) {
        if (r->index == target) return r->at_y(y);
    }
    return {};
}

}  // namespace chipfire
