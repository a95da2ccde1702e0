#include "chipfire/structure.hpp"

#include <algorithm>
#include <string>

namespace chipfire {

namespace {

std::vector<ChipCount> pascal_coefficients(unsigned i) {
    std::vector<ChipCount> c(i + 1);
    c[0] = 1;
    for (unsigned r = 1; r <= i; ++r) {
        for (unsigned k = r; k > 0; --k) c[k] += c[k - 1];
    }
    return c;
}

}  // namespace

ChipCount binomial(unsigned n, unsigned k) {
    if (k > n) return {};
    return pascal_coefficients(n)[k];
}

Row pascal_row(unsigned n, unsigned i) {
    if (i > n) {
        throw IndexError("Pascal row " + std::to_string(i) + " requested for n=" + std::to_string(n) +
                         "; only rows 0..n are scaled Pascal rows");
    }
    Row r{i, 0, pascal_coefficients(i)};
    const ChipCount scale = ChipCount::pow2(n - i);
    for (auto& v : r.values) v *= scale;
    return r;
}

ChipCount row_bound(unsigned n) {
    if (n % 2 == 0) return ChipCount(n) + binomial(n, n / 2);
    return ChipCount(n) + 1 + binomial(n, n / 2).half() * 2;
}

RowProfile row_profile(unsigned n) {
    RowProfile p{n, {}};
    for_each_row(n, [&](const Row& r) { p.lengths.push_back(static_cast<std::uint32_t>(r.size())); });
    return p;
}

LongestRow longest_row(unsigned n) {
    LongestRow best;
    for_each_row(n, [&](const Row& r) {
        if (r.size() > best.length) {
            best.length = r.size();
            best.first_index = r.index;
            best.row = r;
        }
    });
    return best;
}

MinimalRow minimal_row(unsigned j) {
    MinimalRow m{j, std::vector<ChipCount>(j + 1)};
    // Odd entries climbing from both ends; the centre is j (twice when j is odd).
    for (unsigned k = 0; k <= j; ++k) {
        const unsigned from_edge = std::min(k, j - k);
        m.values[k] = std::min<std::uint64_t>(2ull * from_edge + 1, j);
    }
    return m;
}

ChipCount minimal_row_sum(unsigned j) {
    const ChipCount s = ChipCount(j) + 1;
    return (s * s).half();
}

bool is_minimal(const Row& r) {
    if (r.values.size() < 2) return false;
    return r.values == minimal_row(static_cast<unsigned>(r.values.size() - 1)).values;
}

void SegmentationBuilder::push(std::size_t length) {
    const std::uint64_t k = rows_++;
    if (length > max_len_) {
        max_len_ = length;
        max_first_ = k;
    }

    if (k == 0 || length + 1 != prev_) {
        tri_start_ = k;
        above_[0] = runs_[0];
        above_[1] = runs_[1];
    }

    PairRun next[2] = {{length > 0 ? length - 1 : 0, 1}, {length, 1}};
    for (auto& run : next) {
        for (const auto& old : runs_) {
            if (old.len > 0 && old.low == run.low) run.len = old.len + 1;
        }
    }
    if (length == 0) next[0].len = 0;
    runs_[0] = next[0];
    runs_[1] = next[1];
    prev_ = length;
}

Segmentation SegmentationBuilder::finish() const {
    if (rows_ == 0) throw SegmentationError("no rows to segment");
    Segmentation s;
    s.n = n_;
    s.total_rows = rows_;
    s.longest_length = max_len_;
    s.first_longest_row = max_first_;
    s.raw_bottom_height = rows_ - tri_start_;

    const std::uint64_t top_end = std::min<std::uint64_t>(std::uint64_t{n_} + 1, rows_);
    s.top_triangle = {0, top_end};

    const std::uint64_t bottom_begin = std::max(tri_start_, top_end);
    s.bottom_triangle = {bottom_begin, rows_};

    std::uint64_t rect_len = 0;
    if (bottom_begin == tri_start_ && max_len_ > 0) {
        for (const auto& run : above_) {
            if (run.low + 1 == max_len_) rect_len = run.len;
        }
    }
    const std::uint64_t rect_begin = std::max(bottom_begin - std::min(rect_len, bottom_begin), top_end);
    s.rectangle = {rect_begin, bottom_begin};
    s.midsection = {top_end, rect_begin};

    const RowRange* order[] = {&s.top_triangle, &s.midsection, &s.rectangle, &s.bottom_triangle};
    std::uint64_t cursor = 0;
    for (const RowRange* r : order) {
        if (r->begin != cursor || r->end < r->begin) {
            throw SegmentationError("segmentation blocks overlap for n=" + std::to_string(n_));
        }
        cursor = r->end;
    }
    if (cursor != rows_) throw SegmentationError("segmentation does not cover all rows");
    return s;
}

Segmentation segment(unsigned n) {
    SegmentationBuilder b(n);
    for_each_row(n, [&](const Row& r) { b.push(r.size()); });
    return b.finish();
}

ConjectureReport check_bottom_conjecture(unsigned n) {
    const Segmentation s = segment(n);
    return {n, s.raw_bottom_height + 1 == s.longest_length, s.raw_bottom_height, s.longest_length};
}

}  // namespace chipfire
