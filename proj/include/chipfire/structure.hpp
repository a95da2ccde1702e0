#pragma once

#include <cstdint>
#include <vector>

#include "chipfire/core.hpp"

namespace chipfire {

/// C(n, k) with checked arithmetic (additive Pascal recurrence, no intermediate blowup).
ChipCount binomial(unsigned n, unsigned k);

/// Row i <= n of F: Pascal's row i scaled by 2^(n - i). Throws IndexError if i > n.
Row pascal_row(unsigned n, unsigned i);

/// Upper bound on the index of the last nonzero row:
/// n + C(n, n/2) for even n, n + 1 + 2*floor(C(n, floor(n/2)) / 2) for odd n.
ChipCount row_bound(unsigned n);

/// Number of nonzero entries in each nonzero row of F.
struct RowProfile {
    unsigned n = 0;
    std::vector<std::uint32_t> lengths;

    std::uint64_t nonzero_rows() const { return lengths.size(); }
};

RowProfile row_profile(unsigned n);

struct LongestRow {
    std::size_t length = 0;
    std::uint64_t first_index = 0;  ///< smallest row index attaining `length`
    Row row;
};

LongestRow longest_row(unsigned n);

/// The minimal row R(j): j + 1 entries 1, 3, 5, ... rising to j and mirrored.
struct MinimalRow {
    unsigned j = 0;
    std::vector<ChipCount> values;
};

MinimalRow minimal_row(unsigned j);

/// floor((j + 1)^2 / 2), the chip total of R(j).
ChipCount minimal_row_sum(unsigned j);

bool is_minimal(const Row& r);

/// Half-open range [begin, end) of row indices.
struct RowRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;

    std::uint64_t size() const { return end - begin; }
    bool empty() const { return begin == end; }
    friend bool operator==(const RowRange&, const RowRange&) = default;
};

/// Partition of the nonzero rows into four consecutive blocks.
///
/// bottom_triangle: the longest terminal block whose lengths drop by exactly one per row.
/// rectangle: the longest block directly above it with lengths in {W - 1, W}, W the
///   longest row length. This is a heuristic reading of the observed shape.
/// top_triangle: rows 0..n (the Pascal rows), which take precedence over the other
///   blocks for tiny n where they would overlap.
/// midsection: whatever is left between the top triangle and the rectangle.
struct Segmentation {
    unsigned n = 0;
    RowRange top_triangle;
    RowRange midsection;
    RowRange rectangle;
    RowRange bottom_triangle;
    std::size_t longest_length = 0;
    std::uint64_t first_longest_row = 0;
    std::uint64_t total_rows = 0;
    /// Height of the terminal decreasing block before clipping against the top triangle.
    std::uint64_t raw_bottom_height = 0;
};

/// Builds a Segmentation from row lengths fed one at a time, in O(1) memory.
class SegmentationBuilder {
public:
    explicit SegmentationBuilder(unsigned n) : n_(n) {}

    void push(std::size_t length);
    /// Throws SegmentationError if no rows were pushed or the blocks fail to partition the rows.
    Segmentation finish() const;

private:
    // Length of the longest suffix whose values all lie in {low, low + 1}.
    struct PairRun {
        std::size_t low = 0;
        std::uint64_t len = 0;
    };

    unsigned n_;
    std::uint64_t rows_ = 0;
    std::size_t prev_ = 0;
    std::size_t max_len_ = 0;
    std::uint64_t max_first_ = 0;
    std::uint64_t tri_start_ = 0;
    PairRun runs_[2];
    PairRun above_[2];  // runs_ as of the row just before tri_start_
};

Segmentation segment(unsigned n);

struct ConjectureReport {
    unsigned n = 0;
    bool holds = false;
    std::uint64_t triangle_rows = 0;
    std::size_t longest_length = 0;
};

/// Compares the bottom triangle height with the longest row length minus one.
/// Informational: callers must not treat a false `holds` as a library failure.
ConjectureReport check_bottom_conjecture(unsigned n);

}  // namespace chipfire
