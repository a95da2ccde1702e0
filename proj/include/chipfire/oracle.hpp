#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chipfire/core.hpp"

namespace chipfire::oracle {

/// Largest n the brute-force simulator accepts by default.
inline constexpr unsigned kDefaultMaxN = 10;

/// Dense grid over [0, width) x [0, height); reads outside are zero.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(std::size_t width, std::size_t height) : width_(width), height_(height), cells_(width * height) {}

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }

    T at(std::uint64_t x, std::uint64_t y) const {
        if (x >= width_ || y >= height_) return T{};
        return cells_[y * width_ + x];
    }
    T& ref(std::uint64_t x, std::uint64_t y) { return cells_[y * width_ + x]; }

    /// Grows (doubling) until (x, y) is inside.
    void ensure(std::uint64_t x, std::uint64_t y) {
        if (x < width_ && y < height_) return;
        std::size_t w = std::max<std::size_t>(width_, 1);
        std::size_t h = std::max<std::size_t>(height_, 1);
        while (w <= x) w *= 2;
        while (h <= y) h *= 2;
        std::vector<T> grown(w * h);
        for (std::size_t yy = 0; yy < height_; ++yy)
            for (std::size_t xx = 0; xx < width_; ++xx) grown[yy * w + xx] = cells_[yy * width_ + xx];
        cells_ = std::move(grown);
        width_ = w;
        height_ = h;
    }

    /// Cell-by-cell equality treating everything outside either grid as zero.
    friend bool same_cells(const Grid& a, const Grid& b) {
        const std::size_t w = std::max(a.width_, b.width_);
        const std::size_t h = std::max(a.height_, b.height_);
        for (std::size_t y = 0; y < h; ++y)
            for (std::size_t x = 0; x < w; ++x)
                if (!(a.at(x, y) == b.at(x, y))) return false;
        return true;
    }

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<T> cells_;
};

enum class StrategyKind { random, leftmost_first, fifo_queue, row_by_row };

/// How the simulator picks the next vertex to fire.
///  random:         uniform over currently fireable vertices, seeded.
///  leftmost_first: smallest y - x, ties by smaller row.
///  fifo_queue:     vertices fire in the order they became fireable.
///  row_by_row:     lowest row first, left to right, each vertex to exhaustion.
struct Strategy {
    StrategyKind kind = StrategyKind::row_by_row;
    std::uint64_t seed = 0;

    static Strategy random(std::uint64_t seed) { return {StrategyKind::random, seed}; }
    static Strategy leftmost_first() { return {StrategyKind::leftmost_first, 0}; }
    static Strategy fifo_queue() { return {StrategyKind::fifo_queue, 0}; }
    static Strategy row_by_row() { return {StrategyKind::row_by_row, 0}; }

    std::string name() const;
};

struct OracleState {
    unsigned n = 0;
    Grid<ChipCount> chips;
    Grid<std::uint64_t> firings;
    std::uint64_t moves = 0;

    ChipCount total_chips() const;
};

/// Plays the chip-firing game one firing at a time.
class Simulator {
public:
    Simulator(unsigned n, Strategy strategy, unsigned max_n = kDefaultMaxN);
    ~Simulator();
    Simulator(Simulator&&) noexcept;
    Simulator& operator=(Simulator&&) noexcept;

    /// Fires one vertex once. Returns false (and does nothing) if the configuration is stable.
    bool step();
    bool stable() const;
    const OracleState& state() const { return state_; }
    OracleState take_state() { return std::move(state_); }

    class Scheduler;  // defined in oracle.cpp

private:
    void fire(LatticePoint v);
    void touched(LatticePoint v);

    OracleState state_;
    std::unique_ptr<Scheduler> scheduler_;
};

/// 2^n * (row_bound(n) + 1): each chip walks at most past the last row.
std::uint64_t default_move_cap(unsigned n);

/// Runs to stability. Throws CapExceededError if more than `move_cap` firings are needed.
OracleState simulate(unsigned n, Strategy strategy, std::uint64_t move_cap);
OracleState simulate(unsigned n, Strategy strategy);

/// Chips that ever arrived at each vertex: [v = root] 2^n + firings(x-1, y) + firings(x, y-1).
Grid<ChipCount> arrivals(const OracleState& s);

struct ConfluenceReport {
    unsigned n = 0;
    bool pass = false;
    std::size_t runs = 0;
    std::uint64_t moves = 0;
    std::string detail;
};

/// `trials` random orders plus every deterministic strategy must agree on stable grid,
/// firing counts and move total.
ConfluenceReport confluence_check(unsigned n, std::size_t trials, std::uint64_t seed);

}  // namespace chipfire::oracle
