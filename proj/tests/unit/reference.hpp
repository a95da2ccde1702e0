#pragma once

// Deliberately naive reference implementations used as test oracles.
// They share no code with the library: plain uint64 arithmetic, untrimmed rows.

#include <cstdint>
#include <vector>

namespace ref {

/// Rows of F indexed by y (full width index + 1), until the first all-zero row.
inline std::vector<std::vector<std::uint64_t>> table(unsigned n) {
    std::vector<std::vector<std::uint64_t>> rows{{std::uint64_t{1} << n}};
    for (;;) {
        const auto& cur = rows.back();
        std::vector<std::uint64_t> next(cur.size() + 1, 0);
        bool any = false;
        for (std::size_t y = 0; y < next.size(); ++y) {
            const std::uint64_t from_left = y < cur.size() ? cur[y] / 2 : 0;     // (x-1, y) fires rightwards in x
            const std::uint64_t from_below = y > 0 ? cur[y - 1] / 2 : 0;        // (x, y-1) fires upwards in y
            next[y] = from_left + from_below;
            any = any || next[y] != 0;
        }
        if (!any) break;
        rows.push_back(std::move(next));
    }
    return rows;
}

inline std::uint64_t total_firings(unsigned n) {
    std::uint64_t t = 0;
    for (const auto& r : table(n))
        for (auto v : r) t += v / 2;
    return t;
}

/// D(i) for i = -m..m from the parity of the reference table; index i + m.
inline std::vector<std::uint64_t> distance(unsigned n, std::int64_t& m) {
    const auto rows = table(n);
    m = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t y = 0; y < rows[i].size(); ++y)
            if (rows[i][y] % 2 == 1) {
                const std::int64_t d = static_cast<std::int64_t>(2 * y) - static_cast<std::int64_t>(i);
                m = std::max(m, d < 0 ? -d : d);
            }
    std::vector<std::uint64_t> out(static_cast<std::size_t>(2 * m + 1), 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t y = 0; y < rows[i].size(); ++y)
            if (rows[i][y] % 2 == 1) out[static_cast<std::size_t>(static_cast<std::int64_t>(2 * y) - static_cast<std::int64_t>(i) + m)]++;
    return out;
}

}  // namespace ref
