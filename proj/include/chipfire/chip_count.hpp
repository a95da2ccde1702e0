#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "chipfire/error.hpp"

namespace chipfire {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

/// Largest supported exponent: 2^n chips at the root, with n <= kMaxExponent.
/// Keeping one spare bit lets every signed difference of two counts fit in i128.
inline constexpr unsigned kMaxExponent = 126;

/// Number of chips at a vertex (or any nonnegative total derived from them).
/// Arithmetic is checked: leaving the 128-bit range throws OverflowError.
class ChipCount {
public:
    constexpr ChipCount() = default;
    constexpr ChipCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr ChipCount from_raw(u128 v) {
        ChipCount c;
        c.value_ = v;
        return c;
    }

    /// 2^n; throws OverflowError when n > kMaxExponent.
    static ChipCount pow2(unsigned n);

    constexpr u128 raw() const { return value_; }
    constexpr bool is_zero() const { return value_ == 0; }
    constexpr bool is_odd() const { return (value_ & 1) != 0; }
    constexpr ChipCount half() const { return from_raw(value_ >> 1); }

    /// Narrowing conversion; throws OverflowError if the value does not fit.
    std::uint64_t to_u64() const;
    bool fits_u64() const { return value_ <= UINT64_MAX; }

    std::string to_string() const;
    /// Parses a decimal string; throws std::invalid_argument or OverflowError.
    static ChipCount parse(std::string_view text);

    ChipCount& operator+=(ChipCount o);
    ChipCount& operator-=(ChipCount o);
    ChipCount& operator*=(ChipCount o);

    friend ChipCount operator+(ChipCount a, ChipCount b) { return a += b; }
    friend ChipCount operator-(ChipCount a, ChipCount b) { return a -= b; }
    friend ChipCount operator*(ChipCount a, ChipCount b) { return a *= b; }

    friend constexpr bool operator==(ChipCount a, ChipCount b) { return a.value_ == b.value_; }
    friend constexpr std::strong_ordering operator<=>(ChipCount a, ChipCount b) {
        return a.value_ <=> b.value_;
    }

private:
    u128 value_ = 0;
};

std::ostream& operator<<(std::ostream& os, ChipCount c);

/// Signed difference of chip counts, as used by the difference table.
class ChipDelta {
public:
    constexpr ChipDelta() = default;
    constexpr ChipDelta(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr ChipDelta from_raw(i128 v) {
        ChipDelta d;
        d.value_ = v;
        return d;
    }

    /// a - b. Both operands must be below 2^127.
    static ChipDelta difference(ChipCount a, ChipCount b);

    constexpr i128 raw() const { return value_; }
    constexpr int sign() const { return (value_ > 0) - (value_ < 0); }
    ChipCount abs() const;

    std::string to_string() const;
    static ChipDelta parse(std::string_view text);

    ChipDelta& operator+=(ChipDelta o);
    friend ChipDelta operator+(ChipDelta a, ChipDelta b) { return a += b; }
    friend ChipDelta operator-(ChipDelta a) { return from_raw(-a.value_); }

    friend constexpr bool operator==(ChipDelta a, ChipDelta b) { return a.value_ == b.value_; }
    friend constexpr std::strong_ordering operator<=>(ChipDelta a, ChipDelta b) {
        return a.value_ <=> b.value_;
    }

private:
    i128 value_ = 0;
};

std::ostream& operator<<(std::ostream& os, ChipDelta d);

}  // namespace chipfire
