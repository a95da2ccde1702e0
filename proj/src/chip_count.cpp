#include "chipfire/chip_count.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace chipfire {

namespace {

constexpr u128 kU128Max = ~u128{0};
constexpr i128 kI128Max = static_cast<i128>(kU128Max >> 1);

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 parse_u128(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    u128 v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("not a decimal number: " + std::string(text));
        }
        const auto digit = static_cast<u128>(c - '0');
        if (v > (kU128Max - digit) / 10) {
            throw OverflowError("number exceeds 128 bits: " + std::string(text));
        }
        v = v * 10 + digit;
    }
    return v;
}

}  // namespace

ChipCount ChipCount::pow2(unsigned n) {
    if (n > kMaxExponent) {
        throw OverflowError("2^" + std::to_string(n) + " chips exceeds the supported width (n <= " +
                            std::to_string(kMaxExponent) + ")");
    }
    return from_raw(u128{1} << n);
}

std::uint64_t ChipCount::to_u64() const {
    if (!fits_u64()) throw OverflowError("chip count " + to_string() + " does not fit in 64 bits");
    return static_cast<std::uint64_t>(value_);
}

std::string ChipCount::to_string() const { return u128_to_string(value_); }

ChipCount ChipCount::parse(std::string_view text) { return from_raw(parse_u128(text)); }

ChipCount& ChipCount::operator+=(ChipCount o) {
    if (__builtin_add_overflow(value_, o.value_, &value_)) throw OverflowError("chip count addition overflow");
    return *this;
}

ChipCount& ChipCount::operator-=(ChipCount o) {
    if (o.value_ > value_) throw OverflowError("chip count subtraction underflow");
    value_ -= o.value_;
    return *this;
}

ChipCount& ChipCount::operator*=(ChipCount o) {
    if (__builtin_mul_overflow(value_, o.value_, &value_)) throw OverflowError("chip count multiplication overflow");
    return *this;
}

std::ostream& operator<<(std::ostream& os, ChipCount c) { return os << c.to_string(); }

ChipDelta ChipDelta::difference(ChipCount a, ChipCount b) {
    const auto limit = static_cast<u128>(kI128Max);
    if (a.raw() > limit || b.raw() > limit) throw OverflowError("chip difference operand exceeds 2^127");
    return from_raw(static_cast<i128>(a.raw()) - static_cast<i128>(b.raw()));
}

ChipCount ChipDelta::abs() const {
    return ChipCount::from_raw(value_ < 0 ? static_cast<u128>(-(value_ + 1)) + 1 : static_cast<u128>(value_));
}

std::string ChipDelta::to_string() const {
    if (value_ < 0) return "-" + abs().to_string();
    return abs().to_string();
}

ChipDelta ChipDelta::parse(std::string_view text) {
    const bool negative = !text.empty() && text.front() == '-';
    const u128 mag = parse_u128(negative ? text.substr(1) : text);
    if (mag > static_cast<u128>(kI128Max)) throw OverflowError("difference exceeds 127 bits");
    const auto v = static_cast<i128>(mag);
    return from_raw(negative ? -v : v);
}

ChipDelta& ChipDelta::operator+=(ChipDelta o) {
    if (__builtin_add_overflow(value_, o.value_, &value_)) throw OverflowError("chip difference overflow");
    return *this;
}

std::ostream& operator<<(std::ostream& os, ChipDelta d) { return os << d.to_string(); }

}  // namespace chipfire
