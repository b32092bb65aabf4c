#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "starsemi/errors.hpp"

namespace starsemi {

// Checked 128-bit signed integer. Every arithmetic operator detects
// overflow and throws OverflowError instead of wrapping. All public
// integer arithmetic in the library goes through this type.
class Int {
public:
    constexpr Int() : v_(0) {}
    constexpr Int(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    constexpr Int(int v) : v_(v) {}        // NOLINT(google-explicit-constructor)

    static constexpr Int raw(__int128 v) {
        Int r;
        r.v_ = v;
        return r;
    }

    constexpr __int128 value() const { return v_; }

    friend Int operator+(Int a, Int b) {
        __int128 r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("addition");
        return raw(r);
    }
    friend Int operator-(Int a, Int b) {
        __int128 r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("subtraction");
        return raw(r);
    }
    friend Int operator*(Int a, Int b) {
        __int128 r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("multiplication");
        return raw(r);
    }
    friend Int operator/(Int a, Int b) {
        if (b.v_ == 0) throw Error("division by zero");
        if (a.v_ == kMin && b.v_ == -1) throw OverflowError("division");
        return raw(a.v_ / b.v_);
    }
    friend Int operator%(Int a, Int b) {
        if (b.v_ == 0) throw Error("division by zero");
        if (a.v_ == kMin && b.v_ == -1) return Int(0);
        return raw(a.v_ % b.v_);
    }
    Int operator-() const {
        if (v_ == kMin) throw OverflowError("negation");
        return raw(-v_);
    }

    Int& operator+=(Int o) { return *this = *this + o; }
    Int& operator-=(Int o) { return *this = *this - o; }
    Int& operator*=(Int o) { return *this = *this * o; }
    Int& operator/=(Int o) { return *this = *this / o; }
    Int& operator%=(Int o) { return *this = *this % o; }
    Int& operator++() { return *this = *this + Int(1); }

    friend constexpr bool operator==(Int a, Int b) { return a.v_ == b.v_; }
    friend constexpr std::strong_ordering operator<=>(Int a, Int b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Checked narrowing; throws when the value does not fit.
    long long to_int64() const {
        if (v_ > INT64_MAX || v_ < INT64_MIN) throw OverflowError("value does not fit in 64 bits");
        return static_cast<long long>(v_);
    }

    bool is_zero() const { return v_ == 0; }

private:
    static constexpr __int128 kMin = static_cast<__int128>(1) << 127;
    __int128 v_;
};

std::string to_string(Int v);
Int parse_int(std::string_view text);  // throws ParseError

inline Int abs(Int v) { return v < Int(0) ? -v : v; }

// gcd(0, 0) = 0; result is always nonnegative.
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);  // checked; lcm(0, x) = 0

// Floor/ceil division; denominator must be positive.
Int floor_div(Int num, Int den);
Int ceil_div(Int num, Int den);

// Modular inverse of a modulo m (m >= 1), result in [0, m).
// Throws when gcd(a, m) != 1.
Int mod_inverse(Int a, Int m);

// Nonnegative remainder in [0, m), m >= 1.
Int mod_floor(Int a, Int m);

Int checked_pow(Int base, Int exp);  // exp >= 0

}  // namespace starsemi
