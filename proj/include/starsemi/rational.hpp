#pragma once

#include <compare>
#include <string>

#include "starsemi/ints.hpp"

namespace starsemi {

// Exact rational number over checked 128-bit integers. Always stored
// reduced with positive denominator. No floating point anywhere.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(Int num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(long long num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(Int num, Int den) : num_(num), den_(den) { normalize(); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == Int(1); }
    bool is_zero() const { return num_ == Int(0); }

    Int floor() const { return floor_div(num_, den_); }
    Int ceil() const { return ceil_div(num_, den_); }

    // Throws unless the value is an integer.
    Int as_integer() const {
        if (!is_integer()) throw Error("rational " + to_string() + " is not an integer");
        return num_;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Int g = gcd(a.den_, b.den_);
        Int bd = b.den_ / g;
        return Rational(a.num_ * bd + b.num_ * (a.den_ / g), a.den_ * bd);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Int g1 = gcd(abs(a.num_), b.den_);
        Int g2 = gcd(abs(b.num_), a.den_);
        return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == Int(0)) throw Error("rational division by zero");
        return a * Rational(b.den_, b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

    std::string to_string() const {
        if (is_integer()) return starsemi::to_string(num_);
        return starsemi::to_string(num_) + "/" + starsemi::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == Int(0)) throw Error("rational with zero denominator");
        if (den_ < Int(0)) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(abs(num_), den_);
        if (g > Int(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }

    Int num_;
    Int den_;
};

inline Rational abs(const Rational& r) { return r < Rational(Int(0)) ? -r : r; }

}  // namespace starsemi
