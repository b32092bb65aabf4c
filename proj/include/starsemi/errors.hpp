#pragma once

#include <stdexcept>
#include <string>

namespace starsemi {

// Base class for all library errors. Domain violations, overflow and
// parse failures all derive from this so callers can catch one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Checked 128-bit arithmetic overflowed.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error("overflow: " + msg) {}
};

// Generator set has gcd > 1, so it does not generate a numerical semigroup.
class NotCofiniteError : public Error {
public:
    explicit NotCofiniteError(const std::string& gcd)
        : Error("generators have gcd " + gcd + ", semigroup is not cofinite") {}
};

// Operation requires a flat (or strongly flat) semigroup.
class NotFlatError : public Error {
public:
    explicit NotFlatError(const std::string& cls)
        : Error("semigroup is " + cls + ", not flat") {}
};

// extract_flat_presentation called with a pivot whose s-hat is not 1.
class NotFlatAtPivotError : public Error {
public:
    explicit NotFlatAtPivotError(const std::string& detail)
        : Error("presentation is not flat at the chosen pivot: " + detail) {}
};

// Seifert invariants define a non negative-definite graph (e >= 0).
class NotNegativeDefiniteError : public Error {
public:
    explicit NotNegativeDefiniteError(const std::string& detail)
        : Error("graph is not negative definite: " + detail) {}
};

// flat_quotient requires pairwise coprime leg orders and gcd(alpha_i, s_i) = 1.
class CoprimalityRequiredError : public Error {
public:
    explicit CoprimalityRequiredError(const std::string& detail)
        : Error("coprimality precondition violated: " + detail) {}
};

// Text input could not be parsed; position is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : Error("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
    std::size_t position;
};

}  // namespace starsemi
