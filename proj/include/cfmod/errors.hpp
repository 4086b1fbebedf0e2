#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cfmod {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// d == 0: no modular structure exists.
class ZeroModulusError : public Error {
public:
    ZeroModulusError() : Error("modulus is zero") {}
};

/// An operand lies outside the documented domain of the operation
/// (negative residue, b >= d for division, N <= 0 for encoding, ...).
class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error(what) {}
};

/// Sequence index outside the valid window of a context.
class IndexError : public Error {
public:
    explicit IndexError(const std::string& what) : Error(what) {}
};

/// Division or theta-scale encoding requested for gcd(a, d) > 1.
/// Carries the offending gcd so callers can divide it out.
class NotInvertibleError : public Error {
public:
    NotInvertibleError(mpz_class gcd, const std::string& what)
        : Error(what), gcd_(std::move(gcd)) {}

    const mpz_class& gcd() const noexcept { return gcd_; }

private:
    mpz_class gcd_;
};

/// A digit string was evaluated against a context other than the one
/// that produced its basis.
class MismatchError : public Error {
public:
    explicit MismatchError(const std::string& what) : Error(what) {}
};

/// Malformed numeric or digit-string text.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace cfmod
