#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fk {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Error with a stable machine-readable code ("NotDivisible", "InvalidColor", ...).
// The CLI turns these into structured diagnostics; tests match on code().
class ComputationError : public std::runtime_error {
public:
    ComputationError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw ComputationError(code, what);
}

// Exponent bookkeeping uses 64-bit lattice numerators; every operation that
// could leave the representable range trips here instead of wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail("ExponentOverflow", "exponent addition overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail("ExponentOverflow", "exponent multiplication overflow");
    return r;
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational rational_from_string(const std::string& s) { return Rational(s); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// r^e for integer e (e may be negative when r != 0).
inline Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) fail("DivisionByZero", "0 raised to negative power");
        return Rational(0);
    }
    Rational base = e < 0 ? Rational(1) / r : r;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1ul) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

}  // namespace fk
