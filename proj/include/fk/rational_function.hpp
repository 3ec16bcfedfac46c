#pragma once

#include "fk/laurent.hpp"

namespace fk {

// Quotient of Laurent polynomials.  No gcd reduction is performed anywhere;
// equality is cross-multiplication equality, which is all the pipeline needs.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(LaurentPoly::constant(1)) {}
    explicit RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(1)) {}
    RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) fail("ZeroPolynomial", "rational function with zero denominator");
        normalize_monomial();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction operator-() const { return with(-num_, den_); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.is_zero()) fail("ZeroPolynomial", "division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction inverse() const {
        if (num_.is_zero()) fail("ZeroPolynomial", "inverse of zero rational function");
        return with(den_, num_);
    }

    // Collapse to a Laurent polynomial when the quotient is exact.
    LaurentPoly as_polynomial() const { return divide_exact(num_, den_); }

    RationalFunction substituted(const std::string& var, const LaurentPoly& value) const {
        return RationalFunction(substitute(num_, var, value), substitute(den_, var, value));
    }

    std::string str() const {
        if (den_ == LaurentPoly::constant(1)) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    LaurentPoly num_, den_;

    static RationalFunction with(LaurentPoly n, LaurentPoly d) {
        RationalFunction rf;
        rf.num_ = std::move(n);
        rf.den_ = std::move(d);
        return rf;
    }

    // Cancel a pure monomial denominator into the numerator; keeps the most
    // common shapes (operator coefficients) from snowballing.
    void normalize_monomial() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::constant(1);
            return;
        }
        if (den_.term_count() == 1) {
            num_ = divide_exact(num_, den_);
            den_ = LaurentPoly::constant(1);
        }
    }
};

}  // namespace fk
