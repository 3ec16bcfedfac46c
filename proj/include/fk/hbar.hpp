#pragma once

#include "fk/laurent.hpp"

#include <vector>

namespace fk {

// Truncated power series in hbar with LaurentPoly coefficients (a rational
// scalar is a 0-variable polynomial).  Ring operations truncate consistently:
// coefficient r of a product depends only on inputs of order <= r.
class HbarSeries {
public:
    HbarSeries() : order_(0), c_(1) {}
    explicit HbarSeries(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1) {}
    HbarSeries(int order, std::vector<LaurentPoly> coeffs);

    static HbarSeries constant(int order, const LaurentPoly& p);
    static HbarSeries one(int order) { return constant(order, LaurentPoly::constant(1)); }

    int order() const { return order_; }
    const LaurentPoly& operator[](int r) const { return c_.at(static_cast<std::size_t>(r)); }
    LaurentPoly& operator[](int r) { return c_.at(static_cast<std::size_t>(r)); }

    HbarSeries truncated(int new_order) const;

    bool operator==(const HbarSeries& o) const;

    friend HbarSeries operator+(const HbarSeries& a, const HbarSeries& b);
    friend HbarSeries operator-(const HbarSeries& a, const HbarSeries& b);
    friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b);
    HbarSeries& operator+=(const HbarSeries& o) { return *this = *this + o; }
    HbarSeries& operator-=(const HbarSeries& o) { return *this = *this - o; }
    HbarSeries& operator*=(const HbarSeries& o) { return *this = *this * o; }
    friend HbarSeries operator*(const HbarSeries& a, const LaurentPoly& p);
    friend HbarSeries operator*(const HbarSeries& a, const Rational& c);

    // Multiplicative inverse; requires the order-0 coefficient to be a
    // nonzero constant.
    HbarSeries inverse() const;
    HbarSeries pow(unsigned e) const;

    std::string str() const;

private:
    int order_;
    std::vector<LaurentPoly> c_;
};

// q = e^hbar expansion of p along `var`: a term c*var^e*rest contributes
// c*e^r/r! * rest at order r.  Exact rationals throughout; `var` disappears
// from the coefficients.
HbarSeries hbar_expand(const LaurentPoly& p, const std::string& var, int order);

}  // namespace fk
