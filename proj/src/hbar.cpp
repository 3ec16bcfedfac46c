#include "fk/hbar.hpp"

#include <sstream>

namespace fk {

HbarSeries::HbarSeries(int order, std::vector<LaurentPoly> coeffs)
    : order_(order), c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(order_) + 1);
}

HbarSeries HbarSeries::constant(int order, const LaurentPoly& p) {
    HbarSeries s(order);
    s.c_[0] = p;
    return s;
}

HbarSeries HbarSeries::truncated(int new_order) const {
    HbarSeries s(new_order);
    for (int r = 0; r <= new_order && r <= order_; ++r) s.c_[static_cast<std::size_t>(r)] = c_[static_cast<std::size_t>(r)];
    return s;
}

bool HbarSeries::operator==(const HbarSeries& o) const {
    if (order_ != o.order_) return false;
    for (int r = 0; r <= order_; ++r)
        if (c_[static_cast<std::size_t>(r)] != o.c_[static_cast<std::size_t>(r)]) return false;
    return true;
}

HbarSeries operator+(const HbarSeries& a, const HbarSeries& b) {
    int ord = std::min(a.order_, b.order_);
    HbarSeries s(ord);
    for (int r = 0; r <= ord; ++r) s[r] = a[r] + b[r];
    return s;
}

HbarSeries operator-(const HbarSeries& a, const HbarSeries& b) {
    int ord = std::min(a.order_, b.order_);
    HbarSeries s(ord);
    for (int r = 0; r <= ord; ++r) s[r] = a[r] - b[r];
    return s;
}

HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
    int ord = std::min(a.order_, b.order_);
    HbarSeries s(ord);
    for (int i = 0; i <= ord; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= ord; ++j) {
            if (b[j].is_zero()) continue;
            s[i + j] += a[i] * b[j];
        }
    }
    return s;
}

HbarSeries operator*(const HbarSeries& a, const LaurentPoly& p) {
    HbarSeries s(a.order_);
    for (int r = 0; r <= a.order_; ++r) s[r] = a[r] * p;
    return s;
}

HbarSeries operator*(const HbarSeries& a, const Rational& c) {
    HbarSeries s(a.order_);
    for (int r = 0; r <= a.order_; ++r) s[r] = a[r] * c;
    return s;
}

HbarSeries HbarSeries::inverse() const {
    if (c_[0].is_zero() || !c_[0].is_constant())
        fail("NotInvertible", "hbar-series inverse needs a nonzero constant leading coefficient");
    Rational lead = c_[0].constant_value();
    HbarSeries inv(order_);
    inv[0] = LaurentPoly::constant(Rational(1) / lead);
    for (int r = 1; r <= order_; ++r) {
        LaurentPoly acc;
        for (int i = 1; i <= r; ++i) acc += c_[static_cast<std::size_t>(i)] * inv[r - i];
        inv[r] = acc * Rational(-1 / lead);
    }
    return inv;
}

HbarSeries HbarSeries::pow(unsigned e) const {
    HbarSeries acc = HbarSeries::one(order_);
    HbarSeries base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string HbarSeries::str() const {
    std::ostringstream os;
    for (int r = 0; r <= order_; ++r) {
        if (r) os << " + ";
        os << "(" << c_[static_cast<std::size_t>(r)].str() << ")*h^" << r;
    }
    return os.str();
}

HbarSeries hbar_expand(const LaurentPoly& p, const std::string& var, int order) {
    HbarSeries s(order);
    auto parts = p.slices(var);
    for (const auto& [equarters, slice] : parts) {
        Rational e(equarters, 4);
        Rational factor(1);  // e^r / r!
        for (int r = 0; r <= order; ++r) {
            if (r > 0) factor *= e / r;
            if (factor == 0 && r > 0) break;
            s[r] += slice * factor;
        }
    }
    return s;
}

}  // namespace fk
