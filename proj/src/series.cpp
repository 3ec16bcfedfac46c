#include "fk/series.hpp"

namespace fk {

LaurentPoly truncate_series(const LaurentPoly& p, const std::string& var,
                            std::int64_t lo_quarters, std::int64_t hi_quarters) {
    auto idx = p.var_index(var);
    if (!idx) return p;
    LaurentPoly out;
    for (const auto& [e, sliced] : p.slices(var)) {
        if (e < lo_quarters || e > hi_quarters) continue;
        out += sliced * LaurentPoly::monomial(var, e);
    }
    return out;
}

LaurentPoly series_inverse(const LaurentPoly& d, const std::string& var, ExpandAt direction,
                           std::int64_t terms) {
    if (d.is_zero()) fail("ZeroPolynomial", "series inverse of the zero polynomial");
    const bool at_zero = direction == ExpandAt::kZero;
    auto lead_q = at_zero ? d.low_degree_quarters(var) : d.degree_quarters(var);
    std::int64_t l = *lead_q;
    LaurentPoly lead_coeff = d.coefficient(var, l);
    if (!lead_coeff.is_constant())
        fail("NotInvertible", "leading series coefficient must be a scalar");
    Rational c = lead_coeff.constant_value();

    // d = c*var^l * (1 - g) with g supported strictly on the expansion side.
    LaurentPoly g =
        LaurentPoly::constant(1) - d * LaurentPoly::monomial(var, -l, Rational(1) / c);
    // inverse = (1/c) var^{-l} * sum g^k, keeping relative exponents < terms
    std::int64_t window = checked_mul(terms, 4);
    std::int64_t lo = at_zero ? 0 : -(window - 1);
    std::int64_t hi = at_zero ? window - 1 : 0;
    LaurentPoly acc = LaurentPoly::constant(1);
    LaurentPoly powg = LaurentPoly::constant(1);
    while (true) {
        powg = truncate_series(powg * g, var, lo, hi);
        if (powg.is_zero()) break;
        acc += powg;
    }
    return acc * LaurentPoly::monomial(var, -l, Rational(1) / c);
}

}  // namespace fk
