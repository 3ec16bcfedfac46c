#include "fk/alexander.hpp"

#include "fk/series.hpp"

#include <cstdlib>
#include <numeric>

namespace fk {

LaurentPoly fig8_alexander(const std::string& var) {
    return LaurentPoly::from_terms(var, {{1, -1}, {0, 3}, {-1, -1}});
}

static LaurentPoly half_power_diff(const std::string& var, std::int64_t k) {
    // u^{k/2} - u^{-k/2}
    return LaurentPoly::monomial(var, 2 * k) - LaurentPoly::monomial(var, -2 * k);
}

LaurentPoly alexander_torus(int p, int q, const std::string& var) {
    long ap = std::labs(p), aq = std::labs(q);
    if (ap < 2 || aq < 2 || std::gcd(ap, aq) != 1)
        fail("NotCoprime", "torus parameters must be coprime and >= 2 in magnitude");
    auto num = half_power_diff(var, ap * aq) * half_power_diff(var, 1);
    auto den = half_power_diff(var, ap) * half_power_diff(var, aq);
    return divide_exact(num, den);
}

LaurentPoly alexander_cable(int p, int q, const LaurentPoly& companion, const std::string& var) {
    if (!(2 <= p && p < std::labs(q)) || std::gcd(p, std::abs(q)) != 1)
        fail("ConstraintViolated", "cable parameters need 2 <= p < |q| and gcd(p,q) = 1");
    if (companion.vars().size() > 1)
        fail("ConstraintViolated", "companion Alexander polynomial must be univariate");
    LaurentPoly comp = companion;
    if (!comp.vars().empty() && comp.vars()[0] != var) {
        comp = substitute(comp, comp.vars()[0], LaurentPoly::variable(var));
    }
    auto companion_part = substitute(comp, var, LaurentPoly::monomial(var, 4 * p));
    return companion_part * alexander_torus(p, q, var);
}

bool is_monic_alexander(const LaurentPoly& delta, const std::string& var) {
    auto top = delta.degree_quarters(var);
    if (!top) return false;
    auto lead = delta.coefficient(var, *top);
    if (!lead.is_constant()) return false;
    Rational c = lead.constant_value();
    return c == 1 || c == -1;
}

LaurentPoly symmetric_expansion(const LaurentPoly& delta_x, std::int64_t m_max,
                                const std::string& var) {
    if (delta_x.is_zero()) fail("ZeroPolynomial", "expansion of zero Alexander polynomial");
    if (!is_monic_alexander(delta_x, var))
        fail("NonMonic", "non-monic Alexander polynomial: coefficient functions leave Z[q^{+-1}]");

    auto deg = *delta_x.degree_quarters(var);
    auto low = *delta_x.low_degree_quarters(var);
    // enough integer steps that x^{m_max/2} survives the shift by the
    // numerator and the 1/Delta leading exponent
    std::int64_t terms = m_max / 2 + (deg - low) / 4 + 4;
    auto numerator = half_power_diff(var, 1);

    auto s0 = numerator * series_inverse(delta_x, var, ExpandAt::kZero, terms);
    auto sinf = numerator * series_inverse(delta_x, var, ExpandAt::kInfinity, terms);
    auto sum = truncate_series(s0 + sinf, var, -2 * m_max, 2 * m_max);
    return sum;
}

std::map<std::int64_t, Rational> expansion_coefficients(const LaurentPoly& series,
                                                        const std::string& var) {
    std::map<std::int64_t, Rational> out;
    for (const auto& [e, slice] : series.slices(var)) {
        if (e <= 0) continue;
        if (e % 2 != 0 || (e / 2) % 2 == 0) fail("BadFormat", "expansion exponent not odd/2");
        if (!slice.is_constant()) fail("BadFormat", "expansion coefficient not scalar");
        out.emplace(e / 2, slice.constant_value());
    }
    return out;
}

}  // namespace fk
