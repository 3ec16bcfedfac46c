#pragma once

#include "fk/laurent.hpp"

#include <map>

namespace fk {

// Symmetrized Alexander polynomials and the symmetric expansion feeding the
// q -> 1 layer of the series invariant.

// -t + 3 - 1/t, stored as a constant and validated against the cabling
// product downstream rather than trusted blindly.
LaurentPoly fig8_alexander(const std::string& var = "t");

// Torus knot Delta via the exact quotient
//   (u^{pq/2}-u^{-pq/2})(u^{1/2}-u^{-1/2}) / ((u^{p/2}-u^{-p/2})(u^{q/2}-u^{-q/2})).
LaurentPoly alexander_torus(int p, int q, const std::string& var = "t");

// Cable formula Delta_K(u^p) * Delta_{T(p,q)}(u) for 2 <= p < |q|, gcd(p,q)=1.
// `companion` is univariate in `var`.
LaurentPoly alexander_cable(int p, int q, const LaurentPoly& companion,
                            const std::string& var = "x");

// Leading coefficient is +-1 (and the polynomial is nonzero).
bool is_monic_alexander(const LaurentPoly& delta, const std::string& var);

// Twice the symmetric expansion of (x^{1/2}-x^{-1/2})/Delta(x): the sum of
// the directed expansions at x=0 and x=infinity, truncated to |exponent|
// <= m_max/2.  Antisymmetric with half-integer exponents.  Throws NonMonic
// when Delta is not monic (coefficients would leave Z).
LaurentPoly symmetric_expansion(const LaurentPoly& delta_x, std::int64_t m_max,
                                const std::string& var = "x");

// m -> coefficient of x^{m/2} for odd m >= 1 (zeros omitted).
std::map<std::int64_t, Rational> expansion_coefficients(const LaurentPoly& series,
                                                        const std::string& var = "x");

}  // namespace fk
