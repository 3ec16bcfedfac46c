#pragma once

#include "fk/laurent.hpp"

#include <vector>

namespace fk {

// Colored Jones polynomials of the unknot, the figure-eight knot, and its
// (r,2)-cables.  Colors are 1-based (n=1 is the trivial coloring).

// (t^{2n} - t^{-2n})/(t^2 - t^{-2}) as a Laurent polynomial in t.
LaurentPoly unknot_jones(int n);

// The same quantum integer in q (q = t^4), exponents on the half lattice.
LaurentPoly quantum_integer_q(int n);

// Unnormalized figure-eight value at color n:
//   [n] * sum_{r=0}^{n-1} prod_{k=1}^{r} (q^n + q^{-n} - q^k - q^{-k}).
LaurentPoly fig8_jones_unnorm(int n);

// Cabling sum for the (r,2)-cable of the figure eight (r odd, |r| > 8):
//   q^{-(r/2)(n^2-1)} sum_{w=1}^{n} (-1)^{r(n-w)} q^{(r/2)w(w-1)} Jtilde_{fig8,2w-1}.
// The companion is 0-framed; no framing parameter is exposed.
LaurentPoly cable_jones_unnorm(int r, int n);

// cable_jones_unnorm divided exactly by the unknot value; lands in Z[q^{+-1}].
LaurentPoly cable_jones_normalized(int r, int n);

// Polynomial-in-n coefficients of the hbar expansion of the normalized cable
// Jones: row r is the unique degree-<=r interpolant through colors 1..r+1,
// cross-checked on every remaining sample color (DegreeBoundViolated if any
// extra sample disagrees).
struct MmrFit {
    int order = 0;
    std::vector<LaurentPoly> rows;  // index r -> polynomial in variable "n"
};

MmrFit mmr_fit(int r_cable, int order, int sample_colors = 0);

// Evaluate a polynomial in "n" at an integer color.
Rational eval_fit_row(const LaurentPoly& row, long n);

}  // namespace fk
