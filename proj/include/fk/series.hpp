#pragma once

#include "fk/laurent.hpp"

namespace fk {

enum class ExpandAt { kZero, kInfinity };

// Truncated inverse of a univariate Laurent polynomial as a series at x=0 or
// x=infinity.  `terms` counts integer exponent steps past the leading
// exponent: terms kept satisfy |e - lead| < terms (in integer units).
// Exact geometric expansion; throws ZeroPolynomial on zero input.
LaurentPoly series_inverse(const LaurentPoly& d, const std::string& var, ExpandAt direction,
                           std::int64_t terms);

// Truncating product helper for directed series work: drops exponents beyond
// `bound` quarters from `keep_low ? low : high` end.  Used to keep geometric
// expansions finite.
LaurentPoly truncate_series(const LaurentPoly& p, const std::string& var, std::int64_t lo_quarters,
                            std::int64_t hi_quarters);

}  // namespace fk
