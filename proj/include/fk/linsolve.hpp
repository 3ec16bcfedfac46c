#pragma once

#include "fk/numeric.hpp"

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

namespace fk {

using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Exact solve of A x = b over the rationals (A may be rectangular).  The
// candidate from a full-pivot LU is verified by substitution; failure throws
// Inconsistent.  With require_unique, a nontrivial kernel throws
// UnderdeterminedSystem.
RVector solve_exact(const RMatrix& A, const RVector& b, bool require_unique = true);

}  // namespace fk
