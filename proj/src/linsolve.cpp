#include "fk/linsolve.hpp"

namespace fk {

RVector solve_exact(const RMatrix& A, const RVector& b, bool require_unique) {
    Eigen::FullPivLU<RMatrix> lu(A);
    lu.setThreshold(Rational(0));  // exact pivoting: only true zeros are zero
    RVector x = lu.solve(b);
    if (A * x != b) fail("Inconsistent", "linear system has no exact solution");
    if (require_unique && lu.dimensionOfKernel() > 0)
        fail("UnderdeterminedSystem", "linear system has a nontrivial kernel");
    return x;
}

}  // namespace fk
