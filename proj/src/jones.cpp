#include "fk/jones.hpp"

#include "fk/hbar.hpp"
#include "fk/linsolve.hpp"

#include <cstdlib>

namespace fk {

LaurentPoly unknot_jones(int n) {
    if (n < 1) fail("InvalidColor", "color must be >= 1");
    LaurentPoly p;
    for (int j = 0; j < n; ++j)
        p += LaurentPoly::monomial("t", 8 * static_cast<std::int64_t>(n - 1 - 2 * j));
    return p;
}

LaurentPoly quantum_integer_q(int n) {
    if (n < 1) fail("InvalidColor", "color must be >= 1");
    LaurentPoly p;
    for (int j = 0; j < n; ++j)
        p += LaurentPoly::monomial("q", 2 * static_cast<std::int64_t>(n - 1 - 2 * j));
    return p;
}

LaurentPoly fig8_jones_unnorm(int n) {
    if (n < 1) fail("InvalidColor", "color must be >= 1");
    auto qpow = [](std::int64_t e) { return LaurentPoly::monomial("q", 4 * e); };
    LaurentPoly acc = LaurentPoly::constant(1);   // r = 0 term (empty product)
    LaurentPoly prod = LaurentPoly::constant(1);
    for (int k = 1; k <= n - 1; ++k) {
        prod *= qpow(n) + qpow(-n) - qpow(k) - qpow(-k);
        acc += prod;
    }
    return quantum_integer_q(n) * acc;
}

LaurentPoly cable_jones_unnorm(int r, int n) {
    if (r % 2 == 0 || std::abs(r) <= 8)
        fail("InvalidCableParam", "cabling formula needs odd r with |r| > 8");
    if (n < 1) fail("InvalidColor", "color must be >= 1");
    LaurentPoly sum;
    for (int w = 1; w <= n; ++w) {
        // exponent (r/2) w (w-1): w(w-1) is even, so this is integral
        LaurentPoly term = LaurentPoly::monomial(
            "q", 2 * static_cast<std::int64_t>(r) * w * (w - 1));
        term *= fig8_jones_unnorm(2 * w - 1);
        bool negative = ((static_cast<long>(r) * (n - w)) % 2) != 0;
        if (negative) term = -term;
        sum += term;
    }
    // overall q^{-(r/2)(n^2-1)} lives on the half lattice for even n
    return sum * LaurentPoly::monomial(
                     "q", -2 * static_cast<std::int64_t>(r) * (static_cast<std::int64_t>(n) * n - 1));
}

LaurentPoly cable_jones_normalized(int r, int n) {
    return divide_exact(cable_jones_unnorm(r, n), quantum_integer_q(n));
}

Rational eval_fit_row(const LaurentPoly& row, long n) {
    Rational v(0);
    for (const auto& [e, slice] : row.slices("n")) {
        if (e % 4 != 0 || e < 0) fail("BadFormat", "fit row must be polynomial in n");
        v += slice.constant_value() * rational_pow(Rational(n), static_cast<long>(e / 4));
    }
    return v;
}

MmrFit mmr_fit(int r_cable, int order, int sample_colors) {
    if (sample_colors == 0) sample_colors = order + 3;
    if (sample_colors < order + 1)
        fail("InvalidConfig", "need at least order+1 sample colors");

    // hbar rows of the normalized colored Jones at each sample color
    std::vector<std::vector<Rational>> value(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= sample_colors; ++n) {
        auto series = hbar_expand(cable_jones_normalized(r_cable, n), "q", order);
        for (int rr = 0; rr <= order; ++rr) {
            const auto& c = series[rr];
            value[static_cast<std::size_t>(rr)].push_back(c.is_zero() ? Rational(0)
                                                                      : c.constant_value());
        }
    }

    MmrFit fit;
    fit.order = order;
    for (int rr = 0; rr <= order; ++rr) {
        const auto& vals = value[static_cast<std::size_t>(rr)];
        int unknowns = rr + 1;
        RMatrix A(unknowns, unknowns);
        RVector b(unknowns);
        for (int i = 0; i < unknowns; ++i) {
            Rational npow(1);
            for (int j = 0; j < unknowns; ++j) {
                A(i, j) = npow;
                npow *= (i + 1);
            }
            b(i) = vals[static_cast<std::size_t>(i)];
        }
        RVector coef = solve_exact(A, b);
        LaurentPoly row;
        for (int j = 0; j < unknowns; ++j)
            row += LaurentPoly::monomial("n", 4 * j, coef(j));
        // the interpolant must also explain every extra sample color
        for (int n = unknowns + 1; n <= sample_colors; ++n) {
            if (eval_fit_row(row, n) != vals[static_cast<std::size_t>(n - 1)])
                fail("DegreeBoundViolated",
                     "hbar order " + std::to_string(rr) +
                         " is not a degree-bounded polynomial in the color");
        }
        fit.rows.push_back(std::move(row));
    }
    return fit;
}

}  // namespace fk
