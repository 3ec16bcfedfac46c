#include "fk/qtorus.hpp"

#include "fk/jones.hpp"

#include <cstdlib>

namespace fk {

TorusOperator TorusOperator::term(int j, RationalFunction a) {
    TorusOperator op;
    op.set(j, std::move(a));
    return op;
}

TorusOperator TorusOperator::identity() {
    return term(0, RationalFunction(LaurentPoly::constant(1)));
}

RationalFunction TorusOperator::coeff(int j) const {
    auto it = coeffs_.find(j);
    if (it == coeffs_.end()) return RationalFunction();
    return it->second;
}

void TorusOperator::set(int j, RationalFunction a) {
    if (a.is_zero())
        coeffs_.erase(j);
    else
        coeffs_[j] = std::move(a);
}

std::optional<int> TorusOperator::min_degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

std::optional<int> TorusOperator::max_degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

TorusOperator operator+(const TorusOperator& A, const TorusOperator& B) {
    TorusOperator out = A;
    for (const auto& [j, a] : B.coeffs_) out.set(j, out.coeff(j) + a);
    return out;
}

TorusOperator operator-(const TorusOperator& A, const TorusOperator& B) {
    TorusOperator out = A;
    for (const auto& [j, a] : B.coeffs_) out.set(j, out.coeff(j) - a);
    return out;
}

LaurentPoly shift_companion(const LaurentPoly& p, int s) {
    if (s == 0 || !p.depends_on("M")) return p;
    auto value = LaurentPoly::monomial("t", 8 * s) * LaurentPoly::variable("M");
    return substitute(p, "M", value);
}

RationalFunction shift_companion(const RationalFunction& p, int s) {
    if (s == 0) return p;
    return RationalFunction(shift_companion(p.num(), s), shift_companion(p.den(), s));
}

TorusOperator operator*(const TorusOperator& A, const TorusOperator& B) {
    TorusOperator out;
    for (const auto& [i, a] : A.coeffs_) {
        for (const auto& [j, b] : B.coeffs_) {
            out.set(i + j, out.coeff(i + j) + a * shift_companion(b, i));
        }
    }
    return out;
}

bool TorusOperator::operator==(const TorusOperator& o) const {
    for (const auto& [j, a] : coeffs_)
        if (o.coeff(j) != a) return false;
    for (const auto& [j, a] : o.coeffs_)
        if (coeff(j) != a) return false;
    return true;
}

// t^a M^b
static LaurentPoly tm(std::int64_t a, std::int64_t b, const Rational& c = Rational(1)) {
    return LaurentPoly::monomial("t", 4 * a, c) * LaurentPoly::monomial("M", 4 * b);
}

LaurentPoly phat_poly(int i, P1Variant variant) {
    switch (i) {
        case 0:
            return tm(6, 4) * (tm(12, 4) - LaurentPoly::constant(1));
        case 2:
            return tm(10, 4) * (tm(4, 4) - LaurentPoly::constant(1));
        case 1: {
            LaurentPoly inner = LaurentPoly::constant(1) - tm(4, 2) - tm(4, 4) - tm(12, 4) -
                                tm(12, 6) + tm(16, 8);
            if (variant == P1Variant::kAsPrinted) inner -= tm(12, 4);  // the repeated monomial
            return -(tm(4, 2) - LaurentPoly::constant(1)) * (tm(4, 2) + LaurentPoly::constant(1)) *
                   inner;
        }
        default:
            fail("InvalidConfig", "phat index out of range");
    }
}

// p with M -> t^a M^2
static LaurentPoly arg_sub(const LaurentPoly& p, std::int64_t a) {
    return substitute(p, "M", tm(a, 2));
}

AhatBundle build_ahat(int r, P1Variant variant) {
    if (r % 2 == 0 || std::abs(r) <= 8)
        fail("InvalidCableParam", "annihilator family needs odd r with |r| > 8");

    AhatBundle A;
    A.r = r;
    A.variant = variant;
    for (int i = 0; i < 3; ++i) A.phat[static_cast<std::size_t>(i)] = phat_poly(i, variant);
    const auto& P0 = A.phat[0];
    const auto& P1 = A.phat[1];
    const auto& P2 = A.phat[2];

    A.b_num = LaurentPoly::monomial("M", 4) * (LaurentPoly::constant(1) + tm(4, 2)) *
              (tm(4, 4) - LaurentPoly::constant(1)) * (tm(14, 4) - tm(2, 0));

    A.c[0] = arg_sub(P0, 4) * arg_sub(P1, 6);
    A.c[1] = -(arg_sub(P1, 2) * arg_sub(P1, 6));
    A.c[2] = arg_sub(P1, 2) * arg_sub(P2, 4);

    A.big_b_num = LaurentPoly();
    for (int j = 0; j < 3; ++j)
        A.big_b_num += A.c[static_cast<std::size_t>(j)] * arg_sub(A.b_num, 2 * j + 2);

    A.q_coeff[0] = arg_sub(P0, 4) * arg_sub(P1, 6) * arg_sub(P0, 2);
    A.q_coeff[1] = arg_sub(P0, 4) * arg_sub(P1, 6) * arg_sub(P2, 2) -
                   arg_sub(P1, 6) * arg_sub(P1, 2) * arg_sub(P1, 4) +
                   arg_sub(P2, 4) * arg_sub(P1, 2) * arg_sub(P0, 6);
    A.q_coeff[2] = arg_sub(P2, 4) * arg_sub(P1, 2) * arg_sub(P0, 6);

    for (int i = 0; i < 3; ++i)
        A.Q.set(i, RationalFunction(A.q_coeff[static_cast<std::size_t>(i)]));

    // right factor M^r L + t^{-2r} M^{-r}
    TorusOperator right;
    right.set(1, RationalFunction(LaurentPoly::monomial("M", 4 * r)));
    right.set(0, RationalFunction(tm(-2 * r, -r)));

    TorusOperator W = A.Q * right;  // polynomial coefficients, L-degrees 0..3

    // cleared coefficients of (L-1) B^{-1} W: common denominators dropped
    LaurentPoly big_b_shift = shift_companion(A.big_b_num, 1);
    std::array<LaurentPoly, 4> w_num;
    for (int i = 0; i < 4; ++i) {
        RationalFunction wi = W.coeff(i);
        if (wi.den() != LaurentPoly::constant(1))
            fail("InternalError", "Q * right factor should have polynomial coefficients");
        w_num[static_cast<std::size_t>(i)] = wi.num();
    }
    for (int j = 0; j <= 4; ++j) {
        LaurentPoly up = (j >= 1) ? shift_companion(w_num[static_cast<std::size_t>(j - 1)], 1) *
                                        A.big_b_num
                                  : LaurentPoly();
        LaurentPoly down = (j <= 3) ? w_num[static_cast<std::size_t>(j)] * big_b_shift
                                    : LaurentPoly();
        A.cleared[static_cast<std::size_t>(j)] = up - down;
    }

    // assembled operator with rational coefficients, strictly in written order
    LaurentPoly tdiff = tm(2, 0) - tm(-2, 0);
    RationalFunction big_b_inv(tdiff, A.big_b_num);
    TorusOperator V;
    for (const auto& [i, wi] : W.coeffs()) V.set(i, big_b_inv * wi);
    TorusOperator Lminus1;
    Lminus1.set(1, RationalFunction(LaurentPoly::constant(1)));
    Lminus1.set(0, RationalFunction(LaurentPoly::constant(-1)));
    A.ahat = Lminus1 * V;

    return A;
}

bool annihilates(const AhatBundle& bundle, int n) {
    LaurentPoly sum;
    auto t4 = LaurentPoly::monomial("t", 16);
    for (int j = 0; j <= 4; ++j) {
        const auto& coeff = bundle.cleared[static_cast<std::size_t>(j)];
        auto at_color = substitute(coeff, "M", LaurentPoly::monomial("t", 8 * n));
        auto jones_t = substitute(cable_jones_unnorm(bundle.r, n + j), "q", t4);
        sum += at_color * jones_t;
    }
    return sum.is_zero();
}

AhatResolution resolve_ahat(int r, int check_colors) {
    AhatResolution res;
    AhatBundle printed = build_ahat(r, P1Variant::kAsPrinted);
    AhatBundle dedup = build_ahat(r, P1Variant::kDeduplicated);
    res.printed_passes = true;
    res.dedup_passes = true;
    for (int n = 1; n <= check_colors; ++n) {
        if (res.printed_passes && !annihilates(printed, n)) res.printed_passes = false;
        if (res.dedup_passes && !annihilates(dedup, n)) res.dedup_passes = false;
    }
    res.checked_colors = check_colors;
    if (res.printed_passes)
        res.bundle = std::move(printed);
    else if (res.dedup_passes)
        res.bundle = std::move(dedup);
    else
        fail("AnnihilationFailed",
             "neither reading of the middle building block annihilates the colored Jones "
             "sequence");
    return res;
}

XqRecursion to_xq_recursion(const AhatBundle& bundle) {
    XqRecursion rec;
    auto q_quarter = LaurentPoly::monomial("q", 1);   // t -> q^{1/4}
    auto x_half = LaurentPoly::monomial("x", 2);      // M -> x^{1/2}
    for (int j = 0; j <= 4; ++j) {
        auto p = substitute(bundle.cleared[static_cast<std::size_t>(j)], "t", q_quarter);
        rec.cleared[static_cast<std::size_t>(j)] = substitute(p, "M", x_half);
    }
    if (rec.cleared[4].is_zero())
        fail("LeadingCoefficientZero", "top shift coefficient vanished");
    for (int j = 0; j < 4; ++j)
        rec.coeff[static_cast<std::size_t>(j)] =
            RationalFunction(rec.cleared[static_cast<std::size_t>(j)], rec.cleared[4]);
    return rec;
}

FmRecursion extract_fm_recursion(const XqRecursion& rec) {
    // slice every shift coefficient along x
    std::array<std::map<std::int64_t, LaurentPoly>, 5> sl;
    std::int64_t kmin = 0, kmax = 0;
    bool first = true;
    for (int j = 0; j <= 4; ++j) {
        sl[static_cast<std::size_t>(j)] = rec.cleared[static_cast<std::size_t>(j)].slices("x");
        for (const auto& [k, p] : sl[static_cast<std::size_t>(j)]) {
            if (first || k < kmin) kmin = k;
            if (first || k > kmax) kmax = k;
            first = false;
        }
    }
    if (first) fail("ZeroPolynomial", "empty recursion");
    if ((kmax - kmin) % 2 != 0)
        fail("InconsistentSymmetry", "x-support parity mismatch");

    FmRecursion fm;
    fm.span = static_cast<int>((kmax - kmin) / 2);

    // T_o(q,w) = sum_j [x^{(kmax-2o)/4} slice of coefficient j] * w^j q^{jo/2}
    for (int j = 0; j <= 4; ++j) {
        for (const auto& [k, p] : sl[static_cast<std::size_t>(j)]) {
            if ((kmax - k) % 2 != 0) fail("InconsistentSymmetry", "x-support parity mismatch");
            int o = static_cast<int>((kmax - k) / 2);
            auto factor = LaurentPoly::monomial("w", 4 * j) * LaurentPoly::monomial("q", 2 * j * o);
            fm.taps[o] += p * factor;
        }
    }
    for (auto it = fm.taps.begin(); it != fm.taps.end();) {
        if (it->second.is_zero())
            it = fm.taps.erase(it);
        else
            ++it;
    }

    // reflection consistency: the relation read from x^{-mu} must be the same
    // family after f_{-m} = -f_m
    {
        auto reflect = [&](const LaurentPoly& p) {
            // w -> w^{-1} q^{-49}
            auto inv = LaurentPoly::monomial("w", -4) * LaurentPoly::monomial("q", -196);
            return substitute(p, "w", inv);
        };
        const auto ref_it = fm.taps.rbegin();
        int o0 = ref_it->first;
        LaurentPoly u0 = reflect(fm.taps.count(fm.span - o0) ? fm.taps[fm.span - o0]
                                                             : LaurentPoly());
        for (const auto& [o, T] : fm.taps) {
            LaurentPoly mirror_tap =
                fm.taps.count(fm.span - o) ? fm.taps[fm.span - o] : LaurentPoly();
            LaurentPoly u = reflect(mirror_tap);
            if (u * fm.taps[o0] != u0 * T)
                fail("InconsistentSymmetry",
                     "negative-power matching contradicts the antisymmetric ansatz at offset " +
                         std::to_string(o));
        }
    }

    // prefactor shape: T_span = -lambda q^{109/2} w (1 - q^{87/2} w)
    fm.prefactor_matches = false;
    auto top_it = fm.taps.find(fm.span);
    if (top_it != fm.taps.end()) {
        auto wparts = top_it->second.slices("w");
        if (wparts.size() == 2 && wparts.count(4) && wparts.count(8)) {
            const auto& a_part = wparts[4];
            const auto& b_part = wparts[8];
            if (a_part == -(b_part * LaurentPoly::monomial("q", -174))) {
                fm.lambda = b_part * LaurentPoly::monomial("q", -392);
                fm.prefactor_matches = true;
            }
        }
    }
    if (fm.prefactor_matches) {
        bool all_divide = true;
        std::map<int, LaurentPoly> norm;
        for (const auto& [o, T] : fm.taps) {
            try {
                norm[o] = divide_exact(T, fm.lambda);
            } catch (const ComputationError&) {
                all_divide = false;
                break;
            }
        }
        if (all_divide) fm.normalized = std::move(norm);
    }
    return fm;
}

}  // namespace fk
