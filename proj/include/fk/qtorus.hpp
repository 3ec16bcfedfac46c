#pragma once

#include "fk/laurent.hpp"
#include "fk/rational_function.hpp"

#include <array>
#include <map>
#include <optional>

namespace fk {

// Element of the quantum torus: a finite sum  sum_j a_j(t,M) L^j  acting on
// color-indexed sequences by (M f)_n = t^{2n} f_n and (L f)_n = f_{n+1}, with
// the commutation rule L a(M) = a(t^2 M) L.
class TorusOperator {
public:
    using CoeffMap = std::map<int, RationalFunction>;

    TorusOperator() = default;
    static TorusOperator term(int j, RationalFunction a);
    static TorusOperator identity();

    const CoeffMap& coeffs() const { return coeffs_; }
    RationalFunction coeff(int j) const;
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;

    void set(int j, RationalFunction a);

    friend TorusOperator operator+(const TorusOperator& A, const TorusOperator& B);
    friend TorusOperator operator-(const TorusOperator& A, const TorusOperator& B);
    // noncommutative product: (a L^i)(b L^j) = a * b(t^{2i} M) L^{i+j}
    friend TorusOperator operator*(const TorusOperator& A, const TorusOperator& B);

    bool operator==(const TorusOperator& o) const;

private:
    CoeffMap coeffs_;
};

// M -> t^{2s} M
LaurentPoly shift_companion(const LaurentPoly& p, int s);
RationalFunction shift_companion(const RationalFunction& p, int s);

// The printed building-block operators; the middle one is displayed with a
// repeated monomial, so both readings are implemented and resolved against
// the annihilation oracle.
enum class P1Variant { kAsPrinted, kDeduplicated };

LaurentPoly phat_poly(int i, P1Variant variant);

// Everything that goes into the degree-4 annihilator of the cable's colored
// Jones sequence, kept both as assembled rational-coefficient operator and as
// a denominator-cleared coefficient family (the form every downstream step
// consumes).
struct AhatBundle {
    int r = 9;
    P1Variant variant = P1Variant::kDeduplicated;
    std::array<LaurentPoly, 3> phat;    // building blocks, in (t, M)
    LaurentPoly b_num;                  // numerator of b(t,M); denominator is t^2 - t^-2
    std::array<LaurentPoly, 3> c;       // c_0, c_1, c_2
    LaurentPoly big_b_num;              // numerator of B(t,M)
    std::array<LaurentPoly, 3> q_coeff; // Q_0, Q_1, Q_2
    TorusOperator Q;                    // Q_2 L^2 + Q_1 L + Q_0
    TorusOperator ahat;                 // (L-1) B^{-1} Q (M^r L + t^{-2r} M^{-r})
    std::array<LaurentPoly, 5> cleared; // common-denominator-free coefficients
};

AhatBundle build_ahat(int r, P1Variant variant);

// Exact check  sum_j cleared_j|_{M=t^{2n}} * Jtilde_{K,n+j}(t) == 0.
bool annihilates(const AhatBundle& bundle, int n);

// Build with the printed reading first; if the oracle rejects it, retry with
// the duplicate removed.  The outcome is recorded, not silently chosen.
struct AhatResolution {
    AhatBundle bundle;
    bool printed_passes = false;
    bool dedup_passes = false;
    int checked_colors = 0;
};
AhatResolution resolve_ahat(int r, int check_colors = 2);

// The recursion in (x,q): cleared coefficients of
//   sum_{j=0}^{4} A_j(x,q) F(x q^j, q) = 0
// plus the unit-leading-coefficient normalization alpha..delta.
struct XqRecursion {
    std::array<LaurentPoly, 5> cleared;     // in (x, q)
    std::array<RationalFunction, 4> coeff;  // alpha, beta, gamma, delta
};

XqRecursion to_xq_recursion(const AhatBundle& bundle);

// Index-space recursion: coefficient T_o(q,w) multiplies f_{m+o} (w = q^{m/2});
// the top tap T_span solves for f_{m+span}.  lambda is the q-only content with
//   T_span = -lambda * q^{109/2} w (1 - q^{87/2} w)
// when the prefactor has the expected shape.
struct FmRecursion {
    int span = 0;
    std::map<int, LaurentPoly> taps;  // offset -> T_o(q,w), including the top
    LaurentPoly lambda;
    bool prefactor_matches = false;
    std::map<int, LaurentPoly> normalized;  // t_v = T_o / lambda where exact
};

FmRecursion extract_fm_recursion(const XqRecursion& rec);

}  // namespace fk
