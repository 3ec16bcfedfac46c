#pragma once

#include "fk/numeric.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fk {

// Sparse Laurent polynomial over Rational, exponents on the quarter-integer
// lattice (1/4)Z.  Exponents are stored as 64-bit numerators of quarters, so
// x^{m/2} has numerator 2m and t = q^{1/4} has numerator 1 in q.  The zero
// polynomial is the empty term map; no stored coefficient is ever zero, and
// term iteration is ordered, so structural equality is semantic equality and
// printed/serialized output is canonical.
class LaurentPoly {
public:
    using ExpVec = std::vector<std::int64_t>;
    using TermMap = std::map<ExpVec, Rational>;

    LaurentPoly() = default;

    static LaurentPoly constant(const Rational& c);
    // var^(exp_quarters/4) with coefficient c
    static LaurentPoly monomial(const std::string& var, std::int64_t exp_quarters,
                                const Rational& c = Rational(1));
    static LaurentPoly variable(const std::string& var);
    // Univariate helper: integer exponent/coefficient pairs.
    static LaurentPoly from_terms(const std::string& var,
                                  std::initializer_list<std::pair<std::int64_t, Rational>> terms);
    // Same, exponents given in quarter-lattice numerators.
    static LaurentPoly from_terms_quarters(const std::string& var,
                                           std::initializer_list<std::pair<std::int64_t, Rational>> terms);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool is_constant() const;
    // Constant value; fails unless the polynomial is constant.
    Rational constant_value() const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

    // p^e for e >= 0.
    LaurentPoly pow(unsigned e) const;

    // Index of a variable in vars(), if present.
    std::optional<std::size_t> var_index(const std::string& var) const;
    bool depends_on(const std::string& var) const;

    // Degree bounds in quarter numerators; nullopt on the zero polynomial.
    std::optional<std::int64_t> degree_quarters(const std::string& var) const;
    std::optional<std::int64_t> low_degree_quarters(const std::string& var) const;

    // Coefficient of var^(exp_quarters/4) as a polynomial in the remaining variables.
    LaurentPoly coefficient(const std::string& var, std::int64_t exp_quarters) const;
    // All slices along one variable: quarter exponent -> coefficient polynomial.
    std::map<std::int64_t, LaurentPoly> slices(const std::string& var) const;

    // var -> 1 (every exponent collapses).
    LaurentPoly eval_at_one(const std::string& var) const;
    // var -> 1/var.
    LaurentPoly mirror(const std::string& var) const;

    // Extend/reorder the variable list (superset of the current one).
    LaurentPoly embedded(const std::vector<std::string>& target_vars) const;
    // Drop variables no term uses.
    LaurentPoly pruned() const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void add_term(const ExpVec& e, const Rational& c);
    friend LaurentPoly mul_impl(const LaurentPoly& a, const LaurentPoly& b);
    friend void unify(LaurentPoly& a, LaurentPoly& b);
    friend LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly substitute(const LaurentPoly& p, const std::string& var,
                                  const LaurentPoly& value);
};

// Canonical variable precedence (q, t, x, M, w, n, then lexicographic).
int var_rank(const std::string& v);
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

// Exact division in the Laurent ring; throws NotDivisible if b does not
// divide a (every division in this artifact is exact by construction, so a
// failure signals a pipeline bug upstream).
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Substitution homomorphism var -> value.  A single-term value (monomial) may
// carry arbitrary lattice exponents as long as the image stays on the lattice;
// a general value requires every exponent of var to be a nonnegative integer
// (NegativePowerOfSum otherwise).
LaurentPoly substitute(const LaurentPoly& p, const std::string& var, const LaurentPoly& value);

// p(var) == p(1/var)
bool is_palindromic(const LaurentPoly& p, const std::string& var);
// p(var) == -p(1/var)
bool is_antisymmetric(const LaurentPoly& p, const std::string& var);

// All coefficients integers / all exponents of var integers.
bool has_integer_coefficients(const LaurentPoly& p);
bool has_integer_exponents(const LaurentPoly& p, const std::string& var);

std::string exponent_str(std::int64_t quarters);

}  // namespace fk
