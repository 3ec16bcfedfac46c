#include "fk/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace fk {

int var_rank(const std::string& v) {
    static const std::vector<std::string> order = {"q", "t", "x", "M", "w", "n"};
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == v) return static_cast<int>(i);
    return static_cast<int>(order.size());
}

static bool var_less(const std::string& a, const std::string& b) {
    int ra = var_rank(a), rb = var_rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    std::sort(out.begin(), out.end(), var_less);
    return out;
}

void LaurentPoly::add_term(const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::constant(const Rational& c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(ExpVec{}, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const std::string& var, std::int64_t exp_quarters,
                                  const Rational& c) {
    LaurentPoly p;
    if (c == 0) return p;
    p.vars_ = {var};
    p.terms_.emplace(ExpVec{exp_quarters}, c);
    return p;
}

LaurentPoly LaurentPoly::variable(const std::string& var) { return monomial(var, 4); }

LaurentPoly LaurentPoly::from_terms(const std::string& var,
                                    std::initializer_list<std::pair<std::int64_t, Rational>> terms) {
    LaurentPoly p;
    p.vars_ = {var};
    for (const auto& [e, c] : terms) p.add_term(ExpVec{checked_mul(e, 4)}, c);
    if (p.terms_.empty()) p.vars_.clear();
    return p;
}

LaurentPoly LaurentPoly::from_terms_quarters(
    const std::string& var, std::initializer_list<std::pair<std::int64_t, Rational>> terms) {
    LaurentPoly p;
    p.vars_ = {var};
    for (const auto& [e, c] : terms) p.add_term(ExpVec{e}, c);
    if (p.terms_.empty()) p.vars_.clear();
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

Rational LaurentPoly::constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) fail("NotConstant", "constant_value on non-constant polynomial: " + str());
    return terms_.begin()->second;
}

LaurentPoly LaurentPoly::embedded(const std::vector<std::string>& target_vars) const {
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(target_vars.begin(), target_vars.end(), vars_[i]);
        if (it == target_vars.end())
            fail("VariableMismatch", "embedding target misses variable " + vars_[i]);
        pos[i] = static_cast<std::size_t>(it - target_vars.begin());
    }
    LaurentPoly out;
    out.vars_ = target_vars;
    for (const auto& [e, c] : terms_) {
        ExpVec ne(target_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

LaurentPoly LaurentPoly::pruned() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    std::vector<std::string> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) keep.push_back(vars_[i]);
    if (keep.size() == vars_.size()) return *this;
    LaurentPoly out;
    out.vars_ = keep;
    for (const auto& [e, c] : terms_) {
        ExpVec ne;
        ne.reserve(keep.size());
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

void unify(LaurentPoly& a, LaurentPoly& b) {
    if (a.vars_ == b.vars_) return;
    auto target = merge_vars(a.vars_, b.vars_);
    a = a.embedded(target);
    b = b.embedded(target);
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    LaurentPoly a = this->pruned(), b = o.pruned();
    unify(a, b);
    return a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    LaurentPoly rhs = o;
    unify(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    LaurentPoly rhs = o;
    unify(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly mul_impl(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    out.vars_ = a.vars_;
    const std::size_t nv = a.vars_.size();
    LaurentPoly::ExpVec e(nv);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < nv; ++i) e[i] = checked_add(ea[i], eb[i]);
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    if (a.vars_ == b.vars_) return mul_impl(a, b);
    LaurentPoly x = a, y = b;
    unify(x, y);
    return mul_impl(x, y);
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly acc = LaurentPoly::constant(1);
    LaurentPoly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::optional<std::size_t> LaurentPoly::var_index(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

bool LaurentPoly::depends_on(const std::string& var) const {
    auto idx = var_index(var);
    if (!idx) return false;
    for (const auto& [e, c] : terms_)
        if (e[*idx] != 0) return true;
    return false;
}

std::optional<std::int64_t> LaurentPoly::degree_quarters(const std::string& var) const {
    if (terms_.empty()) return std::nullopt;
    auto idx = var_index(var);
    std::int64_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::int64_t x = idx ? e[*idx] : 0;
        if (first || x > d) d = x;
        first = false;
    }
    return d;
}

std::optional<std::int64_t> LaurentPoly::low_degree_quarters(const std::string& var) const {
    if (terms_.empty()) return std::nullopt;
    auto idx = var_index(var);
    std::int64_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::int64_t x = idx ? e[*idx] : 0;
        if (first || x < d) d = x;
        first = false;
    }
    return d;
}

LaurentPoly LaurentPoly::coefficient(const std::string& var, std::int64_t exp_quarters) const {
    auto idx = var_index(var);
    if (!idx) {
        if (exp_quarters == 0) return *this;
        return LaurentPoly();
    }
    LaurentPoly out;
    out.vars_.reserve(vars_.size() - 1);
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (i != *idx) out.vars_.push_back(vars_[i]);
    for (const auto& [e, c] : terms_) {
        if (e[*idx] != exp_quarters) continue;
        ExpVec ne;
        ne.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != *idx) ne.push_back(e[i]);
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

std::map<std::int64_t, LaurentPoly> LaurentPoly::slices(const std::string& var) const {
    std::map<std::int64_t, LaurentPoly> out;
    auto idx = var_index(var);
    if (!idx) {
        if (!is_zero()) out.emplace(0, *this);
        return out;
    }
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (i != *idx) rest.push_back(vars_[i]);
    for (const auto& [e, c] : terms_) {
        auto& slice = out[e[*idx]];
        if (slice.vars_.empty() && slice.terms_.empty()) slice.vars_ = rest;
        ExpVec ne;
        ne.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != *idx) ne.push_back(e[i]);
        slice.terms_.emplace(std::move(ne), c);
    }
    return out;
}

LaurentPoly LaurentPoly::eval_at_one(const std::string& var) const {
    auto idx = var_index(var);
    if (!idx) return *this;
    LaurentPoly out;
    out.vars_.reserve(vars_.size() - 1);
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (i != *idx) out.vars_.push_back(vars_[i]);
    for (const auto& [e, c] : terms_) {
        ExpVec ne;
        ne.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != *idx) ne.push_back(e[i]);
        out.add_term(ne, c);
    }
    return out;
}

LaurentPoly LaurentPoly::mirror(const std::string& var) const {
    auto idx = var_index(var);
    if (!idx) return *this;
    LaurentPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        ExpVec ne = e;
        ne[*idx] = -ne[*idx];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) fail("ZeroPolynomial", "division by the zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    LaurentPoly num = a, den = b;
    unify(num, den);
    const std::size_t nv = num.vars().size();

    // Laurent monomials are units, so division steps never fail locally; an
    // inexact division instead walks outside the exponent window a true
    // quotient must occupy, which is the abort condition.
    std::vector<std::int64_t> qlo(nv), qhi(nv);
    {
        std::vector<std::int64_t> alo(nv), ahi(nv), blo(nv), bhi(nv);
        bool first = true;
        for (const auto& [e, c] : num.terms()) {
            for (std::size_t i = 0; i < nv; ++i) {
                if (first || e[i] < alo[i]) alo[i] = e[i];
                if (first || e[i] > ahi[i]) ahi[i] = e[i];
            }
            first = false;
        }
        first = true;
        for (const auto& [e, c] : den.terms()) {
            for (std::size_t i = 0; i < nv; ++i) {
                if (first || e[i] < blo[i]) blo[i] = e[i];
                if (first || e[i] > bhi[i]) bhi[i] = e[i];
            }
            first = false;
        }
        for (std::size_t i = 0; i < nv; ++i) {
            qlo[i] = checked_add(alo[i], -bhi[i]);
            qhi[i] = checked_add(ahi[i], -blo[i]);
        }
    }

    const auto& bl = den.terms().rbegin()->first;  // lex-leading divisor term
    const Rational& blc = den.terms().rbegin()->second;

    LaurentPoly quotient;
    quotient = LaurentPoly::constant(0).embedded(num.vars());
    LaurentPoly rem = num;
    LaurentPoly::ExpVec qe(nv);
    while (!rem.is_zero()) {
        const auto& rl = rem.terms().rbegin()->first;
        const Rational& rlc = rem.terms().rbegin()->second;
        for (std::size_t i = 0; i < nv; ++i) {
            qe[i] = checked_add(rl[i], -bl[i]);
            if (qe[i] < qlo[i] || qe[i] > qhi[i])
                fail("NotDivisible", "inexact Laurent division");
        }
        Rational qc = rlc / blc;
        LaurentPoly term;
        term.vars_ = num.vars();
        term.terms_.emplace(qe, qc);
        quotient.add_term(qe, qc);
        rem -= term * den;
    }
    return quotient.pruned();
}

LaurentPoly substitute(const LaurentPoly& p, const std::string& var, const LaurentPoly& value) {
    auto idx = p.var_index(var);
    if (!idx || !p.depends_on(var)) return p.eval_at_one(var).pruned();

    if (value.term_count() == 1 && value.depends_on(var)) {
        // Self-referential monomial (x -> x^2): route through a scratch name.
        const std::string tmp = "_subst";
        auto renamed = substitute(value, var, LaurentPoly::variable(tmp));
        auto image = substitute(p, var, renamed);
        return substitute(image, tmp, LaurentPoly::variable(var));
    }

    if (value.term_count() == 1) {
        // Monomial substitution: exponents scale, so the image must stay on
        // the quarter lattice and non-unit coefficients need integer powers.
        const auto& [me, mc] = *value.terms().begin();
        LaurentPoly out;
        auto rest_vars = merge_vars(p.vars(), value.vars());
        rest_vars.erase(std::remove(rest_vars.begin(), rest_vars.end(), var), rest_vars.end());
        out = LaurentPoly::constant(0).embedded(rest_vars);
        std::vector<std::optional<std::size_t>> vpos(value.vars().size());
        for (std::size_t i = 0; i < value.vars().size(); ++i)
            vpos[i] = out.var_index(value.vars()[i]);
        for (const auto& [e, c] : p.terms()) {
            std::int64_t ve = e[*idx];  // quarters
            Rational coeff = c;
            if (mc != 1) {
                if (ve % 4 != 0)
                    fail("OffLattice", "non-unit coefficient raised to fractional power");
                coeff *= rational_pow(mc, static_cast<long>(ve / 4));
            }
            LaurentPoly::ExpVec ne(rest_vars.size(), 0);
            for (std::size_t i = 0; i < p.vars().size(); ++i) {
                if (i == *idx) continue;
                auto pos = out.var_index(p.vars()[i]);
                ne[*pos] = checked_add(ne[*pos], e[i]);
            }
            for (std::size_t i = 0; i < value.vars().size(); ++i) {
                if (me[i] == 0) continue;
                // exponent product lands on the lattice iff divisible by 4
                std::int64_t prod = checked_mul(ve, me[i]);
                if (prod % 4 != 0) fail("OffLattice", "substitution leaves the quarter lattice");
                ne[*vpos[i]] = checked_add(ne[*vpos[i]], prod / 4);
            }
            out.add_term(ne, coeff);
        }
        return out.pruned();
    }

    // General value: only nonnegative integer powers of var may appear.
    auto parts = p.slices(var);
    for (const auto& [e, slice] : parts)
        if (e < 0 || e % 4 != 0)
            fail("NegativePowerOfSum",
                 "general substitution requires nonnegative integer exponents of " + var);
    LaurentPoly out;
    // Horner over descending integer exponents.
    std::int64_t prev = -1;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        std::int64_t k = it->first / 4;
        if (prev < 0) {
            out = it->second;
        } else {
            out = out * value.pow(static_cast<unsigned>(prev - k)) + it->second;
        }
        prev = k;
    }
    if (prev > 0) out = out * value.pow(static_cast<unsigned>(prev));
    return out.pruned();
}

bool is_palindromic(const LaurentPoly& p, const std::string& var) {
    return p == p.mirror(var);
}

bool is_antisymmetric(const LaurentPoly& p, const std::string& var) {
    return p == -p.mirror(var);
}

bool has_integer_coefficients(const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (!is_integer(c)) return false;
    return true;
}

bool has_integer_exponents(const LaurentPoly& p, const std::string& var) {
    auto idx = p.var_index(var);
    if (!idx) return true;
    for (const auto& [e, c] : p.terms())
        if (e[*idx] % 4 != 0) return false;
    return true;
}

std::string exponent_str(std::int64_t quarters) {
    std::ostringstream os;
    if (quarters % 4 == 0)
        os << quarters / 4;
    else if (quarters % 2 == 0)
        os << "(" << quarters / 2 << "/2)";
    else
        os << "(" << quarters << "/4)";
    return os.str();
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_var = false;
        std::ostringstream vs;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) vs << "*";
            vs << vars_[i];
            if (e[i] != 4) vs << "^" << exponent_str(e[i]);
            any_var = true;
        }
        if (!any_var) {
            os << to_string(ac);
        } else {
            if (ac != 1) os << to_string(ac) << "*";
            os << vs.str();
        }
    }
    return os.str();
}

}  // namespace fk
