#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fk/alexander.hpp"
#include "fk/qtorus.hpp"

#include <random>

using namespace fk;

namespace {

RationalFunction rf(const LaurentPoly& p) { return RationalFunction(p); }

LaurentPoly tpoly(std::int64_t a, std::int64_t b) {
    return LaurentPoly::monomial("t", 4 * a) * LaurentPoly::monomial("M", 4 * b);
}

}  // namespace

TEST_CASE("commutation rule L M = t^2 M L") {
    auto L = TorusOperator::term(1, rf(LaurentPoly::constant(1)));
    auto M = TorusOperator::term(0, rf(LaurentPoly::variable("M")));
    auto prod = L * M;
    CHECK(prod.coeffs().size() == 1);
    CHECK(prod.coeff(1) == rf(tpoly(2, 1)));
}

TEST_CASE("M-free operators commute") {
    auto L = TorusOperator::term(1, rf(LaurentPoly::constant(1)));
    auto one = TorusOperator::identity();
    auto lm1 = L - one;
    auto sq = lm1 * lm1;
    CHECK(sq.coeff(2) == rf(LaurentPoly::constant(1)));
    CHECK(sq.coeff(1) == rf(LaurentPoly::constant(-2)));
    CHECK(sq.coeff(0) == rf(LaurentPoly::constant(1)));
}

TEST_CASE("M L M L = t^2 M^2 L^2") {
    auto L = TorusOperator::term(1, rf(LaurentPoly::constant(1)));
    auto M = TorusOperator::term(0, rf(LaurentPoly::variable("M")));
    auto prod = M * L * M * L;
    CHECK(prod.coeffs().size() == 1);
    CHECK(prod.coeff(2) == rf(tpoly(2, 2)));
}

TEST_CASE("noncommutative associativity on random small operators") {
    std::mt19937 rng(77231u);
    std::uniform_int_distribution<int> deg(-1, 2), texp(-2, 2), mexp(-1, 2), coef(-3, 3);
    auto rand_op = [&] {
        TorusOperator op;
        for (int k = 0; k < 2; ++k) {
            LaurentPoly p = LaurentPoly::constant(coef(rng)) * tpoly(texp(rng), mexp(rng));
            op.set(deg(rng), op.coeff(0).is_zero() ? rf(p) : rf(p));
        }
        return op;
    };
    for (int i = 0; i < 60; ++i) {
        auto A = rand_op(), B = rand_op(), C = rand_op();
        CHECK((A * B) * C == A * (B * C));
    }
}

TEST_CASE("annihilator bundle structure and oracle") {
    auto res = resolve_ahat(9, 2);
    INFO("printed variant passes: ", res.printed_passes,
         ", deduplicated variant passes: ", res.dedup_passes);
    CHECK((res.printed_passes || res.dedup_passes));
    const auto& A = res.bundle;

    CHECK(A.Q.max_degree().value() == 2);
    CHECK(A.Q.min_degree().value() == 0);
    CHECK(A.ahat.max_degree().value() == 4);
    CHECK(A.ahat.min_degree().value() == 0);
    CHECK_FALSE(A.cleared[4].is_zero());

    // the central oracle at moderate colors (full window in the acceptance run)
    for (int n = 3; n <= 4; ++n) CHECK(annihilates(A, n));

    CHECK_THROWS_WITH_AS(build_ahat(8, P1Variant::kDeduplicated),
                         doctest::Contains("InvalidCableParam"), ComputationError);
}

TEST_CASE("xq recursion and index-space extraction") {
    auto res = resolve_ahat(9, 2);
    auto rec = to_xq_recursion(res.bundle);

    // unit leading coefficient by construction
    CHECK(RationalFunction(rec.cleared[4], rec.cleared[4]) ==
          RationalFunction(LaurentPoly::constant(1)));
    for (int j = 0; j < 4; ++j) CHECK_FALSE(rec.coeff[static_cast<std::size_t>(j)].den().is_zero());

    auto fm = extract_fm_recursion(rec);
    CHECK(fm.span == 98);
    CHECK(fm.prefactor_matches);
    CHECK_FALSE(fm.normalized.empty());

    // offsets: all even o in [16,80], plus {0,4,8,12} and {82,86,90,94}, plus the top
    std::vector<int> expect = {0, 4, 8, 12};
    for (int o = 16; o <= 80; o += 2) expect.push_back(o);
    for (int o : {82, 86, 90, 94, 98}) expect.push_back(o);
    std::vector<int> got;
    for (const auto& [o, T] : fm.taps) got.push_back(o);
    CHECK(got == expect);
}

TEST_CASE("taps at q=1 annihilate the q->1 coefficients") {
    auto res = resolve_ahat(9, 2);
    auto fm = extract_fm_recursion(to_xq_recursion(res.bundle));
    REQUIRE_FALSE(fm.normalized.empty());

    auto delta = alexander_cable(2, 9, fig8_alexander(), "x");
    auto cm = expansion_coefficients(symmetric_expansion(delta, 151, "x"));
    auto c_at = [&](int m) {
        auto it = cm.find(m);
        return it == cm.end() ? Rational(0) : it->second;
    };

    for (int m = 11; m <= 41; m += 2) {
        Rational acc(0);
        for (const auto& [o, T] : fm.normalized) {
            auto v = T.eval_at_one("q").eval_at_one("w");
            acc += v.constant_value() * c_at(m + o);
        }
        CHECK(acc == 0);
    }
}
