#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fk/hbar.hpp"
#include "fk/jones.hpp"

using namespace fk;

namespace {

// 9-term normalized value at color 2.
LaurentPoly golden_jk2() {
    return LaurentPoly::from_terms("q", {{2, 1},
                                         {1, -1},
                                         {-4, 1},
                                         {-6, 1},
                                         {-7, -1},
                                         {-8, 1},
                                         {-9, -1},
                                         {-12, 1},
                                         {-13, -1}});
}

// Normalized value at color 3, q^12 down to q^-35.
LaurentPoly golden_jk3() {
    return LaurentPoly::from_terms(
        "q",
        {{12, 1},  {11, -1}, {10, -1}, {9, 1},   {8, -1},  {7, 1},   {6, 1},   {5, -1},
         {2, 1},   {0, -1},  {-8, 1},  {-11, 1}, {-13, -1}, {-14, 1}, {-16, -1}, {-17, 1},
         {-18, -1}, {-19, -1}, {-20, 2}, {-21, -1}, {-23, 1}, {-24, -1}, {-25, 1}, {-26, 1},
         {-27, -2}, {-28, -1}, {-29, 1}, {-30, -1}, {-32, 2}, {-33, -1}, {-34, -1}, {-35, 1}});
}

}  // namespace

TEST_CASE("unknot colored Jones") {
    CHECK(unknot_jones(1) == LaurentPoly::constant(1));
    CHECK(unknot_jones(2) == LaurentPoly::from_terms("t", {{2, 1}, {-2, 1}}));
    // oracle: exact division definition
    for (int n = 1; n <= 6; ++n) {
        auto num = LaurentPoly::from_terms("t", {{2 * n, 1}, {-2 * n, -1}});
        auto den = LaurentPoly::from_terms("t", {{2, 1}, {-2, -1}});
        CHECK(unknot_jones(n) == divide_exact(num, den));
    }
    CHECK(unknot_jones(3) == LaurentPoly::from_terms("t", {{4, 1}, {0, 1}, {-4, 1}}));
    CHECK_THROWS_WITH_AS(unknot_jones(0), doctest::Contains("InvalidColor"), ComputationError);
}

TEST_CASE("figure-eight values from the product-sum") {
    CHECK(fig8_jones_unnorm(1) == LaurentPoly::constant(1));

    // color 3, normalized by [3]: direct evaluation of the product-sum
    auto normalized = divide_exact(fig8_jones_unnorm(3), quantum_integer_q(3));
    auto expect = LaurentPoly::from_terms("q", {{6, 1},
                                                {5, -1},
                                                {4, -1},
                                                {3, 2},
                                                {2, -1},
                                                {1, -1},
                                                {0, 3},
                                                {-1, -1},
                                                {-2, -1},
                                                {-3, 2},
                                                {-4, -1},
                                                {-5, -1},
                                                {-6, 1}});
    CHECK(normalized == expect);
    CHECK(is_palindromic(normalized, "q"));

    // color 2 satisfies the degree bound at order 2 once expanded
    auto n2 = divide_exact(fig8_jones_unnorm(2), quantum_integer_q(2));
    auto s = hbar_expand(n2, "q", 2);
    CHECK(s[0] == LaurentPoly::constant(1));
    CHECK(s[1].is_zero());
}

TEST_CASE("cable parameter domain") {
    CHECK_THROWS_WITH_AS(cable_jones_unnorm(8, 2), doctest::Contains("InvalidCableParam"),
                         ComputationError);
    CHECK_THROWS_WITH_AS(cable_jones_unnorm(7, 2), doctest::Contains("InvalidCableParam"),
                         ComputationError);
    CHECK(cable_jones_unnorm(9, 1) == LaurentPoly::constant(1));
    CHECK(cable_jones_normalized(9, 1) == LaurentPoly::constant(1));
}

TEST_CASE("normalized cable Jones at colors 2 and 3 match the goldens") {
    CHECK(cable_jones_normalized(9, 2) == golden_jk2());
    CHECK(cable_jones_normalized(9, 3) == golden_jk3());
}

TEST_CASE("normalized cable Jones is integral") {
    for (int n = 1; n <= 6; ++n) {
        auto j = cable_jones_normalized(9, n);
        CHECK(has_integer_coefficients(j));
        CHECK(has_integer_exponents(j, "q"));
        CHECK(j.eval_at_one("q").constant_value() == 1);
    }
}

TEST_CASE("hbar expansion of the color-2 value") {
    auto s = hbar_expand(golden_jk2(), "q", 3);
    CHECK(s[0] == LaurentPoly::constant(1));
    CHECK(s[1].is_zero());
    CHECK(s[2] == LaurentPoly::constant(-18));
    CHECK(s[3] == LaurentPoly::constant(126));
}

TEST_CASE("MMR fit reproduces the reference polynomial rows") {
    auto fit = mmr_fit(9, 8);
    auto n2 = LaurentPoly::monomial("n", 8);
    auto n4 = LaurentPoly::monomial("n", 16);
    auto n6 = LaurentPoly::monomial("n", 24);
    auto n8 = LaurentPoly::monomial("n", 32);
    auto c = [](const Rational& r) { return LaurentPoly::constant(r); };

    CHECK(fit.rows[0] == c(1));
    CHECK(fit.rows[1].is_zero());
    CHECK(fit.rows[2] == c(6) - c(6) * n2);
    CHECK(fit.rows[3] == c(-42) + c(42) * n2);
    CHECK(fit.rows[4] == c(Rational(801, 2)) - c(462) * n2 + c(Rational(123, 2)) * n4);
    CHECK(fit.rows[5] == c(Rational(-8451, 2)) + c(5173) * n2 - c(Rational(1895, 2)) * n4);
    CHECK(fit.rows[6] == c(Rational(3111491, 60)) - c(Rational(132779, 2)) * n2 + c(14986) * n4 -
                             c(Rational(27281, 60)) * n6);
    CHECK(fit.rows[7] == c(Rational(-14631401, 20)) + c(Rational(19399417, 20)) * n2 -
                             c(Rational(3028829, 12)) * n4 + c(Rational(840097, 60)) * n6);
    CHECK(fit.rows[8] == c(Rational(39069313501, 3360)) - c(Rational(950122877, 60)) * n2 +
                             c(Rational(54585517, 12)) * n4 - c(Rational(1725671, 5)) * n6 +
                             c(Rational(13273763, 3360)) * n8);
}

TEST_CASE("MMR fit structural invariants") {
    auto fit = mmr_fit(9, 8);
    for (int r = 0; r <= 8; ++r) {
        const auto& row = fit.rows[static_cast<std::size_t>(r)];
        // only even powers of n
        for (const auto& [e, slice] : row.slices("n")) CHECK((e / 4) % 2 == 0);
        // degree bound r, odd rows one lower
        auto deg = row.degree_quarters("n");
        if (deg) {
            CHECK(*deg / 4 <= r);
            if (r % 2 == 1) CHECK(*deg / 4 <= r - 1);
        }
        // vanishing at color 1 for r >= 1
        if (r >= 1) CHECK(eval_fit_row(row, 1) == 0);
    }
}
