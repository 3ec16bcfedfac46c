#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fk/alexander.hpp"
#include "fk/series.hpp"

using namespace fk;

TEST_CASE("trefoil and (2,9) torus Alexander polynomials") {
    CHECK(alexander_torus(2, 3) == LaurentPoly::from_terms("t", {{1, 1}, {0, -1}, {-1, 1}}));
    auto t29 = alexander_torus(2, 9);
    CHECK(t29 == LaurentPoly::from_terms("t", {{4, 1},
                                               {3, -1},
                                               {2, 1},
                                               {1, -1},
                                               {0, 1},
                                               {-1, -1},
                                               {-2, 1},
                                               {-3, -1},
                                               {-4, 1}}));
    CHECK(t29.eval_at_one("t").constant_value() == 1);
    CHECK(is_palindromic(t29, "t"));
    CHECK_THROWS_WITH_AS(alexander_torus(2, 4), doctest::Contains("NotCoprime"),
                         ComputationError);
}

TEST_CASE("cable Alexander polynomial of the (9,2)-cable of the figure eight") {
    auto delta = alexander_cable(2, 9, fig8_alexander(), "x");
    auto expect = LaurentPoly::from_terms("x", {{6, -1},
                                                {5, 1},
                                                {4, 2},
                                                {3, -2},
                                                {2, 1},
                                                {1, -1},
                                                {0, 1},
                                                {-1, -1},
                                                {-2, 1},
                                                {-3, -2},
                                                {-4, 2},
                                                {-5, 1},
                                                {-6, -1}});
    CHECK(delta == expect);
    CHECK(delta.term_count() == 13);
    CHECK(is_palindromic(delta, "x"));
    CHECK(is_monic_alexander(delta, "x"));
    CHECK(delta.eval_at_one("x").constant_value() == 1);
}

TEST_CASE("unknot companion reduces to the torus knot") {
    auto delta = alexander_cable(2, 9, LaurentPoly::constant(1), "t");
    CHECK(delta == alexander_torus(2, 9));
    CHECK_THROWS_WITH_AS(alexander_cable(3, 2, LaurentPoly::constant(1), "t"),
                         doctest::Contains("ConstraintViolated"), ComputationError);
}

TEST_CASE("symmetric expansion of the unknot") {
    // Both directed expansions of a Laurent polynomial are the polynomial
    // itself, so their sum doubles it; no other powers appear.
    auto s = symmetric_expansion(LaurentPoly::constant(1), 9, "x");
    CHECK(s == LaurentPoly::from_terms_quarters("x", {{2, 2}, {-2, -2}}));
    CHECK(is_antisymmetric(s, "x"));
}

TEST_CASE("symmetric expansion of the cable matches the reference coefficients") {
    auto delta = alexander_cable(2, 9, fig8_alexander(), "x");
    auto s = symmetric_expansion(delta, 39, "x");
    CHECK(is_antisymmetric(s, "x"));
    CHECK(has_integer_coefficients(s));

    auto cm = expansion_coefficients(s);
    std::map<std::int64_t, Rational> expect = {{11, 1},  {15, 2},  {19, 5},   {23, 13},
                                               {27, 34}, {29, -1}, {31, 89},  {33, -2},
                                               {35, 233}, {37, -5}, {39, 610}};
    CHECK(cm == expect);
}

TEST_CASE("expansion times Delta recovers the numerator in both directions") {
    auto delta = alexander_cable(2, 9, fig8_alexander(), "x");
    std::int64_t terms = 40;
    auto numerator = LaurentPoly::from_terms_quarters("x", {{2, 1}, {-2, -1}});
    for (auto dir : {ExpandAt::kZero, ExpandAt::kInfinity}) {
        auto directed = numerator * series_inverse(delta, "x", dir, terms);
        auto prod = directed * delta - numerator;
        // residual only beyond the truncation frontier
        for (const auto& [e, c] : prod.terms()) CHECK(std::abs(e[0]) > 4 * (terms - 8));
    }
}

TEST_CASE("non-monic input is reported") {
    auto delta = LaurentPoly::from_terms("x", {{1, 2}, {0, -3}, {-1, 2}});
    CHECK_THROWS_WITH_AS(symmetric_expansion(delta, 9, "x"), doctest::Contains("NonMonic"),
                         ComputationError);
}
