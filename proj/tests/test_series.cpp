#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fk/series.hpp"

using namespace fk;

TEST_CASE("geometric inverse at zero") {
    auto d = LaurentPoly::from_terms("x", {{0, 1}, {1, -1}});  // 1 - x
    auto inv = series_inverse(d, "x", ExpandAt::kZero, 4);
    CHECK(inv == LaurentPoly::from_terms("x", {{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
}

TEST_CASE("geometric inverse at infinity") {
    auto d = LaurentPoly::from_terms("x", {{0, 1}, {1, -1}});  // 1 - x
    auto inv = series_inverse(d, "x", ExpandAt::kInfinity, 3);
    CHECK(inv == LaurentPoly::from_terms("x", {{-1, -1}, {-2, -1}, {-3, -1}}));
}

TEST_CASE("zero polynomial is rejected") {
    CHECK_THROWS_WITH_AS(series_inverse(LaurentPoly(), "x", ExpandAt::kZero, 3),
                         doctest::Contains("ZeroPolynomial"), ComputationError);
}

TEST_CASE("series inverse round trip") {
    auto d = LaurentPoly::from_terms("x", {{-2, 3}, {0, -1}, {1, 2}, {3, 5}});
    for (auto dir : {ExpandAt::kZero, ExpandAt::kInfinity}) {
        auto inv = series_inverse(d, "x", dir, 30);
        auto prod = inv * d;
        // 1 + O(x^{+-30}) relative to the constant term
        auto tail = prod - LaurentPoly::constant(1);
        for (const auto& [e, c] : tail.terms()) {
            if (dir == ExpandAt::kZero)
                CHECK(e[0] >= 30 * 4 - 5 * 4);  // inside the dropped window
            else
                CHECK(e[0] <= -(30 * 4 - 5 * 4));
        }
    }
}
