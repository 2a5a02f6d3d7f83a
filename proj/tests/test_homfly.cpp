#include <doctest.h>

#include "zetaforge/homfly.hpp"
#include "zetaforge/semigroup.hpp"

using namespace zetaforge;

namespace {

HomflyPoly t(long c, int a, int v) { return HomflyPoly::term(Rational(c), a, v); }

}  // namespace

TEST_CASE("trefoil from the skein tree") {
  // 2a² − a⁴ + a²z² with z the skein variable
  CHECK(torus2_homfly_skein(3) == t(2, 2, 0) + t(-1, 4, 0) + t(1, 2, 2));
  // z² = q² − 2 + q⁻²
  CHECK(torus2_homfly(3) == t(-1, 4, 0) + t(1, 2, 2) + t(1, 2, -2));
  CHECK(torus2_homfly(1) == t(1, 0, 0));
  CHECK_THROWS_AS(torus2_homfly(4), Error);
  CHECK_THROWS_AS(torus2_homfly(0), Error);
}

TEST_CASE("trefoil bottom row") {
  const auto row = computed_bottom_row(1);
  CHECK(row == RationalFn(IntPoly{1, 0, 0, 0, 1}, IntPoly{1, 0, -1}));
  CHECK(predicted_bottom_row(NumericalSemigroup::make({2, 3})) == row);
  CHECK(predicted_bottom_row(NumericalSemigroup::make({2, 5})) ==
        RationalFn(IntPoly{1, 0, 0, 0, 1, 0, 0, 0, 1}, IntPoly{1, 0, -1}));
  CHECK_THROWS_AS(predicted_bottom_row(NumericalSemigroup::make({3, 4, 5})), Error);
}

TEST_CASE("bottom rows of T(2, 2d+1)") {
  for (std::uint32_t d = 1; d <= 8; ++d) {
    CAPTURE(d);
    CHECK(compare_bottom_row(d));
  }
}

TEST_CASE("torus checks") {
  const auto e6 = homfly_check(3, 4);
  CHECK(e6.mu == 6);
  CHECK_FALSE(e6.computed.has_value());
  CHECK_FALSE(e6.match.has_value());
  const auto a6 = homfly_check(7, 2);
  CHECK(a6.mu == 6);
  REQUIRE(a6.match.has_value());
  CHECK(*a6.match);
  CHECK_THROWS_AS(homfly_check(2, 4), Error);
  CHECK_THROWS_AS(homfly_check(1, 3), Error);
}

TEST_CASE("structural properties of the recursion") {
  for (std::uint32_t n = 1; n <= 17; n += 2) {
    CAPTURE(n);
    const auto p = torus2_homfly(n);
    CHECK(p.eval(Rational(1), Rational(1)) == 1);
    for (int a : p.a_support()) {
      const int k = static_cast<int>(n);
      CHECK((a == k - 1 || a == k + 1 || a == k + 3));
    }
    CHECK(torus2_homfly_skein(n).eval(Rational(1), Rational(0)) == 1);
  }
}
