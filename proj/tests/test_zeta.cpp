#include <doctest.h>

#include "support.hpp"
#include "zetaforge/semimodule.hpp"
#include "zetaforge/zeta.hpp"

using namespace zetaforge;

namespace {

BiPoly bi(std::vector<std::vector<long>> rows) {
  std::vector<LPoly> out;
  for (const auto& r : rows) {
    std::vector<Integer> cs(r.begin(), r.end());
    out.emplace_back(std::move(cs));
  }
  return BiPoly(std::move(out));
}

}  // namespace

TEST_CASE("closed forms") {
  const auto a1 = zeta_closed_form(SingularityType::a1());
  CHECK(a1.numerator == bi({{1}, {-1}, {0, 1}}));
  CHECK(a1.branch_exponent == 2);
  const auto a6 = zeta_closed_form(SingularityType::a2d(3));
  CHECK(a6.numerator == bi({{1}, {}, {0, 1}, {}, {0, 0, 1}, {}, {0, 0, 0, 1}}));
  CHECK(a6.branch_exponent == 1);
  const auto e6 = zeta_closed_form(SingularityType::e6());
  CHECK(e6.numerator == bi({{1}, {}, {0, 1}, {0, 0, 1}, {0, 0, 1}, {}, {0, 0, 0, 1}}));
}

TEST_CASE("singularity type parsing and invariants") {
  CHECK(SingularityType::parse("a2d(3)") == SingularityType::a2d(3));
  CHECK(SingularityType::parse("A6") == SingularityType::a2d(3));
  CHECK(SingularityType::parse("e8") == SingularityType::e8());
  CHECK_THROWS_AS(SingularityType::parse("A3"), Error);
  CHECK_THROWS_AS(SingularityType::parse("D4"), Error);
  CHECK_THROWS_AS(SingularityType::parse("A2d(0)"), Error);
  CHECK(SingularityType::e6().delta() == 3);
  CHECK(SingularityType::e8().milnor() == 8);
  CHECK(SingularityType::a1().milnor() == 1);
  CHECK(SingularityType::a2d(4).conductor() == 8);
  CHECK_FALSE(SingularityType::a1().semigroup().has_value());
  CHECK(*SingularityType::e8().semigroup() == NumericalSemigroup::make({3, 5}));
  CHECK(SingularityType::a2d(2).tag() == "A2d(2)");
}

TEST_CASE("classes from the cell tables") {
  const auto e6 = class_series(zeta_closed_form(SingularityType::e6()), 12);
  const auto& t2 = testing_support::table_e6_cells();
  for (std::size_t l = 0; l < t2.size(); ++l) CHECK(e6[l] == testing_support::cells_class(t2[l]));
  const auto e8 = class_series(zeta_closed_form(SingularityType::e8()), 12);
  const auto& t4 = testing_support::table_e8_cells();
  for (std::size_t l = 0; l < t4.size(); ++l) CHECK(e8[l] == testing_support::cells_class(t4[l]));
  CHECK(e8[5] == LPoly{1, 1, 2, 1});
  const auto a1 = class_series(zeta_closed_form(SingularityType::a1()), 6);
  CHECK(a1[4] == LPoly{1, 3});
  CHECK(a1[0] == LPoly{1});
}

TEST_CASE("Euler series") {
  const auto e6 = euler_series(zeta_closed_form(SingularityType::e6()), 9);
  CHECK(e6 == testing_support::to_series(testing_support::naive_from({1, 1, 2, 3, 4, 4, 5, 5, 5})));
  const auto a1 = euler_series(zeta_closed_form(SingularityType::a1()), 6);
  CHECK(a1 == testing_support::to_series(testing_support::naive_from({1, 1, 2, 3, 4, 5})));
  const auto a2d = euler_series(zeta_closed_form(SingularityType::a2d(3)), 12);
  CHECK(a2d == testing_support::to_series(testing_support::naive_from({1, 1, 2, 2, 3, 3, 4, 4, 4, 4, 4, 4})));
}

TEST_CASE("Euler series equals the semimodule series") {
  CHECK(check_theorem_main4(SingularityType::e6(), 20));
  CHECK(check_theorem_main4(SingularityType::e8(), 20));
  CHECK(check_theorem_main4(SingularityType::a2d(5), 20));
  CHECK_THROWS_AS(check_theorem_main4(SingularityType::a1(), 20), Error);
}

TEST_CASE("property: structure of the closed forms") {
  std::vector<SingularityType> types = {SingularityType::e6(), SingularityType::e8()};
  for (std::uint32_t d = 1; d <= 10; ++d) types.push_back(SingularityType::a2d(d));
  for (const auto& t : types) {
    CAPTURE(t.tag());
    const auto z = zeta_closed_form(t);
    CHECK(z.numerator.t_degree() == static_cast<long>(t.conductor()));
    CHECK(t.conductor() == 2 * t.delta());
    CHECK(t.conductor() == t.milnor());
    CHECK(z.numerator.coeff(0) == LPoly{1});
    const std::uint32_t c = t.conductor();
    const auto classes = class_series(z, c + 12);
    for (std::uint32_t l = 0; l < classes.size(); ++l) {
      for (const auto& k : classes[l].coeffs()) CHECK(k >= 0);
      if (l >= c) CHECK(classes[l] == classes[c]);
    }
    if (t.family() == SingularityFamily::A2d) {
      const auto e = euler_series(z, 2 * c + 4);
      for (long s = 0; 2 * s + 1 < 2 * static_cast<long>(c) + 4; ++s) CHECK(e.coeff(2 * s) == e.coeff(2 * s + 1));
      // A2d oracle: [C^[l]] = 1 + L + ... + L^min(⌊l/2⌋, d)
      for (std::uint32_t l = 0; l < classes.size(); ++l) {
        LPoly expect;
        for (std::uint32_t i = 0; i <= std::min(l / 2, t.d()); ++i) expect += LPoly::monomial(Integer(1), i);
        CHECK(classes[l] == expect);
      }
    }
  }
}
