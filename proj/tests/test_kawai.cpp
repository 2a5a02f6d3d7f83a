#include <doctest.h>

#include "support.hpp"
#include "zetaforge/kawai.hpp"
#include "zetaforge/semimodule.hpp"

using namespace zetaforge;
using namespace testing_support;

namespace {

// Σ χ(C^[l]) q^l from semimodule counts: the local factor of a branch is its
// enumerated series, the node contributes 1, 1, 2, 3, ...
Naive oracle_curve_series(const CurveSpec& c, std::size_t n) {
  long e = 2 * c.geometric_genus() - 2;
  for (const auto& [t, m] : c.singularities) e += static_cast<long>(t.branches() * m);
  Naive acc = e >= 0 ? naive_one_minus(static_cast<unsigned>(e), n) : naive_geometric(static_cast<unsigned>(-e), n);
  for (const auto& [t, m] : c.singularities) {
    Naive local(n);
    if (t.family() == SingularityFamily::A1) {
      for (std::size_t l = 0; l < n; ++l) local[l] = l == 0 ? 1 : static_cast<long>(l);
    } else {
      const auto counts = count_semimodules_upto(*t.semigroup(), static_cast<std::uint32_t>(n));
      for (std::size_t l = 0; l < n; ++l) local[l] = static_cast<unsigned long>(counts[l]);
    }
    for (std::uint32_t k = 0; k < m; ++k) acc = naive_mul(acc, local, n);
  }
  return acc;
}

CurveSpec random_spec(Rng& rng) {
  static const std::vector<SingularityType> pool = {SingularityType::a1(), SingularityType::a2d(1),
                                                    SingularityType::a2d(2), SingularityType::a2d(3),
                                                    SingularityType::e6(), SingularityType::e8()};
  CurveSpec c;
  std::uint32_t delta = 0;
  const long kinds = rng.range(0, 3);
  for (long i = 0; i < kinds; ++i) {
    const auto& t = pool[static_cast<std::size_t>(rng.range(0, 5))];
    const auto m = static_cast<std::uint32_t>(rng.range(1, 2));
    c.singularities[t] += m;
    delta += t.delta() * m;
  }
  c.genus = delta + static_cast<std::uint32_t>(rng.range(0, 3));
  return c;
}

}  // namespace

TEST_CASE("F and G polynomials") {
  CHECK(f_poly(0) == IntPoly{2});
  CHECK(f_poly(1) == IntPoly{0, 1});
  CHECK(f_poly(2) == IntPoly{-2, 0, 1});
  CHECK(g_poly(1) == IntPoly{2});
  CHECK(g_poly(2) == IntPoly{-5, 4});
  CHECK(g_poly(3) == IntPoly{8, -14, 6});
  CHECK(g_poly_e6() == IntPoly{9, -14, 6});
  CHECK(g_poly_e8() == IntPoly{-15, 33, -27, 8});
  CHECK_THROWS_AS(g_poly(0), Error);
}

TEST_CASE("polynomial identities") {
  for (std::uint32_t i = 1; i <= 12; ++i) {
    CAPTURE(i);
    CHECK(verify_w2(i));
    CHECK(verify_f_identity(i));
  }
  CHECK(verify_node_identity());
  CHECK(verify_e6_identity());
  CHECK(verify_e8_identity());
  // 1 + q^2 - (1 - q)^2 = 2q
  CHECK(at_q_plus_inverse(g_poly(1)).shift(1) == LaurentSeries::exact(1, {Rational(2)}));
}

TEST_CASE("property: F parity") {
  for (std::uint32_t i = 0; i <= 12; ++i) {
    const auto f = f_poly(i);
    const auto mirrored = f.compose(IntPoly{0, -1});
    CHECK(mirrored == (i % 2 == 0 ? f : -f));
  }
}

TEST_CASE("curve specs") {
  const auto c = CurveSpec::parse(6, "A1:2, A2d(1), E6");
  CHECK(c.singularities.size() == 3);
  CHECK(c.singularities.at(SingularityType::a1()) == 2);
  CHECK(c.geometric_genus() == 0);
  CHECK(c.default_trunc() == 2 * 6 + 2 * 6 + 10);
  CHECK(CurveSpec::parse(3, "").singularities.empty());
  CHECK_THROWS_AS(CurveSpec::parse(1, "E6"), Error);
  CHECK_THROWS_AS(CurveSpec::parse(4, "E7"), Error);
  CHECK_THROWS_AS(CurveSpec::parse(4, "A1:x"), Error);
  try {
    CurveSpec::parse(1, "E8");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCurveSpec);
  }
}

TEST_CASE("curve series examples") {
  CHECK(curve_euler_series(CurveSpec::parse(0, ""), 5) == to_series(naive_from({1, 2, 3, 4, 5})));
  const auto cusp = CurveSpec::parse(1, "A2d(1)");
  CHECK(curve_euler_series(cusp, 8) == series_from_rational(IntPoly{1, 0, 1}, IntPoly{1, -2, 1}, 8));
  const auto node = CurveSpec::parse(1, "A1");
  CHECK(curve_euler_series(node, 8) == series_from_rational(IntPoly{1, -1, 1}, IntPoly{1, -2, 1}, 8));
}

TEST_CASE("BPS examples") {
  for (std::uint32_t g = 0; g <= 6; ++g) {
    const auto c = CurveSpec::parse(g, "");
    const auto bps = bps_decompose(curve_euler_series(c, 30).shift(1 - static_cast<long>(g)), g, g);
    CHECK(bps == BpsVector{{g, Integer(1)}});
  }
  const auto cusp = CurveSpec::parse(1, "A2d(1)");
  CHECK(bps_decompose(curve_euler_series(cusp, 20), 1, 0) == BpsVector{{0, Integer(2)}, {1, Integer(1)}});
  const auto node = CurveSpec::parse(1, "A1");
  CHECK(bps_decompose(curve_euler_series(node, 20), 1, 0) == BpsVector{{0, Integer(1)}, {1, Integer(1)}});
  CHECK_THROWS_AS(bps_decompose(LaurentSeries::exact(0, {Rational(1, 2)}), 1, 1), Error);
  CHECK_THROWS_AS(bps_decompose(LaurentSeries::exact(0, {Rational(1), Rational(5)}), 1, 1), Error);
}

TEST_CASE("product formula for mixed singularities") {
  const auto c = CurveSpec::parse(12, "A1,A2d(1),A2d(2),E6,E8");
  const long g = c.genus;
  CHECK(agree_through(curve_euler_series(c, 40).shift(1 - g), kawai_product_series(c, 40), 41 - g));
  CHECK(curve_euler_series(c, 40) == to_series(oracle_curve_series(c, 40)));
}

TEST_CASE("original node and cusp formula") {
  for (std::uint32_t m = 0; m <= 3; ++m) {
    for (std::uint32_t n = 0; n <= 3; ++n) {
      for (std::uint32_t g = m + n; g <= 8; ++g) {
        CurveSpec c{g, {}};
        if (m > 0) c.singularities[SingularityType::a1()] = m;
        if (n > 0) c.singularities[SingularityType::a2d(1)] = n;
        CHECK(agree_through(curve_euler_series(c, 40).shift(1 - static_cast<long>(g)),
                            kawai_original_series(g, m, n, 40), 41 - static_cast<long>(g)));
      }
    }
  }
  CHECK_THROWS_AS(kawai_original_series(2, 2, 1, 10), Error);
}

TEST_CASE("property: random curves") {
  Rng rng(0xC0FFEE);
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = random_spec(rng);
    CAPTURE(c.genus);
    const long g = c.genus;
    const std::uint32_t n = 40;
    const auto chi = curve_euler_series(c, n);
    CHECK(chi == to_series(oracle_curve_series(c, n)));
    const auto shifted = chi.shift(1 - g);
    CHECK(agree_through(shifted, kawai_product_series(c, n), n + 1 - g));
    const auto bps = bps_decompose(shifted, c.genus, c.geometric_genus());
    CHECK(bps.begin()->first == c.geometric_genus());
    CHECK(bps.begin()->second != 0);
    CHECK(bps.rbegin()->second == 1);
    CHECK(agree_through(recompose(bps, c.genus, n), shifted, n + 1 - g));
  }
}
