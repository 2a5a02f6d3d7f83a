#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zetaforge/polyalg.hpp"
#include "zetaforge/semigroup.hpp"

namespace zetaforge {

/// Sparse Laurent polynomial in a and one more variable (q for finished
/// HOMFLY polynomials, the skein variable z during the recursion).
class HomflyPoly {
 public:
  using Key = std::pair<int, int>;  // (exponent of a, exponent of second variable)

  HomflyPoly() = default;
  static HomflyPoly term(const Rational& c, int a_exp, int var_exp);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Distinct a-exponents, ascending.
  std::vector<int> a_support() const;

  /// Coefficient of a^a_exp as an exact Laurent polynomial in the second variable.
  LaurentSeries a_coefficient(int a_exp) const;

  Rational eval(const Rational& a, const Rational& v) const;

  HomflyPoly& operator+=(const HomflyPoly& o);
  friend HomflyPoly operator+(HomflyPoly x, const HomflyPoly& y) { return x += y; }
  friend HomflyPoly operator*(const HomflyPoly& x, const HomflyPoly& y);
  friend bool operator==(const HomflyPoly& x, const HomflyPoly& y) = default;

 private:
  std::map<Key, Rational> terms_;
};

/// Normalized HOMFLY polynomial of the torus knot T(2, n), n odd, in (a, q),
/// with the skein convention a·P(L₊) − a⁻¹·P(L₋) = (q − q⁻¹)·P(L₀), unknot = 1,
/// mirrored (a ↦ a⁻¹, q − q⁻¹ ↦ −(q − q⁻¹)) so the a-powers are positive.
/// Throws InvalidInput for even or non-positive n.
HomflyPoly torus2_homfly(std::uint32_t n);

/// Same as torus2_homfly but left in the skein variable z = q − q⁻¹.
HomflyPoly torus2_homfly_skein(std::uint32_t n);

/// I(Γ;q²) = f(q²)/(1 − q²). Throws InvalidInput unless Γ has exactly two
/// minimal generators.
RationalFn predicted_bottom_row(const NumericalSemigroup& s);

/// q^{μ−1} times the coefficient of a^{μ−1} in P(T(2,2d+1))·(a − a⁻¹)/(q − q⁻¹).
RationalFn computed_bottom_row(std::uint32_t d);

bool compare_bottom_row(std::uint32_t d);

struct HomflyCheck {
  std::uint32_t mu = 0;
  RationalFn predicted;
  std::optional<RationalFn> computed;  // only for T(2, n)
  std::optional<bool> match;
};

/// Bottom-row check for the torus knot T(p, q) (coprime, both >= 2).
HomflyCheck homfly_check(std::uint32_t p, std::uint32_t q);

}  // namespace zetaforge
