#include "zetaforge/homfly.hpp"

#include <numeric>
#include <string>

#include "zetaforge/error.hpp"
#include "zetaforge/semimodule.hpp"

namespace zetaforge {

HomflyPoly HomflyPoly::term(const Rational& c, int a_exp, int var_exp) {
  HomflyPoly p;
  if (c != 0) p.terms_.emplace(Key{a_exp, var_exp}, c);
  return p;
}

std::vector<int> HomflyPoly::a_support() const {
  std::vector<int> out;
  for (const auto& [key, c] : terms_) {
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  }
  return out;
}

LaurentSeries HomflyPoly::a_coefficient(int a_exp) const {
  LaurentSeries out;
  for (const auto& [key, c] : terms_) {
    if (key.first == a_exp) out += LaurentSeries::monomial(c, key.second);
  }
  return out;
}

Rational HomflyPoly::eval(const Rational& a, const Rational& v) const {
  auto ipow = [](const Rational& x, int e) {
    Rational out(1);
    const Rational base = e >= 0 ? x : Rational(1) / x;
    for (int i = 0; i < std::abs(e); ++i) out *= base;
    return out;
  };
  Rational acc(0);
  for (const auto& [key, c] : terms_) acc += c * ipow(a, key.first) * ipow(v, key.second);
  return acc;
}

HomflyPoly& HomflyPoly::operator+=(const HomflyPoly& o) {
  for (const auto& [key, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

HomflyPoly operator*(const HomflyPoly& x, const HomflyPoly& y) {
  HomflyPoly out;
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      out += HomflyPoly::term(cx * cy, kx.first + ky.first, kx.second + ky.second);
    }
  }
  return out;
}

HomflyPoly torus2_homfly_skein(std::uint32_t n) {
  if (n == 0 || n % 2 == 0) {
    throw Error(ErrorCode::InvalidInput, "T(2," + std::to_string(n) + ") is not a knot; n must be odd and positive");
  }
  // Closures of σ^k: k = 0 is the two-component unlink, (a − a⁻¹)/z.
  HomflyPoly prev = HomflyPoly::term(1, 1, -1) + HomflyPoly::term(-1, -1, -1);
  HomflyPoly cur = HomflyPoly::term(1, 0, 0);
  const HomflyPoly a_inv2 = HomflyPoly::term(1, -2, 0);
  const HomflyPoly a_inv_z = HomflyPoly::term(1, -1, 1);
  for (std::uint32_t k = 2; k <= n; ++k) {
    HomflyPoly next = a_inv2 * prev + a_inv_z * cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  // Mirror: a ↦ a⁻¹, z ↦ −z.
  HomflyPoly mirrored;
  for (const auto& [key, c] : cur.terms()) {
    mirrored += HomflyPoly::term(key.second % 2 == 0 ? c : Rational(-c), -key.first, key.second);
  }
  return mirrored;
}

HomflyPoly torus2_homfly(std::uint32_t n) {
  const HomflyPoly skein = torus2_homfly_skein(n);
  HomflyPoly out;
  for (const auto& [key, c] : skein.terms()) {
    const int j = key.second;
    if (j < 0) throw Error(ErrorCode::InvalidInput, "negative skein power in a knot polynomial");
    // (q − q⁻¹)^j = Σ_k C(j,k) (−1)^k q^{j−2k}
    for (int k = 0; k <= j; ++k) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(k));
      const Rational coeff = c * Rational(k % 2 == 0 ? b : Integer(-b));
      out += HomflyPoly::term(coeff, key.first, j - 2 * k);
    }
  }
  return out;
}

RationalFn predicted_bottom_row(const NumericalSemigroup& s) {
  if (s.generators().size() != 2) {
    throw Error(ErrorCode::InvalidInput, "bottom-row prediction needs a two-generator semigroup ⟨p,q⟩ with p,q >= 2, got " +
                                             s.to_string());
  }
  return igen(s, s.conductor() + 1).normal_form.substitute_power(2);
}

RationalFn computed_bottom_row(std::uint32_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidInput, "T(2,1) is the unknot; the bottom row needs d >= 1");
  const int mu = static_cast<int>(2 * d);
  const HomflyPoly p = torus2_homfly(2 * d + 1);
  // Coefficient of a^{μ−1} in P·(a − a⁻¹).
  const LaurentSeries row = p.a_coefficient(mu - 2) - p.a_coefficient(mu);
  const LaurentSeries q_minus_inv = LaurentSeries::exact(-1, {Rational(-1), Rational(0), Rational(1)});
  return RationalFn::from_laurent(row.shift(mu - 1), q_minus_inv);
}

bool compare_bottom_row(std::uint32_t d) {
  return computed_bottom_row(d) == predicted_bottom_row(NumericalSemigroup::make({2, 2 * d + 1}));
}

HomflyCheck homfly_check(std::uint32_t p, std::uint32_t q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) {
    throw Error(ErrorCode::InvalidInput, "torus knot T(p,q) needs coprime p,q >= 2");
  }
  HomflyCheck out{(p - 1) * (q - 1), predicted_bottom_row(NumericalSemigroup::make({p, q})), std::nullopt,
                  std::nullopt};
  if (p == 2 || q == 2) {
    const std::uint32_t d = (p == 2 ? q : p) / 2;
    out.computed = computed_bottom_row(d);
    out.match = *out.computed == out.predicted;
  }
  return out;
}

}  // namespace zetaforge
