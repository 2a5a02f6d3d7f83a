#pragma once

// Exact polynomial and truncated-series arithmetic over GMP integers and
// rationals. Everything is dense: the objects in this library have small
// degree, and dense vectors keep the arithmetic obvious.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "zetaforge/error.hpp"

namespace zetaforge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial; coeffs()[i] is the coefficient of x^i.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
template <class Coeff>
class DensePoly {
 public:
  DensePoly() = default;
  DensePoly(std::initializer_list<Coeff> cs) : coeffs_(cs) { trim(); }
  explicit DensePoly(std::vector<Coeff> cs) : coeffs_(std::move(cs)) { trim(); }

  static DensePoly constant(const Coeff& c) { return DensePoly({c}); }

  static DensePoly monomial(const Coeff& c, std::size_t exp) {
    std::vector<Coeff> cs(exp + 1, Coeff(0));
    cs[exp] = c;
    return DensePoly(std::move(cs));
  }

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const Coeff> coeffs() const { return coeffs_; }

  Coeff coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Coeff(0);
  }

  const Coeff& leading() const { return coeffs_.back(); }

  Coeff eval(const Coeff& x) const {
    Coeff acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  /// p(inner(x)) by Horner's rule.
  DensePoly compose(const DensePoly& inner) const {
    DensePoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * inner + constant(*it);
    }
    return acc;
  }

  /// x -> x^k.
  DensePoly substitute_power(unsigned k) const {
    if (k == 0) throw Error(ErrorCode::InvalidInput, "substitution power must be >= 1");
    if (is_zero()) return {};
    std::vector<Coeff> cs(static_cast<std::size_t>(degree()) * k + 1, Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i * k] = coeffs_[i];
    return DensePoly(std::move(cs));
  }

  DensePoly pow(unsigned n) const {
    DensePoly result = constant(Coeff(1));
    DensePoly base = *this;
    while (n != 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n != 0) base *= base;
    }
    return result;
  }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  DensePoly& operator-=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  DensePoly& operator*=(const DensePoly& o) {
    *this = *this * o;
    return *this;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }

  friend DensePoly operator-(DensePoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return DensePoly(std::move(out));
  }

  friend DensePoly operator*(const Coeff& s, DensePoly a) {
    for (auto& c : a.coeffs_) c *= s;
    a.trim();
    return a;
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPoly = DensePoly<Integer>;
/// Same shape as IntPoly; the variable is the class of the affine line.
using LPoly = IntPoly;
using RatPoly = DensePoly<Rational>;

RatPoly to_rational(const IntPoly& p);

/// Exact quotient a / b over the integers. Throws NotDivisible when the
/// remainder is nonzero or a quotient coefficient is not integral.
IntPoly divexact(const IntPoly& a, const IntPoly& b);

/// Quotient and remainder over the rationals.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd over the rationals (zero if both are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

Rational eval_at(const LPoly& p, const Rational& v);

/// Polynomial in t whose coefficients are polynomials in the class L.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<LPoly> coeffs);

  /// c * L^l_exp * t^t_exp
  static BiPoly term(const Integer& c, std::size_t t_exp, std::size_t l_exp);

  bool is_zero() const { return coeffs_.empty(); }
  long t_degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const LPoly> coeffs() const { return coeffs_; }
  LPoly coeff(std::size_t t_exp) const;

  BiPoly& operator+=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<LPoly> coeffs_;
};

/// Coefficient-wise specialisation L = v.
RatPoly eval_at(const BiPoly& p, const Rational& v);

/// Laurent series in one variable with exact rational coefficients.
///
/// A series is either exact (a Laurent polynomial, no truncation) or known
/// only for exponents below trunc_order(). Leading and trailing zeros are
/// stripped; coefficients at or beyond the truncation order are never stored
/// and coeff() refuses to report them.
class LaurentSeries {
 public:
  LaurentSeries() = default;

  static LaurentSeries exact(long min_exp, std::vector<Rational> coeffs);
  static LaurentSeries truncated(long min_exp, std::vector<Rational> coeffs, long trunc_order);
  static LaurentSeries monomial(const Rational& c, long exp);
  static LaurentSeries from_poly(const IntPoly& p);

  bool is_exact() const { return !trunc_.has_value(); }
  std::optional<long> trunc_order() const { return trunc_; }
  long min_exp() const { return min_exp_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Throws TruncationTooShort for e >= trunc_order().
  Rational coeff(long e) const;

  LaurentSeries truncate(long order) const;
  LaurentSeries shift(long k) const;
  LaurentSeries substitute_power(unsigned k) const;

  /// Multiplicative inverse, known at most through exponent order - 1.
  LaurentSeries inverse(long order) const;

  /// Integer power; negative exponents go through inverse(order).
  LaurentSeries pow(long n, long order) const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator-(LaurentSeries a);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const Rational& s, LaurentSeries a);
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

 private:
  LaurentSeries(long min_exp, std::vector<Rational> coeffs, std::optional<long> trunc);
  void normalize();

  long min_exp_ = 0;
  std::vector<Rational> coeffs_;
  std::optional<long> trunc_;
};

/// True iff a and b agree at every exponent below `order`. Throws
/// TruncationTooShort if either side is not known that far.
bool agree_through(const LaurentSeries& a, const LaurentSeries& b, long order);

/// Expansion of num/den with coefficients for exponents < n. A factor q^k of
/// the denominator is allowed and produces negative exponents.
LaurentSeries series_from_rational(const IntPoly& num, const IntPoly& den, long n);

/// Quotient of integer polynomials kept in canonical reduced form: no common
/// factor, integer coefficients with joint content 1, and the lowest nonzero
/// coefficient of the denominator positive. Two equal rational functions
/// therefore compare equal member-wise.
class RationalFn {
 public:
  RationalFn(const IntPoly& numerator, const IntPoly& denominator);

  /// Builds num/den from exact Laurent polynomials, clearing negative powers.
  static RationalFn from_laurent(const LaurentSeries& num, const LaurentSeries& den);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }

  RationalFn substitute_power(unsigned k) const;
  LaurentSeries expand(long n) const { return series_from_rational(num_, den_, n); }

  friend bool operator==(const RationalFn& a, const RationalFn& b) = default;

 private:
  IntPoly num_;
  IntPoly den_;
};

}  // namespace zetaforge
