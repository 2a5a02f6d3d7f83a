#include "zetaforge/polyalg.hpp"

#include <string>

namespace zetaforge {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) cs.emplace_back(c);
  return RatPoly(std::move(cs));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const long db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (long i = a.degree(); i >= db; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] / b.leading();
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (long j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(static_cast<std::size_t>(j));
    }
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) throw Error(ErrorCode::NotDivisible, "divexact: nonzero remainder");
  std::vector<Integer> cs;
  cs.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) {
    if (c.get_den() != 1) throw Error(ErrorCode::NotDivisible, "divexact: quotient is not integral");
    cs.emplace_back(c.get_num());
  }
  return IntPoly(std::move(cs));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a;
  RatPoly y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return Rational(1) / x.leading() * x;
}

Rational eval_at(const LPoly& p, const Rational& v) {
  Rational acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * v + Rational(*it);
  return acc;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(std::vector<LPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

BiPoly BiPoly::term(const Integer& c, std::size_t t_exp, std::size_t l_exp) {
  std::vector<LPoly> cs(t_exp + 1);
  cs[t_exp] = LPoly::monomial(c, l_exp);
  return BiPoly(std::move(cs));
}

LPoly BiPoly::coeff(std::size_t t_exp) const {
  return t_exp < coeffs_.size() ? coeffs_[t_exp] : LPoly{};
}

void BiPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  std::vector<LPoly> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) - b.coeff(i);
  return BiPoly(std::move(cs));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LPoly> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BiPoly(std::move(cs));
}

RatPoly eval_at(const BiPoly& p, const Rational& v) {
  std::vector<Rational> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) cs.push_back(eval_at(c, v));
  return RatPoly(std::move(cs));
}

// ---------------------------------------------------------------------------
// LaurentSeries

namespace {

// Truncation of a sum/product operand pair; nullopt means exact.
std::optional<long> min_trunc(std::optional<long> a, std::optional<long> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

LaurentSeries::LaurentSeries(long min_exp, std::vector<Rational> coeffs, std::optional<long> trunc)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)), trunc_(trunc) {
  normalize();
}

LaurentSeries LaurentSeries::exact(long min_exp, std::vector<Rational> coeffs) {
  return LaurentSeries(min_exp, std::move(coeffs), std::nullopt);
}

LaurentSeries LaurentSeries::truncated(long min_exp, std::vector<Rational> coeffs, long trunc_order) {
  return LaurentSeries(min_exp, std::move(coeffs), trunc_order);
}

LaurentSeries LaurentSeries::monomial(const Rational& c, long exp) { return exact(exp, {c}); }

LaurentSeries LaurentSeries::from_poly(const IntPoly& p) {
  std::vector<Rational> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) cs.emplace_back(c);
  return exact(0, std::move(cs));
}

void LaurentSeries::normalize() {
  if (trunc_) {
    const long keep = *trunc_ - min_exp_;
    if (keep <= 0) {
      coeffs_.clear();
    } else if (static_cast<long>(coeffs_.size()) > keep) {
      coeffs_.resize(static_cast<std::size_t>(keep));
    }
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_exp_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) min_exp_ = trunc_ ? std::min(0L, *trunc_ - 1) : 0;
}

Rational LaurentSeries::coeff(long e) const {
  if (trunc_ && e >= *trunc_) {
    throw Error(ErrorCode::TruncationTooShort,
                "coefficient of exponent " + std::to_string(e) + " requested from a series known below " +
                    std::to_string(*trunc_));
  }
  const long i = e - min_exp_;
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

LaurentSeries LaurentSeries::truncate(long order) const {
  return LaurentSeries(min_exp_, coeffs_, trunc_ ? std::min(*trunc_, order) : order);
}

LaurentSeries LaurentSeries::shift(long k) const {
  return LaurentSeries(min_exp_ + k, coeffs_, trunc_ ? std::optional<long>(*trunc_ + k) : std::nullopt);
}

LaurentSeries LaurentSeries::substitute_power(unsigned k) const {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "substitution power must be >= 1");
  const long kk = static_cast<long>(k);
  std::vector<Rational> cs(coeffs_.empty() ? 0 : (coeffs_.size() - 1) * k + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i * k] = coeffs_[i];
  // Exponents between multiples of k are known zeros, so the known range
  // scales exactly.
  return LaurentSeries(min_exp_ * kk, std::move(cs),
                       trunc_ ? std::optional<long>(*trunc_ * kk) : std::nullopt);
}

LaurentSeries LaurentSeries::inverse(long order) const {
  if (coeffs_.empty()) throw Error(ErrorCode::DivisionByZero, "inverse of a zero series");
  const long m = min_exp_;
  long target = order;
  // Relative precision of the input bounds the relative precision of the
  // inverse.
  if (trunc_) target = std::min(target, *trunc_ - 2 * m);
  const long len = target + m;  // number of coefficients from exponent -m
  std::vector<Rational> out;
  if (len > 0) {
    out.assign(static_cast<std::size_t>(len), Rational(0));
    const Rational lead_inv = Rational(1) / coeffs_[0];
    for (long n = 0; n < len; ++n) {
      Rational acc = n == 0 ? Rational(1) : Rational(0);
      const long upto = std::min<long>(n, static_cast<long>(coeffs_.size()) - 1);
      for (long j = 1; j <= upto; ++j) {
        acc -= coeffs_[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(n - j)];
      }
      out[static_cast<std::size_t>(n)] = acc * lead_inv;
    }
  }
  return LaurentSeries(-m, std::move(out), target);
}

LaurentSeries LaurentSeries::pow(long n, long order) const {
  LaurentSeries base = n >= 0 ? *this : inverse(order);
  unsigned long e = n >= 0 ? static_cast<unsigned long>(n) : static_cast<unsigned long>(-n);
  LaurentSeries result = monomial(Rational(1), 0);
  while (e != 0) {
    if (e & 1UL) result = (result * base).truncate(order);
    e >>= 1UL;
    if (e != 0) base = (base * base).truncate(order);
  }
  return result;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  if (o.coeffs_.empty() && !o.trunc_) return *this;
  const auto trunc = min_trunc(trunc_, o.trunc_);
  if (coeffs_.empty()) {
    *this = LaurentSeries(o.min_exp_, o.coeffs_, trunc);
    return *this;
  }
  const long lo = std::min(min_exp_, o.min_exp_);
  const long hi = std::max(min_exp_ + static_cast<long>(coeffs_.size()),
                           o.min_exp_ + static_cast<long>(o.coeffs_.size()));
  std::vector<Rational> cs(static_cast<std::size_t>(hi - lo), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[static_cast<std::size_t>(min_exp_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    cs[static_cast<std::size_t>(o.min_exp_ - lo) + i] += o.coeffs_[i];
  }
  *this = LaurentSeries(lo, std::move(cs), trunc);
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries operator-(LaurentSeries a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  // Coefficient e of the product is known when every contributing index pair
  // lies inside both known ranges.
  std::optional<long> trunc;
  if (a.trunc_ && b.trunc_) {
    trunc = std::min(*a.trunc_ + b.min_exp_, *b.trunc_ + a.min_exp_);
  } else if (a.trunc_) {
    trunc = b.coeffs_.empty() ? std::nullopt : std::optional<long>(*a.trunc_ + b.min_exp_);
  } else if (b.trunc_) {
    trunc = a.coeffs_.empty() ? std::nullopt : std::optional<long>(*b.trunc_ + a.min_exp_);
  }
  if (a.coeffs_.empty() || b.coeffs_.empty()) {
    return LaurentSeries(0, {}, trunc);
  }
  const long lo = a.min_exp_ + b.min_exp_;
  std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (trunc) len = static_cast<std::size_t>(std::clamp<long>(*trunc - lo, 0, static_cast<long>(len)));
  std::vector<Rational> cs(len, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
      cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentSeries(lo, std::move(cs), trunc);
}

LaurentSeries operator*(const Rational& s, LaurentSeries a) {
  for (auto& c : a.coeffs_) c *= s;
  a.normalize();
  return a;
}

bool agree_through(const LaurentSeries& a, const LaurentSeries& b, long order) {
  for (const auto* s : {&a, &b}) {
    if (s->trunc_order() && *s->trunc_order() < order) {
      throw Error(ErrorCode::TruncationTooShort,
                  "series known only below exponent " + std::to_string(*s->trunc_order()) +
                      ", comparison requested through " + std::to_string(order - 1));
    }
  }
  const long lo = std::min(a.min_exp(), b.min_exp());
  for (long e = lo; e < order; ++e) {
    if (a.coeff(e) != b.coeff(e)) return false;
  }
  return true;
}

LaurentSeries series_from_rational(const IntPoly& num, const IntPoly& den, long n) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "series_from_rational: zero denominator");
  std::size_t shift = 0;
  while (den.coeff(shift) == 0) ++shift;
  const long k = static_cast<long>(shift);
  // Expand num / (den / q^k) as a power series through exponent n + k - 1,
  // then divide by q^k.
  std::vector<Rational> unit(den.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), den.coeffs().end());
  const long len = n + k;
  std::vector<Rational> out(len > 0 ? static_cast<std::size_t>(len) : 0, Rational(0));
  const Rational lead_inv = Rational(1) / unit[0];
  for (long i = 0; i < len; ++i) {
    Rational acc(num.coeff(static_cast<std::size_t>(i)));
    const long upto = std::min<long>(i, static_cast<long>(unit.size()) - 1);
    for (long j = 1; j <= upto; ++j) {
      acc -= unit[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(i - j)];
    }
    out[static_cast<std::size_t>(i)] = acc * lead_inv;
  }
  return LaurentSeries::truncated(-k, std::move(out), n);
}

// ---------------------------------------------------------------------------
// RationalFn

namespace {

// Scale (num, den) by a common rational so that every coefficient is an
// integer, the joint content is 1 and den's lowest nonzero coefficient is
// positive.
std::pair<IntPoly, IntPoly> canonical_scale(const RatPoly& num, const RatPoly& den) {
  Integer denom_lcm = 1;
  for (const auto* p : {&num, &den}) {
    for (const auto& c : p->coeffs()) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> n;
  std::vector<Integer> d;
  Integer content = 0;
  for (const auto& c : num.coeffs()) {
    n.emplace_back(c.get_num() * (denom_lcm / c.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.back().get_mpz_t());
  }
  for (const auto& c : den.coeffs()) {
    d.emplace_back(c.get_num() * (denom_lcm / c.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), d.back().get_mpz_t());
  }
  const auto lowest = std::find_if(d.begin(), d.end(), [](const Integer& c) { return c != 0; });
  if (*lowest < 0) content = -content;
  for (auto& c : n) c /= content;
  for (auto& c : d) c /= content;
  return {IntPoly(std::move(n)), IntPoly(std::move(d))};
}

}  // namespace

RationalFn::RationalFn(const IntPoly& numerator, const IntPoly& denominator) {
  if (denominator.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  const RatPoly n = to_rational(numerator);
  const RatPoly d = to_rational(denominator);
  if (n.is_zero()) {
    num_ = IntPoly{};
    den_ = IntPoly{1};
    return;
  }
  const RatPoly g = gcd(n, d);
  auto [nr, dr] = canonical_scale(divmod(n, g).first, divmod(d, g).first);
  num_ = std::move(nr);
  den_ = std::move(dr);
}

RationalFn RationalFn::from_laurent(const LaurentSeries& num, const LaurentSeries& den) {
  if (!num.is_exact() || !den.is_exact()) {
    throw Error(ErrorCode::InvalidInput, "from_laurent needs exact Laurent polynomials");
  }
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  const long lift = -std::min({num.min_exp(), den.min_exp(), 0L});
  auto as_poly = [lift](const LaurentSeries& s) {
    std::vector<Rational> cs;
    if (!s.is_zero()) {
      cs.assign(static_cast<std::size_t>(s.min_exp() + lift), Rational(0));
      cs.insert(cs.end(), s.coeffs().begin(), s.coeffs().end());
    }
    return RatPoly(std::move(cs));
  };
  auto [n, d] = canonical_scale(as_poly(num), as_poly(den));
  return RationalFn(n, d);
}

RationalFn RationalFn::substitute_power(unsigned k) const {
  return RationalFn(num_.substitute_power(k), den_.substitute_power(k));
}

}  // namespace zetaforge
