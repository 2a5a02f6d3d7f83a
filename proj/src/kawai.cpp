#include "zetaforge/kawai.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "zetaforge/error.hpp"

namespace zetaforge {

namespace {

Integer binomial(std::uint32_t n, std::uint32_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

IntPoly one_minus_q_pow(std::uint32_t k) { return IntPoly{1, -1}.pow(k); }

// q/(1 − q)² known below `order`.
LaurentSeries x_series(long order) { return series_from_rational(IntPoly{0, 1}, one_minus_q_pow(2), order); }

// (1 − q)^e for any integer e, known below `order` when e < 0.
LaurentSeries one_minus_q_series(std::int64_t e, long order) {
  if (e >= 0) return LaurentSeries::from_poly(one_minus_q_pow(static_cast<std::uint32_t>(e)));
  return series_from_rational(IntPoly{1}, one_minus_q_pow(static_cast<std::uint32_t>(-e)), order);
}

// Exponent i of x and polynomial G with (Z numerator)/(1 − q)^{2δ} = 1 + x^i·G(q + 1/q).
std::pair<std::uint32_t, IntPoly> product_factor_data(const SingularityType& s) {
  switch (s.family()) {
    case SingularityFamily::A1: return {1, IntPoly{1}};
    case SingularityFamily::A2d: return {s.d(), g_poly(s.d())};
    case SingularityFamily::E6: return {3, g_poly_e6()};
    case SingularityFamily::E8: return {4, g_poly_e8()};
  }
  throw Error(ErrorCode::UnknownSingularity, "unhandled singularity family");
}

LaurentSeries sum_of_powers(std::initializer_list<long> exps) {
  LaurentSeries s;
  for (long e : exps) s += LaurentSeries::monomial(Rational(1), e);
  return s;
}

// Σ_{l in exps} q^l − (1 − q)^{2k} == q^k·G(q + 1/q)
bool cleared_identity(const LaurentSeries& sum, std::uint32_t k, const IntPoly& g) {
  const LaurentSeries lhs = sum - LaurentSeries::from_poly(one_minus_q_pow(2 * k));
  const LaurentSeries rhs = at_q_plus_inverse(g).shift(k);
  return lhs == rhs;
}

}  // namespace

CurveSpec CurveSpec::parse(std::uint32_t genus, std::string_view sings) {
  CurveSpec c;
  c.genus = genus;
  std::size_t pos = 0;
  while (pos < sings.size()) {
    const std::size_t comma = std::min(sings.find(',', pos), sings.size());
    std::string_view item = sings.substr(pos, comma - pos);
    pos = comma + 1;
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;
    std::uint32_t count = 1;
    std::string_view tag = item;
    if (const auto colon = item.find(':'); colon != std::string_view::npos) {
      tag = item.substr(0, colon);
      const std::string_view digits = item.substr(colon + 1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), count);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw Error(ErrorCode::InvalidInput, "malformed singularity count in '" + std::string(item) + "'");
      }
    }
    const auto type = SingularityType::parse(tag);
    if (count != 0) c.singularities[type] += count;
  }
  c.validate();
  return c;
}

std::int64_t CurveSpec::geometric_genus() const {
  std::int64_t g = genus;
  for (const auto& [type, m] : singularities) g -= static_cast<std::int64_t>(m) * type.delta();
  return g;
}

void CurveSpec::validate() const {
  if (const auto gt = geometric_genus(); gt < 0) {
    throw Error(ErrorCode::InvalidCurveSpec, "geometric genus g̃ = " + std::to_string(gt) +
                                                 " < 0: the singularities need total δ <= arithmetic genus " +
                                                 std::to_string(genus));
  }
}

std::uint32_t CurveSpec::default_trunc() const {
  std::uint32_t c_max = 0;
  for (const auto& [type, m] : singularities) c_max = std::max(c_max, type.conductor());
  return 2 * c_max + 2 * genus + 10;
}

IntPoly f_poly(std::uint32_t i) {
  const IntPoly t{0, 1};
  IntPoly prev{2};
  if (i == 0) return prev;
  IntPoly cur = t;
  for (std::uint32_t k = 2; k <= i; ++k) {
    IntPoly next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly g_poly(std::uint32_t i) {
  if (i == 0) throw Error(ErrorCode::InvalidInput, "G_i is defined for i >= 1");
  if (i == 1) return f_poly(0);
  if (i == 2) return Integer(4) * f_poly(1) - IntPoly{5};
  const std::uint32_t half = i / 2;
  IntPoly g;
  for (std::uint32_t l = 0; l + 1 <= half; ++l) g += binomial(2 * i, 2 * l + 1) * f_poly(i - (2 * l + 1));
  if (i % 2 == 1) {
    for (std::uint32_t l = 1; l <= half; ++l) g += (Integer(1) - binomial(2 * i, 2 * l)) * f_poly(i - 2 * l);
    g += IntPoly{binomial(2 * i, i)};
  } else {
    for (std::uint32_t l = 1; l + 1 <= half; ++l) g += (Integer(1) - binomial(2 * i, 2 * l)) * f_poly(i - 2 * l);
    g += IntPoly{Integer(1) - binomial(2 * i, i)};
  }
  return g;
}

IntPoly g_poly_e6() { return IntPoly{9, -14, 6}; }

IntPoly g_poly_e8() { return IntPoly{-15, 33, -27, 8}; }

LaurentSeries at_q_plus_inverse(const IntPoly& p) {
  const LaurentSeries t = LaurentSeries::exact(-1, {Rational(1), Rational(0), Rational(1)});
  LaurentSeries acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * t + LaurentSeries::monomial(Rational(*it), 0);
  }
  return acc;
}

bool verify_w2(std::uint32_t i) {
  if (i == 0) throw Error(ErrorCode::InvalidInput, "verify_w2 needs i >= 1");
  LaurentSeries sum;
  for (std::uint32_t l = 0; l <= i; ++l) sum += LaurentSeries::monomial(Rational(1), 2 * l);
  return cleared_identity(sum, i, g_poly(i));
}

bool verify_f_identity(std::uint32_t i) {
  const LaurentSeries expected = LaurentSeries::monomial(Rational(1), i) + LaurentSeries::monomial(Rational(1), -static_cast<long>(i));
  return at_q_plus_inverse(f_poly(i)) == expected;
}

bool verify_node_identity() {
  const IntPoly den = one_minus_q_pow(2);
  const RationalFn lhs(IntPoly{1, -1, 1}, den);
  // 1 + q/(1 − q)² over the common denominator.
  const RationalFn rhs(den + IntPoly{0, 1}, den);
  return lhs == rhs;
}

bool verify_e6_identity() { return cleared_identity(sum_of_powers({0, 2, 3, 4, 6}), 3, g_poly_e6()); }

bool verify_e8_identity() { return cleared_identity(sum_of_powers({0, 2, 3, 4, 5, 6, 8}), 4, g_poly_e8()); }

LaurentSeries curve_euler_series(const CurveSpec& c, std::uint32_t n) {
  c.validate();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "truncation order must be >= 1");
  std::int64_t exponent = 2 * c.geometric_genus() - 2;
  for (const auto& [type, m] : c.singularities) exponent += static_cast<std::int64_t>(type.branches()) * m;

  LaurentSeries result = one_minus_q_series(exponent, n).truncate(n);
  for (const auto& [type, m] : c.singularities) {
    const ZetaFn z = zeta_closed_form(type);
    std::vector<Integer> f;
    for (const auto& cls : z.numerator.coeffs()) f.push_back(cls.eval(Integer(1)));
    const LaurentSeries local = series_from_rational(IntPoly(std::move(f)), one_minus_q_pow(z.branch_exponent), n);
    result = (result * local.pow(m, n)).truncate(n);
  }
  return result;
}

BpsVector bps_decompose(const LaurentSeries& shifted, std::uint32_t g, std::int64_t g_tilde) {
  if (g_tilde < 0 || g_tilde > static_cast<std::int64_t>(g)) {
    throw Error(ErrorCode::InvalidInput, "bps_decompose needs 0 <= g̃ <= g");
  }
  const auto trunc = shifted.trunc_order();
  if (trunc && *trunc <= 1 - g_tilde) {
    throw Error(ErrorCode::TruncationTooShort, "series too short to determine n_h down to h = g̃");
  }
  const long order = trunc ? *trunc : 1 - g_tilde + 1;
  LaurentSeries remainder = shifted;
  BpsVector out;
  for (std::int64_t h = g; h >= g_tilde; --h) {
    const Rational c = remainder.coeff(1 - h);
    if (c.get_den() != 1) {
      throw Error(ErrorCode::DecompositionFailure, "non-integral n_" + std::to_string(h) + " = " + c.get_str());
    }
    // x^{1−h} = q^{1−h}·(1 − q)^{2h−2}
    const LaurentSeries basis = one_minus_q_series(2 * h - 2, order + 2).shift(1 - h);
    remainder -= c * basis;
    out[h] = c.get_num();
  }
  if (!remainder.is_zero()) {
    throw Error(ErrorCode::DecompositionFailure,
                "series is not a combination of (q/(1−q)²)^{1−h} for g̃ <= h <= g: remainder starts at q^" +
                    std::to_string(remainder.min_exp()));
  }
  return out;
}

LaurentSeries kawai_product_series(const CurveSpec& c, std::uint32_t n) {
  c.validate();
  const long g = c.genus;
  const long target = static_cast<long>(n) + 1 - g;
  long max_deg = 0;
  for (const auto& [type, m] : c.singularities) max_deg = std::max(max_deg, product_factor_data(type).second.degree());
  const long work = static_cast<long>(n) + max_deg + 4;

  // ((1 − q)²/q)^{g−1}
  LaurentSeries result = one_minus_q_series(2 * g - 2, work).shift(1 - g);
  const LaurentSeries x = x_series(work);
  for (const auto& [type, m] : c.singularities) {
    const auto [power, gpoly] = product_factor_data(type);
    const LaurentSeries factor =
        LaurentSeries::monomial(Rational(1), 0) + x.pow(power, work) * at_q_plus_inverse(gpoly);
    result = result * factor.pow(m, work);
  }
  if (result.trunc_order() && *result.trunc_order() < target) {
    throw Error(ErrorCode::TruncationTooShort, "internal working precision too low for the product formula");
  }
  return result.truncate(target);
}

LaurentSeries kawai_original_series(std::uint32_t genus, std::uint32_t nodes, std::uint32_t cusps,
                                    std::uint32_t n) {
  if (nodes + cusps > genus) {
    throw Error(ErrorCode::InvalidCurveSpec, "geometric genus would be negative: nodes + cusps > genus");
  }
  const long g = genus;
  const long work = static_cast<long>(n) + 4;
  const LaurentSeries one = LaurentSeries::monomial(Rational(1), 0);
  const LaurentSeries x = x_series(work);
  LaurentSeries result = one_minus_q_series(2 * g - 2, work).shift(1 - g);
  result = result * (one + x).pow(nodes, work) * (one + Rational(2) * x).pow(cusps, work);
  return result.truncate(static_cast<long>(n) + 1 - g);
}

}  // namespace zetaforge
