#include "zetaforge/zeta.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "zetaforge/error.hpp"
#include "zetaforge/semimodule.hpp"

namespace zetaforge {

SingularityType SingularityType::a2d(std::uint32_t d) {
  if (d == 0) throw Error(ErrorCode::UnknownSingularity, "A2d(d) needs d >= 1");
  return SingularityType(SingularityFamily::A2d, d);
}

SingularityType SingularityType::parse(std::string_view tag) {
  std::string t;
  for (char ch : tag) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  }
  auto number = [&](std::string_view digits) -> std::optional<std::uint32_t> {
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return v;
  };
  if (t == "A1") return a1();
  if (t == "E6") return e6();
  if (t == "E8") return e8();
  if (t.starts_with("A2D(") && t.ends_with(")")) {
    if (auto d = number(std::string_view(t).substr(4, t.size() - 5)); d && *d >= 1) return a2d(*d);
  } else if (t.starts_with("A")) {
    if (auto n = number(std::string_view(t).substr(1)); n && *n >= 2 && *n % 2 == 0) return a2d(*n / 2);
  }
  throw Error(ErrorCode::UnknownSingularity,
              "unknown singularity type '" + std::string(tag) + "' (expected A1, A2d(d), A<2d>, E6 or E8)");
}

std::uint32_t SingularityType::delta() const {
  switch (family_) {
    case SingularityFamily::A1: return 1;
    case SingularityFamily::A2d: return d_;
    case SingularityFamily::E6: return 3;
    case SingularityFamily::E8: return 4;
  }
  return 0;
}

std::uint32_t SingularityType::conductor() const { return 2 * delta(); }

std::optional<NumericalSemigroup> SingularityType::semigroup() const {
  switch (family_) {
    case SingularityFamily::A1: return std::nullopt;
    case SingularityFamily::A2d: return NumericalSemigroup::make({2, 2 * d_ + 1});
    case SingularityFamily::E6: return NumericalSemigroup::make({3, 4});
    case SingularityFamily::E8: return NumericalSemigroup::make({3, 5});
  }
  return std::nullopt;
}

std::string SingularityType::tag() const {
  switch (family_) {
    case SingularityFamily::A1: return "A1";
    case SingularityFamily::A2d: return "A2d(" + std::to_string(d_) + ")";
    case SingularityFamily::E6: return "E6";
    case SingularityFamily::E8: return "E8";
  }
  return {};
}

ZetaFn zeta_closed_form(const SingularityType& s) {
  using T = BiPoly;
  switch (s.family()) {
    case SingularityFamily::A1:
      // (1 − t + L t²) / (1 − t)²
      return {T::term(1, 0, 0) + T::term(-1, 1, 0) + T::term(1, 2, 1), 2};
    case SingularityFamily::A2d: {
      BiPoly f;
      for (std::uint32_t i = 0; i <= s.d(); ++i) f += T::term(1, 2 * i, i);
      return {f, 1};
    }
    case SingularityFamily::E6:
      return {T::term(1, 0, 0) + T::term(1, 2, 1) + T::term(1, 3, 2) + T::term(1, 4, 2) + T::term(1, 6, 3), 1};
    case SingularityFamily::E8:
      return {T::term(1, 0, 0) + T::term(1, 2, 1) + T::term(1, 3, 2) + T::term(1, 4, 2) + T::term(1, 5, 3) +
                  T::term(1, 6, 3) + T::term(1, 8, 4),
              1};
  }
  throw Error(ErrorCode::UnknownSingularity, "unhandled singularity family");
}

std::vector<LPoly> class_series(const ZetaFn& z, std::uint32_t n) {
  // 1/(1 − t)^b = Σ C(k + b − 1, b − 1) t^k
  std::vector<Integer> expansion(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    mpz_bin_uiui(expansion[k].get_mpz_t(), k + z.branch_exponent - 1, z.branch_exponent - 1);
  }
  std::vector<LPoly> out(n);
  for (std::uint32_t l = 0; l < n; ++l) {
    const auto top = std::min<std::size_t>(l, z.numerator.coeffs().size() - 1);
    for (std::size_t i = 0; i <= top && !z.numerator.is_zero(); ++i) {
      out[l] += expansion[l - i] * z.numerator.coeffs()[i];
    }
  }
  return out;
}

LaurentSeries euler_series(const ZetaFn& z, std::uint32_t n) {
  std::vector<Rational> cs;
  cs.reserve(n);
  for (const auto& cls : class_series(z, n)) cs.push_back(eval_at(cls, Rational(1)));
  return LaurentSeries::truncated(0, std::move(cs), n);
}

bool check_theorem_main4(const SingularityType& s, std::uint32_t n) {
  const auto gamma = s.semigroup();
  if (!gamma || s.branches() != 1) {
    throw Error(ErrorCode::InvalidInput, s.tag() + " is not unibranch; no semigroup comparison");
  }
  return agree_through(euler_series(zeta_closed_form(s), n), igen(*gamma, n).series, n);
}

}  // namespace zetaforge
