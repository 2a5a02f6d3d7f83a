#include "zetaforge/severi.hpp"

#include <algorithm>
#include <string>

#include "zetaforge/error.hpp"
#include "zetaforge/semimodule.hpp"

namespace zetaforge {

namespace {

RatPoly basis(std::uint32_t delta, std::uint32_t h) {
  return RatPoly::monomial(Rational(1), delta - h) * RatPoly{Rational(1), Rational(-1)}.pow(2 * h);
}

}  // namespace

bool SeveriDegrees::integral() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const Rational& d) { return d.get_den() == 1; });
}

IntPoly severi_forward(const std::vector<Rational>& degrees) {
  if (degrees.empty()) throw Error(ErrorCode::InvalidInput, "need at least one degree");
  const auto delta = static_cast<std::uint32_t>(degrees.size() - 1);
  RatPoly sum;
  for (std::uint32_t h = 0; h <= delta; ++h) sum += degrees[h] * basis(delta, h);
  std::vector<Integer> cs;
  for (const auto& c : sum.coeffs()) {
    if (c.get_den() != 1) throw Error(ErrorCode::InvalidInput, "forward image is not an integer polynomial");
    cs.push_back(c.get_num());
  }
  return IntPoly(std::move(cs));
}

SeveriDegrees severi_solve(const IntPoly& f, std::uint32_t delta) {
  std::vector<RatPoly> bases;
  for (std::uint32_t h = 0; h <= delta; ++h) bases.push_back(basis(delta, h));

  SeveriDegrees out{delta, std::vector<Rational>(delta + 1, Rational(0))};
  // Coefficient of q^k involves d_h for h >= δ − k only.
  for (std::uint32_t k = 0; k <= delta; ++k) {
    Rational acc(f.coeff(k));
    for (std::uint32_t h = delta - k + 1; h <= delta; ++h) acc -= bases[h].coeff(k) * out.degrees[h];
    out.degrees[delta - k] = acc;
  }

  RatPoly residual = to_rational(f);
  for (std::uint32_t h = 0; h <= delta; ++h) residual -= out.degrees[h] * bases[h];
  if (!residual.is_zero()) {
    long first = 0;
    while (residual.coeff(static_cast<std::size_t>(first)) == 0) ++first;
    throw Error(ErrorCode::InversionFailure, "no solution: residual coefficient at q^" + std::to_string(first) +
                                                 " is " + residual.coeff(static_cast<std::size_t>(first)).get_str());
  }
  return out;
}

SeveriDegrees severi_degrees(const NumericalSemigroup& s) {
  if (s.conductor() != 2 * s.delta()) {
    throw Error(ErrorCode::InvalidInput, s.to_string() + " has c = " + std::to_string(s.conductor()) + " ≠ 2δ = " +
                                             std::to_string(2 * s.delta()) +
                                             "; not the semigroup of a plane branch");
  }
  return severi_solve(igen(s, s.conductor() + 1).numerator, s.delta());
}

}  // namespace zetaforge
