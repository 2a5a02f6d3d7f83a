#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetaforge/polyalg.hpp"
#include "zetaforge/semigroup.hpp"

namespace zetaforge {

enum class SingularityFamily { A1, A2d, E6, E8 };

/// One of the singularity types with a closed-form zeta function: the node
/// A1, the cusps A2d (d >= 1), E6 and E8.
class SingularityType {
 public:
  static SingularityType a1() { return SingularityType(SingularityFamily::A1, 0); }
  static SingularityType a2d(std::uint32_t d);
  static SingularityType e6() { return SingularityType(SingularityFamily::E6, 0); }
  static SingularityType e8() { return SingularityType(SingularityFamily::E8, 0); }

  /// Accepts "A1", "A2d(3)", "A6" (= A2d(3)), "E6", "E8"; case-insensitive.
  /// Throws UnknownSingularity otherwise.
  static SingularityType parse(std::string_view tag);

  SingularityFamily family() const { return family_; }
  /// d for A2d, 0 otherwise.
  std::uint32_t d() const { return d_; }

  std::uint32_t branches() const { return family_ == SingularityFamily::A1 ? 2 : 1; }
  std::uint32_t delta() const;
  /// 2δ for the unibranch types; c = 2 is used for the node's two smooth branches.
  std::uint32_t conductor() const;
  /// Milnor number 2δ − b + 1.
  std::uint32_t milnor() const { return 2 * delta() - branches() + 1; }

  /// Semigroup of the branch; empty for the two-branch node.
  std::optional<NumericalSemigroup> semigroup() const;

  /// "A1", "A2d(3)", "E6", "E8"
  std::string tag() const;

  friend auto operator<=>(const SingularityType&, const SingularityType&) = default;

 private:
  SingularityType(SingularityFamily f, std::uint32_t d) : family_(f), d_(d) {}

  SingularityFamily family_;
  std::uint32_t d_;
};

/// Z(t, L) = numerator / (1 − t)^branch_exponent.
struct ZetaFn {
  BiPoly numerator;
  std::uint32_t branch_exponent = 1;
};

ZetaFn zeta_closed_form(const SingularityType& s);

/// Classes [C^{[l]}_p] as polynomials in L, for l < n.
std::vector<LPoly> class_series(const ZetaFn& z, std::uint32_t n);

/// Z(q, 1) through order n.
LaurentSeries euler_series(const ZetaFn& z, std::uint32_t n);

/// Euler series of the zeta function against the enumerated semimodule
/// series, through order n. Throws InvalidInput for the node.
bool check_theorem_main4(const SingularityType& s, std::uint32_t n);

}  // namespace zetaforge
