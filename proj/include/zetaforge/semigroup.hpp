#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zetaforge {

/// A numerical semigroup: a cofinite additive submonoid of the non-negative
/// integers, kept with its minimal generators, gap set, delta-invariant
/// (number of gaps) and conductor (one past the largest gap, 0 when there are
/// no gaps).
class NumericalSemigroup {
 public:
  /// Throws EmptyGenerators for an empty list, InvalidInput for a zero
  /// generator and NotNumerical when gcd(gens) != 1.
  static NumericalSemigroup make(std::span<const std::uint32_t> gens);
  static NumericalSemigroup make(std::initializer_list<std::uint32_t> gens);

  /// Parses the textual form "3,4" (whitespace tolerated).
  static NumericalSemigroup parse(std::string_view text);

  std::span<const std::uint32_t> generators() const { return generators_; }
  std::span<const std::uint32_t> gaps() const { return gaps_; }
  std::uint32_t delta() const { return static_cast<std::uint32_t>(gaps_.size()); }
  std::uint32_t conductor() const { return conductor_; }
  std::uint32_t multiplicity() const { return generators_.front(); }

  /// Constant time for n >= conductor.
  bool contains(std::int64_t n) const;

  /// Elements of the semigroup in [0, bound), ascending.
  std::vector<std::uint32_t> elements_upto(std::uint32_t bound) const;

  /// "⟨3,4⟩"
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  NumericalSemigroup() = default;

  std::vector<std::uint32_t> generators_;
  std::vector<std::uint32_t> gaps_;
  std::uint32_t conductor_ = 0;
  std::vector<bool> member_;  // membership below conductor
};

}  // namespace zetaforge
