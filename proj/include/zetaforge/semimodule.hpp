#pragma once

#include <cstdint>
#include <vector>

#include "zetaforge/polyalg.hpp"
#include "zetaforge/semigroup.hpp"

namespace zetaforge {

/// A semimodule Δ ⊆ Γ with Δ + Γ ⊆ Δ and finite complement Γ∖Δ.
///
/// Stored by its complement, which is a down-set of Γ under the order
/// a ⪯ b ⇔ b − a ∈ Γ. The codimension is the size of the complement.
class SemiModule {
 public:
  /// Throws InvalidInput unless `complement` is a finite down-set of Γ.
  SemiModule(const NumericalSemigroup& parent, std::vector<std::uint32_t> complement);

  /// Δ = ∪ (g + Γ) over the given generators (all must lie in Γ).
  static SemiModule generated_by(const NumericalSemigroup& parent, const std::vector<std::uint32_t>& gens);

  const NumericalSemigroup& parent() const { return parent_; }
  const std::vector<std::uint32_t>& complement() const { return complement_; }
  const std::vector<std::uint32_t>& generators() const { return generators_; }
  std::size_t codim() const { return complement_.size(); }
  bool contains(std::int64_t n) const;

 private:
  NumericalSemigroup parent_;
  std::vector<std::uint32_t> complement_;
  std::vector<std::uint32_t> generators_;
};

/// All semimodules of codimension l, complements in lexicographic order.
std::vector<SemiModule> enumerate_semimodules(const NumericalSemigroup& s, std::uint32_t l);

std::uint64_t count_semimodules(const NumericalSemigroup& s, std::uint32_t l);

/// Counts for every codimension 0 .. n-1 in one pass.
std::vector<std::uint64_t> count_semimodules_upto(const NumericalSemigroup& s, std::uint32_t n);

struct SemimoduleGenFn {
  LaurentSeries series;     // enumerated counts for codim < N
  IntPoly numerator;        // f(q) with I(Γ;q) = f(q)/(1−q)
  RationalFn normal_form;
};

/// I(Γ;q) through order n, with its rational normal form. Throws
/// TruncationTooShort when n <= conductor.
SemimoduleGenFn igen(const NumericalSemigroup& s, std::uint32_t n);

}  // namespace zetaforge
