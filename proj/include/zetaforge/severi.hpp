#pragma once

#include <cstdint>
#include <vector>

#include "zetaforge/polyalg.hpp"
#include "zetaforge/semigroup.hpp"

namespace zetaforge {

struct SeveriDegrees {
  std::uint32_t delta = 0;
  std::vector<Rational> degrees;  // index h = 0..delta

  bool integral() const;
};

/// Σ_{h=0}^{δ} q^{δ−h}(1 − q)^{2h}·d_h.
IntPoly severi_forward(const std::vector<Rational>& degrees);

/// Solves f = Σ_{h=0}^{δ} q^{δ−h}(1 − q)^{2h}·d_h. The basis polynomial for h
/// starts at q^{δ−h} with coefficient 1, so the system is unit triangular in
/// the coefficients of q^0 .. q^δ; the higher coefficients must then vanish
/// identically or InversionFailure is thrown.
SeveriDegrees severi_solve(const IntPoly& f, std::uint32_t delta);

/// Severi degrees from (1 − q)·I(Γ;q). Throws InvalidInput unless c = 2δ
/// (the semigroup of a plane branch is symmetric).
SeveriDegrees severi_degrees(const NumericalSemigroup& s);

}  // namespace zetaforge
