#pragma once

#include <cstdint>
#include <map>
#include <string_view>

#include "zetaforge/polyalg.hpp"
#include "zetaforge/zeta.hpp"

namespace zetaforge {

/// An integral projective curve given by its arithmetic genus and the
/// multiset of its singular points.
struct CurveSpec {
  std::uint32_t genus = 0;
  std::map<SingularityType, std::uint32_t> singularities;

  /// "A1:2,A2d(3):1,E6"; a missing count means 1. Throws
  /// UnknownSingularity, InvalidInput for malformed counts, and
  /// InvalidCurveSpec when the geometric genus would be negative.
  static CurveSpec parse(std::uint32_t genus, std::string_view sings);

  /// g − Σ m·δ; may be negative for an inconsistent spec.
  std::int64_t geometric_genus() const;

  /// Throws InvalidCurveSpec when geometric_genus() < 0.
  void validate() const;

  /// max(2c) + 2g + 10 over the singular points.
  std::uint32_t default_trunc() const;
};

/// h ↦ n_h for g̃ <= h <= g.
using BpsVector = std::map<std::int64_t, Integer>;

/// F_0 = 2, F_1 = T, F_i = T·F_{i−1} − F_{i−2}.
IntPoly f_poly(std::uint32_t i);

/// G_i for i >= 1; throws InvalidInput for i = 0.
IntPoly g_poly(std::uint32_t i);
IntPoly g_poly_e6();
IntPoly g_poly_e8();

/// p(q + 1/q) as an exact Laurent polynomial in q.
LaurentSeries at_q_plus_inverse(const IntPoly& p);

/// Σ_{l=0}^{i} q^{2l} − (1 − q)^{2i} == q^i·G_i(q + 1/q), exactly.
bool verify_w2(std::uint32_t i);

/// F_i(q + 1/q) == q^i + q^{−i}.
bool verify_f_identity(std::uint32_t i);

/// (1 − q + q²)/(1 − q)² == 1 + q/(1 − q)² as reduced rational functions.
bool verify_node_identity();

/// Σ_{l∈{0,2,3,4,6}} q^l − (1 − q)^6 == q³·G_E6(q + 1/q).
bool verify_e6_identity();

/// Σ_{l∈{0,2,3,4,5,6,8}} q^l − (1 − q)^8 == q⁴·G_E8(q + 1/q).
bool verify_e8_identity();

/// Σ χ(C^{[l]}) q^l for l < n, from the product of local zeta functions.
LaurentSeries curve_euler_series(const CurveSpec& c, std::uint32_t n);

/// Peels n_h off a series in q starting at exponent 1 − g, from h = g down to
/// h = g̃. Throws DecompositionFailure when a coefficient is not integral or
/// the remainder does not vanish.
BpsVector bps_decompose(const LaurentSeries& shifted, std::uint32_t g, std::int64_t g_tilde);

/// The generalized product formula evaluated in q; exponents from 1 − g,
/// known below n + 1 − g (the same range as q^{1−g}·curve_euler_series(c, n)).
LaurentSeries kawai_product_series(const CurveSpec& c, std::uint32_t n);

/// The node/cusp product formula for `nodes` A1 and `cusps` A2 points.
LaurentSeries kawai_original_series(std::uint32_t genus, std::uint32_t nodes, std::uint32_t cusps,
                                    std::uint32_t n);

}  // namespace zetaforge
