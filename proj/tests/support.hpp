#pragma once

// Shared helpers for the test binaries: a small deterministic RNG, naive
// reference implementations used as oracles, and transcribed table data.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "zetaforge/kawai.hpp"
#include "zetaforge/polyalg.hpp"
#include "zetaforge/semigroup.hpp"

namespace testing_support {

using zetaforge::Integer;
using zetaforge::IntPoly;
using zetaforge::LaurentSeries;
using zetaforge::NumericalSemigroup;
using zetaforge::Rational;

// splitmix64
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  IntPoly poly(long max_deg, long bound) {
    std::vector<Integer> cs(static_cast<std::size_t>(range(0, max_deg + 1)));
    for (auto& c : cs) c = range(-bound, bound);
    return IntPoly(std::move(cs));
  }

 private:
  std::uint64_t state_;
};

// Truncated power series over the integers, coefficient i is q^i, length n.
using Naive = std::vector<Integer>;

inline Naive naive_mul(const Naive& a, const Naive& b, std::size_t n) {
  Naive out(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// 1 / (1 - q)^k, k >= 0: coefficients binom(i + k - 1, k - 1).
inline Naive naive_geometric(unsigned k, std::size_t n) {
  Naive out(n, 0);
  if (k == 0) {
    out[0] = 1;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), i + k - 1, k - 1);
    out[i] = b;
  }
  return out;
}

// (1 - q)^k, k >= 0.
inline Naive naive_one_minus(unsigned k, std::size_t n) {
  Naive out(n, 0);
  for (std::size_t i = 0; i <= k && i < n; ++i) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), k, i);
    out[i] = (i % 2 == 0) ? b : Integer(-b);
  }
  return out;
}

inline Naive naive_from(std::initializer_list<long> cs) {
  Naive out;
  for (long c : cs) out.push_back(c);
  return out;
}

inline LaurentSeries to_series(const Naive& a, long min_exp = 0) {
  std::vector<Rational> cs;
  for (const auto& c : a) cs.emplace_back(c);
  return LaurentSeries::truncated(min_exp, std::move(cs), min_exp + static_cast<long>(a.size()));
}

// Σ_h n_h q^{1-h} (1 - q)^{2h-2}, known below n + 1 - g.
inline LaurentSeries recompose(const zetaforge::BpsVector& bps, std::uint32_t g, long n) {
  LaurentSeries acc = LaurentSeries::truncated(1 - static_cast<long>(g), {}, n + 1 - static_cast<long>(g));
  for (const auto& [h, v] : bps) {
    const long e = 2 * h - 2;
    const std::size_t len = static_cast<std::size_t>(n + 1);
    const Naive f = e >= 0 ? naive_one_minus(static_cast<unsigned>(e), len) : naive_geometric(static_cast<unsigned>(-e), len);
    acc += Rational(v) * to_series(f, 1 - h);
  }
  return acc;
}

// Down-sets of (Γ, a ⪯ b iff b - a ∈ Γ) of every size up to max_size, built
// breadth-first: each down-set of size k + 1 is a down-set of size k plus one
// element all of whose strict predecessors are already present.
inline std::vector<std::set<std::vector<std::uint32_t>>> naive_downsets(const NumericalSemigroup& s,
                                                                         std::uint32_t max_size) {
  const std::uint32_t c = s.conductor();
  const std::uint32_t top = s.generators().back();
  std::vector<std::set<std::vector<std::uint32_t>>> levels(max_size + 1);
  levels[0].insert(std::vector<std::uint32_t>{});
  for (std::uint32_t k = 0; k < max_size; ++k) {
    for (const auto& d : levels[k]) {
      const std::uint32_t hi = (d.empty() ? 0 : d.back()) + c + 2 * top + 1;
      for (std::uint32_t y = 0; y <= hi; ++y) {
        if (!s.contains(y) || std::binary_search(d.begin(), d.end(), y)) continue;
        bool ok = true;
        for (std::uint32_t z = 0; z < y && ok; ++z) {
          if (s.contains(z) && s.contains(static_cast<std::int64_t>(y) - z)) {
            ok = std::binary_search(d.begin(), d.end(), z);
          }
        }
        if (!ok) continue;
        auto next = d;
        next.insert(std::lower_bound(next.begin(), next.end(), y), y);
        levels[k + 1].insert(std::move(next));
      }
    }
  }
  return levels;
}

// Minimal generators of Γ minus a finite complement, computed directly.
inline std::vector<std::uint32_t> naive_module_generators(const NumericalSemigroup& s,
                                                          const std::vector<std::uint32_t>& complement) {
  auto in_module = [&](std::int64_t n) {
    return n >= 0 && s.contains(n) &&
           !std::binary_search(complement.begin(), complement.end(), static_cast<std::uint32_t>(n));
  };
  const std::uint32_t bound = (complement.empty() ? 0 : complement.back()) + s.conductor() + 2 * s.generators().back();
  std::vector<std::uint32_t> gens;
  for (std::uint32_t n = 0; n <= bound; ++n) {
    if (!in_module(n)) continue;
    bool reducible = false;
    for (std::uint32_t g = 1; g <= n && !reducible; ++g) {
      reducible = s.contains(g) && in_module(static_cast<std::int64_t>(n) - g);
    }
    if (!reducible) gens.push_back(n);
  }
  return gens;
}

// Generator sets of every semimodule, per codimension, as printed in the
// E6 and E8 enumeration tables.
inline const std::vector<std::vector<std::vector<std::uint32_t>>>& table_e6_modules() {
  static const std::vector<std::vector<std::vector<std::uint32_t>>> rows = {
      {{0}},
      {{3, 4}},
      {{4, 6}, {3, 8}},
      {{6, 7, 8}, {4, 9}, {3}},
      {{7, 8, 9}, {6, 8}, {6, 7}, {4}},
      {{8, 9, 10}, {7, 9}, {7, 8}, {6, 11}},
      {{9, 10, 11}, {8, 10}, {8, 9}, {7, 12}, {6}},
  };
  return rows;
}

inline const std::vector<std::vector<std::vector<std::uint32_t>>>& table_e8_modules() {
  static const std::vector<std::vector<std::vector<std::uint32_t>>> rows = {
      {{0}},
      {{3, 5}},
      {{5, 6}, {3, 10}},
      {{6, 8, 10}, {5, 9}, {3}},
      {{8, 9, 10}, {6, 10}, {6, 8}, {5, 12}},
      {{9, 10, 11}, {8, 10, 12}, {8, 9}, {6, 13}, {5}},
      {{10, 11, 12}, {9, 11, 13}, {9, 10}, {8, 12}, {8, 10}, {6}},
      {{11, 12, 13}, {10, 12, 14}, {10, 11}, {9, 13}, {9, 11}, {8, 15}},
      {{12, 13, 14}, {11, 13, 15}, {11, 12}, {10, 14}, {10, 12}, {9, 16}, {8}},
  };
  return rows;
}

// Affine-cell dimensions per codimension from the E6 / E8 cell tables.
inline const std::vector<std::vector<unsigned>>& table_e6_cells() {
  static const std::vector<std::vector<unsigned>> rows = {
      {0}, {0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 2}, {0, 1, 2, 2}, {0, 1, 2, 2, 3},
  };
  return rows;
}

inline const std::vector<std::vector<unsigned>>& table_e8_cells() {
  static const std::vector<std::vector<unsigned>> rows = {
      {0}, {0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 2}, {0, 1, 2, 2, 3},
      {0, 1, 2, 2, 3, 3}, {0, 1, 2, 2, 3, 3}, {0, 1, 2, 2, 3, 3, 4},
  };
  return rows;
}

// Class in L of a union of affine cells of the given dimensions.
inline IntPoly cells_class(const std::vector<unsigned>& dims) {
  IntPoly out;
  for (unsigned d : dims) out += IntPoly::monomial(Integer(1), d);
  return out;
}

}  // namespace testing_support
