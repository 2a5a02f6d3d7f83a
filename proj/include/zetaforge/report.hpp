#pragma once

// Command-level results rendered as text, JSON or LaTeX. These back both the
// C API and the command-line tool; the JSON shapes are documented in
// docs/schema.json.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetaforge/kawai.hpp"
#include "zetaforge/polyalg.hpp"
#include "zetaforge/semigroup.hpp"
#include "zetaforge/zeta.hpp"

namespace zetaforge {

enum class Format { Text, Json, Latex };

std::string report_semigroup(const NumericalSemigroup& s, Format fmt);
std::string report_semimodules(const NumericalSemigroup& s, std::uint32_t codim, Format fmt);
/// n = 0 picks the default order 2c + 2 and omits the series from text output.
std::string report_igen(const NumericalSemigroup& s, std::uint32_t n, Format fmt);
std::string report_zeta(const SingularityType& type, std::uint32_t expand, const std::optional<Rational>& at_l,
                        Format fmt);
std::string report_fpoly(std::uint32_t i, Format fmt);
/// `which` is a positive index, "E6" or "E8".
std::string report_gpoly(std::string_view which, Format fmt);
std::string report_verify_w2(std::uint32_t from, std::uint32_t to, Format fmt, bool& all_hold);
/// n = 0 uses CurveSpec::default_trunc().
std::string report_curve(const CurveSpec& c, std::uint32_t n, Format fmt);
std::string report_bps(const CurveSpec& c, std::uint32_t n, Format fmt);
std::string report_severi(const NumericalSemigroup& s, Format fmt, bool& integral);
std::string report_homfly_check(std::uint32_t p, std::uint32_t q, Format fmt, std::optional<bool>& match);

struct SelfTestItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Deterministic identity suite: G_i/F_i identities, semimodule counts versus
/// the zeta closed forms, the product formula, Severi inversion and the
/// HOMFLY bottom rows.
std::vector<SelfTestItem> run_selftest();
std::string report_selftest(const std::vector<SelfTestItem>& items, Format fmt, bool quiet);

/// Parses "1", "-3", "2/5".
Rational parse_rational(std::string_view text);

}  // namespace zetaforge
