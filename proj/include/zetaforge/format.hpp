#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "zetaforge/homfly.hpp"
#include "zetaforge/polyalg.hpp"

namespace zetaforge {

// Text output uses Unicode superscripts and U+2212 for minus ("1−t+𝕃t²");
// LaTeX output renders the class of the affine line as \mathbb{L}.
enum class Style { Text, Latex };

inline constexpr std::string_view kLVar = "𝕃";

std::string superscript(long n);
std::string render_rational(const Rational& r, Style style);

/// Terms appear in increasing degree ("1+q²"); see render_descending for "4T−5".
std::string render(const IntPoly& p, std::string_view var, Style style = Style::Text);
std::string render(const RatPoly& p, std::string_view var, Style style = Style::Text);
std::string render_descending(const IntPoly& p, std::string_view var, Style style = Style::Text);
/// Polynomial in t with coefficients in 𝕃, e.g. "1+𝕃t²+𝕃²t⁴".
std::string render(const BiPoly& p, Style style = Style::Text);
/// Appends "+O(q^N)" for truncated series.
std::string render(const LaurentSeries& s, std::string_view var, Style style = Style::Text);
std::string render(const RationalFn& f, std::string_view var, Style style = Style::Text);
std::string render(const HomflyPoly& p, std::string_view second_var, Style style = Style::Text);

// JSON encodings. Coefficients are decimal strings ("3", "-1/2").
nlohmann::json to_json(const IntPoly& p, std::string_view var);
nlohmann::json to_json(const RatPoly& p, std::string_view var);
/// {"var":"t","coeffs":[[c00,c01,...],...]}; inner arrays are 𝕃-coefficients.
nlohmann::json to_json(const BiPoly& p);
/// {"var":"q","min_exp":m,"coeffs":[...],"trunc_order":N|null}
nlohmann::json to_json(const LaurentSeries& s, std::string_view var);
nlohmann::json to_json(const RationalFn& f, std::string_view var);

}  // namespace zetaforge
