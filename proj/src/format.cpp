#include "zetaforge/format.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace zetaforge {

namespace {

constexpr std::string_view kMinus = "−";

struct Factor {
  std::string_view var;
  long exp;
};

struct Term {
  Rational coeff;
  std::vector<Factor> factors;
};

std::string var_name(std::string_view var, Style style) {
  if (style == Style::Latex && var == kLVar) return "\\mathbb{L}";
  return std::string(var);
}

std::string render_monomial(const std::vector<Factor>& factors, Style style) {
  std::string out;
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (style == Style::Latex && !out.empty()) out += ' ';
    out += var_name(f.var, style);
    if (f.exp != 1) out += style == Style::Text ? superscript(f.exp) : "^{" + std::to_string(f.exp) + "}";
  }
  return out;
}

std::string render_terms(const std::vector<Term>& terms, Style style) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const bool negative = t.coeff < 0;
    if (i == 0) {
      if (negative) out += style == Style::Text ? std::string(kMinus) : "-";
    } else if (style == Style::Text) {
      out += negative ? std::string(kMinus) : "+";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(t.coeff);
    const std::string mono = render_monomial(t.factors, style);
    if (magnitude != 1 || mono.empty()) {
      std::string c = render_rational(magnitude, style);
      if (style == Style::Text && magnitude.get_den() != 1 && !mono.empty()) c = "(" + c + ")";
      out += c;
      if (style == Style::Latex && !mono.empty()) out += ' ';
    }
    out += mono;
  }
  return out;
}

template <class Coeff>
std::vector<Term> poly_terms(const DensePoly<Coeff>& p, std::string_view var) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] != 0) terms.push_back({Rational(p.coeffs()[i]), {{var, static_cast<long>(i)}}});
  }
  return terms;
}

std::vector<Term> series_terms(const LaurentSeries& s, std::string_view var) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    if (s.coeffs()[i] != 0) terms.push_back({s.coeffs()[i], {{var, s.min_exp() + static_cast<long>(i)}}});
  }
  return terms;
}

std::string wrap(const std::string& body, std::size_t term_count) {
  return term_count > 1 ? "(" + body + ")" : body;
}

nlohmann::json coeff_strings(auto const& coeffs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs) arr.push_back(c.get_str());
  return arr;
}

}  // namespace

std::string superscript(long n) {
  static constexpr std::string_view digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  if (n < 0) out += "⁻";
  const std::string plain = std::to_string(n < 0 ? -n : n);
  for (char ch : plain) out += digits[ch - '0'];
  return out;
}

std::string render_rational(const Rational& r, Style style) {
  if (r.get_den() == 1) return r.get_num().get_str();
  if (style == Style::Latex) {
    const std::string sign = r < 0 ? "-" : "";
    return sign + "\\frac{" + Integer(abs(r.get_num())).get_str() + "}{" + r.get_den().get_str() + "}";
  }
  std::string s = r.get_str();
  if (!s.empty() && s.front() == '-') s = std::string(kMinus) + s.substr(1);
  return s;
}

std::string render(const IntPoly& p, std::string_view var, Style style) {
  return render_terms(poly_terms(p, var), style);
}

std::string render(const RatPoly& p, std::string_view var, Style style) {
  return render_terms(poly_terms(p, var), style);
}

std::string render_descending(const IntPoly& p, std::string_view var, Style style) {
  auto terms = poly_terms(p, var);
  std::reverse(terms.begin(), terms.end());
  return render_terms(terms, style);
}

std::string render(const BiPoly& p, Style style) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const auto& lp = p.coeffs()[i];
    for (std::size_t j = 0; j < lp.coeffs().size(); ++j) {
      if (lp.coeffs()[j] == 0) continue;
      terms.push_back({Rational(lp.coeffs()[j]), {{kLVar, static_cast<long>(j)}, {"t", static_cast<long>(i)}}});
    }
  }
  return render_terms(terms, style);
}

std::string render(const LaurentSeries& s, std::string_view var, Style style) {
  const auto terms = series_terms(s, var);
  std::string out = terms.empty() && s.trunc_order() ? std::string() : render_terms(terms, style);
  if (const auto t = s.trunc_order()) {
    if (!out.empty()) out += style == Style::Text ? "+" : " + ";
    out += "O(" + render_monomial({{var, *t}}, style) + (*t == 0 ? "1" : "") + ")";
  }
  return out;
}

std::string render(const RationalFn& f, std::string_view var, Style style) {
  const auto num_terms = poly_terms(f.numerator(), var);
  const auto den_terms = poly_terms(f.denominator(), var);
  const std::string num = render_terms(num_terms, style);
  if (f.denominator() == IntPoly{1}) return num;
  const std::string den = render_terms(den_terms, style);
  if (style == Style::Latex) return "\\frac{" + num + "}{" + den + "}";
  return wrap(num, num_terms.size()) + "/" + wrap(den, den_terms.size());
}

std::string render(const HomflyPoly& p, std::string_view second_var, Style style) {
  std::vector<Term> terms;
  for (const auto& [key, c] : p.terms()) terms.push_back({c, {{"a", key.first}, {second_var, key.second}}});
  return render_terms(terms, style);
}

nlohmann::json to_json(const IntPoly& p, std::string_view var) {
  return {{"var", var == kLVar ? "L" : std::string(var)}, {"coeffs", coeff_strings(p.coeffs())}};
}

nlohmann::json to_json(const RatPoly& p, std::string_view var) {
  return {{"var", var == kLVar ? "L" : std::string(var)}, {"coeffs", coeff_strings(p.coeffs())}};
}

nlohmann::json to_json(const BiPoly& p) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& lp : p.coeffs()) rows.push_back(coeff_strings(lp.coeffs()));
  return {{"var", "t"}, {"coeffs", rows}};
}

nlohmann::json to_json(const LaurentSeries& s, std::string_view var) {
  nlohmann::json j = {{"var", std::string(var)}, {"min_exp", s.min_exp()}, {"coeffs", coeff_strings(s.coeffs())}};
  j["trunc_order"] = s.trunc_order() ? nlohmann::json(*s.trunc_order()) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const RationalFn& f, std::string_view var) {
  return {{"numerator", to_json(f.numerator(), var)}, {"denominator", to_json(f.denominator(), var)}};
}

}  // namespace zetaforge
