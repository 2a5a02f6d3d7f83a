#include "zetaforge/report.hpp"

#include <charconv>
#include <sstream>

#include "zetaforge/error.hpp"
#include "zetaforge/format.hpp"
#include "zetaforge/homfly.hpp"
#include "zetaforge/semimodule.hpp"
#include "zetaforge/severi.hpp"

namespace zetaforge {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2); }

Style style_of(Format fmt) { return fmt == Format::Latex ? Style::Latex : Style::Text; }

std::string join(const std::vector<std::uint32_t>& xs, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<std::uint32_t> to_vec(std::span<const std::uint32_t> xs) { return {xs.begin(), xs.end()}; }

json semigroup_json(const NumericalSemigroup& s) {
  return {{"generators", to_vec(s.generators())},
          {"gaps", to_vec(s.gaps())},
          {"delta", s.delta()},
          {"conductor", s.conductor()}};
}

std::string semigroup_latex(const NumericalSemigroup& s) {
  return "\\langle " + join(to_vec(s.generators()), ", ") + " \\rangle";
}

json singularities_json(const CurveSpec& c) {
  json j = json::object();
  for (const auto& [type, m] : c.singularities) j[type.tag()] = m;
  return j;
}

std::string singularities_text(const CurveSpec& c) {
  if (c.singularities.empty()) return "none";
  std::string out;
  for (const auto& [type, m] : c.singularities) {
    if (!out.empty()) out += ", ";
    out += type.tag() + ":" + std::to_string(m);
  }
  return out;
}

json bps_json(const BpsVector& bps) {
  json j = json::object();
  for (const auto& [h, n] : bps) j[std::to_string(h)] = n.get_str();
  return j;
}

std::string bps_text(const BpsVector& bps, Style style) {
  std::string out;
  for (auto it = bps.rbegin(); it != bps.rend(); ++it) {
    if (!out.empty()) out += ", ";
    out += style == Style::Latex ? "n_{" + std::to_string(it->first) + "} = " : "n_" + std::to_string(it->first) + " = ";
    out += it->second.get_str();
  }
  return out;
}

struct CurveResult {
  std::uint32_t trunc;
  LaurentSeries chi;
  BpsVector bps;
  bool kawai_match;
};

CurveResult compute_curve(const CurveSpec& c, std::uint32_t n) {
  const std::uint32_t trunc = n == 0 ? c.default_trunc() : n;
  LaurentSeries chi = curve_euler_series(c, trunc);
  const LaurentSeries shifted = chi.shift(1 - static_cast<long>(c.genus));
  BpsVector bps = bps_decompose(shifted, c.genus, c.geometric_genus());
  const long order = static_cast<long>(trunc) + 1 - static_cast<long>(c.genus);
  const bool match = agree_through(shifted, kawai_product_series(c, trunc), order);
  return {trunc, std::move(chi), std::move(bps), match};
}

SelfTestItem check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, std::move(detail)};
}

template <class Fn>
SelfTestItem guarded(std::string name, Fn&& fn) {
  try {
    return fn(std::move(name));
  } catch (const Error& e) {
    return {std::move(name), false, e.what()};
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Rational r;
  const std::string s(text);
  if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorCode::InvalidInput, "malformed rational number '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::string report_semigroup(const NumericalSemigroup& s, Format fmt) {
  switch (fmt) {
    case Format::Json: return dump(semigroup_json(s));
    case Format::Latex:
      return "\\Gamma = " + semigroup_latex(s) + ",\\quad \\delta = " + std::to_string(s.delta()) +
             ",\\quad c = " + std::to_string(s.conductor());
    case Format::Text: break;
  }
  return "Γ = " + s.to_string() + "  gaps {" + join(to_vec(s.gaps())) + "}  δ = " + std::to_string(s.delta()) +
         "  c = " + std::to_string(s.conductor());
}

std::string report_semimodules(const NumericalSemigroup& s, std::uint32_t codim, Format fmt) {
  const auto mods = enumerate_semimodules(s, codim);
  if (fmt == Format::Json) {
    json arr = json::array();
    for (const auto& m : mods) {
      arr.push_back({{"generators", m.generators()}, {"complement", m.complement()}, {"codim", m.codim()}});
    }
    return dump({{"semigroup", semigroup_json(s)}, {"codim", codim}, {"count", mods.size()}, {"semimodules", arr}});
  }
  std::ostringstream out;
  if (fmt == Format::Latex) {
    for (std::size_t i = 0; i < mods.size(); ++i) {
      out << "\\Delta_{" << codim << "," << i + 1 << "} = \\langle " << join(mods[i].generators(), ", ")
          << " \\rangle_\\Gamma\n";
    }
    return out.str();
  }
  out << mods.size() << " semimodule" << (mods.size() == 1 ? "" : "s") << " of codim " << codim << " over "
      << s.to_string() << "\n";
  for (const auto& m : mods) {
    out << "  ⟨" << join(m.generators()) << "⟩_Γ  complement {" << join(m.complement()) << "}\n";
  }
  return out.str();
}

std::string report_igen(const NumericalSemigroup& s, std::uint32_t n, Format fmt) {
  const std::uint32_t order = n == 0 ? 2 * s.conductor() + 2 : n;
  const auto gen = igen(s, order);
  switch (fmt) {
    case Format::Json:
      return dump({{"semigroup", semigroup_json(s)},
                   {"numerator", to_json(gen.numerator, "q")},
                   {"normal_form", render(gen.normal_form, "q")},
                   {"series", to_json(gen.series, "q")}});
    case Format::Latex: {
      std::string out = "I(\\Gamma;q) = " + render(gen.normal_form, "q", Style::Latex);
      if (n != 0) out += "\n= " + render(gen.series, "q", Style::Latex);
      return out;
    }
    case Format::Text: break;
  }
  std::string out = "I(Γ;q) = " + render(gen.normal_form, "q");
  if (n != 0) out += "\n       = " + render(gen.series, "q");
  return out;
}

std::string report_zeta(const SingularityType& type, std::uint32_t expand, const std::optional<Rational>& at_l,
                        Format fmt) {
  const ZetaFn z = zeta_closed_form(type);
  const auto classes = expand == 0 ? std::vector<LPoly>{} : class_series(z, expand);

  if (fmt == Format::Json) {
    json j = {{"type", type.tag()},
              {"branches", type.branches()},
              {"delta", type.delta()},
              {"milnor", type.milnor()},
              {"numerator", to_json(z.numerator)},
              {"b", z.branch_exponent}};
    if (expand != 0) {
      json arr = json::array();
      for (const auto& c : classes) arr.push_back(to_json(c, kLVar));
      j["classes"] = arr;
    }
    if (at_l) {
      json spec = {{"value", at_l->get_str()}, {"numerator", to_json(eval_at(z.numerator, *at_l), "t")}};
      if (expand != 0) {
        json arr = json::array();
        for (const auto& c : classes) arr.push_back(eval_at(c, *at_l).get_str());
        spec["series"] = arr;
      }
      j["at_L"] = spec;
    }
    return dump(j);
  }

  const Style style = style_of(fmt);
  const std::string lname = style == Style::Latex ? "\\mathbb{L}" : std::string(kLVar);
  const std::string den_text = z.branch_exponent == 1
                                   ? (style == Style::Latex ? "1 - t" : "1−t")
                                   : (style == Style::Latex ? "(1 - t)^{" + std::to_string(z.branch_exponent) + "}"
                                                            : "(1−t)" + superscript(z.branch_exponent));
  std::ostringstream out;
  const std::string head = style == Style::Latex ? "Z^{\\mathrm{Hilb}}_{" + type.tag() + "}(t," + lname + ")"
                                                 : "Z_" + type.tag() + "(t," + lname + ")";
  const std::string num = render(z.numerator, style);
  if (style == Style::Latex) {
    out << head << " = \\frac{" << num << "}{" << den_text << "}";
  } else {
    out << head << " = (" << num << ")/" << (z.branch_exponent == 1 ? "(" + den_text + ")" : den_text);
  }
  if (at_l) {
    const std::string v = render_rational(*at_l, style);
    const std::string num_v = render(eval_at(z.numerator, *at_l), "t", style);
    if (style == Style::Latex) {
      out << "\n" << head.substr(0, head.find('(')) << "(t," << v << ") = \\frac{" << num_v << "}{" << den_text << "}";
    } else {
      out << "\n" << head.substr(0, head.find('(')) << "(t," << v << ") = (" << num_v << ")/"
          << (z.branch_exponent == 1 ? "(" + den_text + ")" : den_text);
    }
  }
  for (std::size_t l = 0; l < classes.size(); ++l) {
    const std::string cls = render(classes[l], kLVar, style);
    if (style == Style::Latex) {
      out << "\n[C^{[" << l << "]}_p] = " << cls;
    } else {
      out << "\n[C^[" << l << "]] = " << cls;
    }
    if (at_l) out << (style == Style::Latex ? " \\mapsto " : "  ↦ ") << render_rational(eval_at(classes[l], *at_l), style);
  }
  return out.str();
}

std::string report_fpoly(std::uint32_t i, Format fmt) {
  const IntPoly f = f_poly(i);
  switch (fmt) {
    case Format::Json: return dump({{"index", i}, {"poly", to_json(f, "T")}, {"text", render_descending(f, "T")}});
    case Format::Latex: return "F_{" + std::to_string(i) + "}(T) = " + render_descending(f, "T", Style::Latex);
    case Format::Text: break;
  }
  return render_descending(f, "T");
}

std::string report_gpoly(std::string_view which, Format fmt) {
  std::string upper;
  for (char ch : which) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  IntPoly g;
  std::string label;
  if (upper == "E6") {
    g = g_poly_e6();
    label = "E6";
  } else if (upper == "E8") {
    g = g_poly_e8();
    label = "E8";
  } else {
    std::uint32_t i = 0;
    const auto [ptr, ec] = std::from_chars(which.data(), which.data() + which.size(), i);
    if (which.empty() || ec != std::errc{} || ptr != which.data() + which.size() || i == 0) {
      throw Error(ErrorCode::InvalidInput, "gpoly index must be a positive integer, E6 or E8; got '" +
                                               std::string(which) + "'");
    }
    g = g_poly(i);
    label = std::to_string(i);
  }
  switch (fmt) {
    case Format::Json: return dump({{"index", label}, {"poly", to_json(g, "T")}, {"text", render_descending(g, "T")}});
    case Format::Latex: return "G_{" + label + "}(T) = " + render_descending(g, "T", Style::Latex);
    case Format::Text: break;
  }
  return render_descending(g, "T");
}

std::string report_verify_w2(std::uint32_t from, std::uint32_t to, Format fmt, bool& all_hold) {
  if (from == 0 || to < from) throw Error(ErrorCode::InvalidInput, "verify-w2 needs 1 <= from <= to");
  all_hold = true;
  json arr = json::array();
  std::ostringstream out;
  for (std::uint32_t i = from; i <= to; ++i) {
    const bool ok = verify_w2(i);
    all_hold = all_hold && ok;
    arr.push_back({{"i", i}, {"holds", ok}, {"G", render_descending(g_poly(i), "T")}});
    out << "i=" << i << ": " << (ok ? "holds" : "FAILS") << "  G_" << i << "(T) = "
        << render_descending(g_poly(i), "T", style_of(fmt)) << "\n";
  }
  if (fmt == Format::Json) return dump({{"results", arr}, {"all_hold", all_hold}});
  return out.str();
}

std::string report_curve(const CurveSpec& c, std::uint32_t n, Format fmt) {
  const auto r = compute_curve(c, n);
  if (fmt == Format::Json) {
    return dump({{"genus", c.genus},
                 {"geometric_genus", c.geometric_genus()},
                 {"singularities", singularities_json(c)},
                 {"trunc", r.trunc},
                 {"chi_series", to_json(r.chi, "q")},
                 {"bps", bps_json(r.bps)},
                 {"kawai_match", r.kawai_match}});
  }
  const Style style = style_of(fmt);
  std::ostringstream out;
  if (style == Style::Latex) {
    out << "\\sum_l \\chi(C^{[l]}) q^l = " << render(r.chi, "q", style) << "\n" << bps_text(r.bps, style) << "\n";
    out << "% Kawai product " << (r.kawai_match ? "matches" : "DOES NOT match") << "\n";
    return out.str();
  }
  out << "curve: g = " << c.genus << ", g̃ = " << c.geometric_genus() << ", singularities: " << singularities_text(c)
      << "\n";
  out << "Σχ(C^[l])q^l = " << render(r.chi, "q") << "\n";
  out << "BPS: " << bps_text(r.bps, style) << "\n";
  out << "Kawai product: " << (r.kawai_match ? "matches" : "MISMATCH") << "\n";
  return out.str();
}

std::string report_bps(const CurveSpec& c, std::uint32_t n, Format fmt) {
  const std::uint32_t trunc = n == 0 ? c.default_trunc() : n;
  const LaurentSeries shifted = curve_euler_series(c, trunc).shift(1 - static_cast<long>(c.genus));
  const BpsVector bps = bps_decompose(shifted, c.genus, c.geometric_genus());
  if (fmt == Format::Json) {
    return dump({{"genus", c.genus},
                 {"geometric_genus", c.geometric_genus()},
                 {"singularities", singularities_json(c)},
                 {"bps", bps_json(bps)}});
  }
  return bps_text(bps, style_of(fmt));
}

std::string report_severi(const NumericalSemigroup& s, Format fmt, bool& integral) {
  const SeveriDegrees sd = severi_degrees(s);
  integral = sd.integral();
  if (fmt == Format::Json) {
    json degrees = json::array();
    for (const auto& d : sd.degrees) degrees.push_back(d.get_str());
    return dump({{"delta", sd.delta}, {"degrees", degrees}, {"integral", integral}});
  }
  const Style style = style_of(fmt);
  std::string out;
  for (std::size_t h = 0; h < sd.degrees.size(); ++h) {
    if (!out.empty()) out += ", ";
    out += style == Style::Latex ? "\\deg_p \\mathbb{V}_{" + std::to_string(h) + "} = " : "deg V_" + std::to_string(h) + " = ";
    out += render_rational(sd.degrees[h], style);
  }
  return out;
}

std::string report_homfly_check(std::uint32_t p, std::uint32_t q, Format fmt, std::optional<bool>& match) {
  const HomflyCheck hc = homfly_check(p, q);
  match = hc.match;
  if (fmt == Format::Json) {
    return dump({{"torus", {p, q}},
                 {"mu", hc.mu},
                 {"predicted", render(hc.predicted, "q")},
                 {"computed", hc.computed ? json(render(*hc.computed, "q")) : json(nullptr)},
                 {"match", hc.match ? json(*hc.match) : json(nullptr)}});
  }
  const Style style = style_of(fmt);
  std::ostringstream out;
  out << "T(" << p << "," << q << ")  μ = " << hc.mu << "\n";
  out << "predicted: " << render(hc.predicted, "q", style) << "\n";
  if (hc.computed) {
    out << "computed:  " << render(*hc.computed, "q", style) << "\n";
    out << "match: " << (*hc.match ? "yes" : "NO") << "\n";
  } else {
    out << "computed:  (no built-in HOMFLY oracle for this torus knot)\n";
  }
  return out.str();
}

std::vector<SelfTestItem> run_selftest() {
  std::vector<SelfTestItem> items;
  for (std::uint32_t i = 1; i <= 12; ++i) {
    items.push_back(guarded("w2 identity i=" + std::to_string(i), [&](std::string n) { return check(std::move(n), verify_w2(i)); }));
  }
  for (std::uint32_t i = 1; i <= 12; ++i) {
    items.push_back(guarded("F_i(q+1/q) = q^i+q^-i i=" + std::to_string(i),
                            [&](std::string n) { return check(std::move(n), verify_f_identity(i)); }));
  }
  items.push_back(guarded("node identity (1-q+q^2)/(1-q)^2 = 1+q/(1-q)^2",
                          [](std::string n) { return check(std::move(n), verify_node_identity()); }));
  items.push_back(guarded("E6 identity G=6T^2-14T+9", [](std::string n) { return check(std::move(n), verify_e6_identity()); }));
  items.push_back(guarded("E8 identity G=8T^3-27T^2+33T-15",
                          [](std::string n) { return check(std::move(n), verify_e8_identity()); }));

  std::vector<SingularityType> unibranch{SingularityType::e6(), SingularityType::e8()};
  for (std::uint32_t d = 1; d <= 6; ++d) unibranch.push_back(SingularityType::a2d(d));
  for (const auto& t : unibranch) {
    items.push_back(guarded("Z(q,1) = I(Γ;q) through q^29 for " + t.tag(),
                            [&](std::string n) { return check(std::move(n), check_theorem_main4(t, 30)); }));
  }

  const std::vector<CurveSpec> curves = {
      CurveSpec::parse(1, "A1"),
      CurveSpec::parse(1, "A2d(1)"),
      CurveSpec::parse(3, "A1:1,A2d(1):2"),
      CurveSpec::parse(12, "A1,A2d(1),A2d(2),E6,E8"),
      CurveSpec::parse(7, "A2d(3),E6"),
  };
  for (const auto& c : curves) {
    items.push_back(guarded("product formula g=" + std::to_string(c.genus) + " " + singularities_text(c),
                            [&](std::string n) {
                              const auto r = compute_curve(c, 40);
                              return check(std::move(n), r.kawai_match, "BPS " + bps_text(r.bps, Style::Text));
                            }));
  }

  items.push_back(guarded("trefoil skein anchor 2a²−a⁴+a²z²", [](std::string n) {
    const HomflyPoly expected = HomflyPoly::term(2, 2, 0) + HomflyPoly::term(-1, 4, 0) + HomflyPoly::term(1, 2, 2);
    return check(std::move(n), torus2_homfly_skein(3) == expected);
  }));
  for (std::uint32_t d = 1; d <= 8; ++d) {
    items.push_back(guarded("HOMFLY bottom row T(2," + std::to_string(2 * d + 1) + ")",
                            [&](std::string n) { return check(std::move(n), compare_bottom_row(d)); }));
  }

  items.push_back(guarded("Severi degrees of the cusp = (2,1)", [](std::string n) {
    const auto sd = severi_degrees(NumericalSemigroup::make({2, 3}));
    return check(std::move(n), sd.degrees == std::vector<Rational>{Rational(2), Rational(1)});
  }));
  for (const auto& gens : {std::vector<std::uint32_t>{3, 4}, std::vector<std::uint32_t>{3, 5}}) {
    const auto s = NumericalSemigroup::make(gens);
    items.push_back(guarded("Severi inversion zero residual " + s.to_string(), [&](std::string n) {
      const auto sd = severi_degrees(s);
      return check(std::move(n), severi_forward(sd.degrees) == igen(s, s.conductor() + 1).numerator);
    }));
  }
  return items;
}

std::string report_selftest(const std::vector<SelfTestItem>& items, Format fmt, bool quiet) {
  std::size_t passed = 0;
  for (const auto& it : items) passed += it.passed ? 1 : 0;
  if (fmt == Format::Json) {
    json arr = json::array();
    for (const auto& it : items) arr.push_back({{"name", it.name}, {"passed", it.passed}, {"detail", it.detail}});
    return dump({{"items", arr}, {"passed", passed}, {"total", items.size()}, {"ok", passed == items.size()}});
  }
  std::ostringstream out;
  for (const auto& it : items) {
    if (quiet && it.passed) continue;
    out << (it.passed ? "PASS  " : "FAIL  ") << it.name;
    if (!it.detail.empty() && !it.passed) out << "  (" << it.detail << ")";
    out << "\n";
  }
  out << passed << "/" << items.size() << " checks passed\n";
  return out.str();
}

}  // namespace zetaforge
