// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "zetaforge/zetaforge.h"

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct DomainFailure {
  std::string message;
};

void check(zf_status st) {
  if (st != ZF_OK) {
    std::string msg = zf_last_error();
    if (msg.empty()) msg = zf_status_name(st);
    throw DomainFailure{msg};
  }
}

struct StringDeleter {
  void operator()(char* s) const { zf_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct SemigroupDeleter {
  void operator()(zf_semigroup* s) const { zf_semigroup_free(s); }
};
struct CurveDeleter {
  void operator()(zf_curve* c) const { zf_curve_free(c); }
};

std::unique_ptr<zf_semigroup, SemigroupDeleter> load_semigroup(const std::string& gens) {
  zf_semigroup* s = nullptr;
  check(zf_semigroup_parse(gens.c_str(), &s));
  return std::unique_ptr<zf_semigroup, SemigroupDeleter>(s);
}

std::unique_ptr<zf_curve, CurveDeleter> load_curve(std::uint32_t genus, const std::string& sings) {
  zf_curve* c = nullptr;
  check(zf_curve_new(genus, sings.c_str(), &c));
  return std::unique_ptr<zf_curve, CurveDeleter>(c);
}

void emit(char* raw) {
  OwnedString s(raw);
  std::cout << s.get();
  const std::string_view v(s.get());
  if (v.empty() || v.back() != '\n') std::cout << '\n';
}

// --trunc wins; otherwise ZETAFORGE_TRUNC; otherwise 0 (library default).
std::uint32_t resolve_trunc(const std::optional<std::uint32_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ZETAFORGE_TRUNC"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0 || v > 100000) {
      throw CLI::ValidationError("ZETAFORGE_TRUNC", "must be a positive integer");
    }
    return static_cast<std::uint32_t>(v);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with semimodules, local zeta functions and curve counts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("zetaforge ") + zf_version());

  std::optional<std::uint32_t> trunc;
  std::string format = "text";
  bool json = false;
  bool latex = false;
  bool quiet = false;
  app.add_option("--trunc", trunc, "Series truncation order")->check(CLI::Range(1U, 100000U));
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_flag("--json", json, "Same as --format json");
  app.add_flag("--latex", latex, "Same as --format latex");
  app.add_flag("--quiet", quiet, "Suppress passing items and warnings");

  std::string gens;
  std::uint32_t codim = 0;
  std::string type;
  std::uint32_t expand = 0;
  std::optional<std::string> at_l;
  std::string which;
  std::uint32_t index = 0;
  std::uint32_t from = 1;
  std::uint32_t to = 12;
  std::optional<std::uint32_t> single;
  std::uint32_t genus = 0;
  std::string sings;
  std::vector<std::uint32_t> torus;

  auto* sg = app.add_subcommand("semigroup", "Generators, gaps, delta and conductor");
  sg->add_option("generators", gens, "Comma-separated generators, e.g. 3,4")->required();

  auto* sm = app.add_subcommand("semimodules", "Semimodules of a given codimension");
  sm->add_option("generators", gens)->required();
  sm->add_option("--codim", codim, "Codimension l")->required();

  auto* ig = app.add_subcommand("igen", "Generating function I(Γ;q)");
  ig->add_option("generators", gens)->required();

  auto* ze = app.add_subcommand("zeta", "Motivic zeta function of a singularity");
  ze->add_option("--type", type, "A1, A2d(d), E6 or E8")->required();
  ze->add_option("--expand", expand, "List classes for l = 0..N");
  ze->add_option("--at-L", at_l, "Specialise the class of the affine line");

  auto* gp = app.add_subcommand("gpoly", "Polynomial G_i(T), or G_E6 / G_E8");
  gp->add_option("which", which, "Index i >= 1, E6 or E8")->required();

  auto* fp = app.add_subcommand("fpoly", "Polynomial F_i(T)");
  fp->add_option("index", index, "Index i >= 0")->required();

  auto* vw = app.add_subcommand("verify-w2", "Check the G_i / F_i identity");
  vw->add_option("index", single, "Check a single index");
  vw->add_option("--from", from, "First index")->check(CLI::PositiveNumber);
  vw->add_option("--to", to, "Last index")->check(CLI::PositiveNumber);

  auto* cu = app.add_subcommand("curve", "Euler series of compactified Jacobians and product check");
  cu->add_option("--genus", genus, "Arithmetic genus")->required();
  cu->add_option("--sing", sings, "Singularities, e.g. A1:2,A2d(2):1,E6");

  auto* bp = app.add_subcommand("bps", "BPS numbers n_h");
  bp->add_option("--genus", genus, "Arithmetic genus")->required();
  bp->add_option("--sing", sings, "Singularities, e.g. A1:2,A2d(2):1,E6");

  auto* sv = app.add_subcommand("severi", "Local Severi degrees");
  sv->add_option("generators", gens)->required();

  auto* hc = app.add_subcommand("homfly-check", "HOMFLY bottom row of a torus knot");
  hc->add_option("--torus", torus, "p q")->expected(2)->required();

  auto* st = app.add_subcommand("selftest", "Run the identity suite");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageError;
  }

  zf_format fmt = ZF_FORMAT_TEXT;
  if (format == "json" || json) fmt = ZF_FORMAT_JSON;
  if (format == "latex" || latex) fmt = ZF_FORMAT_LATEX;
  if (json && latex) {
    std::cerr << "error: --json and --latex are mutually exclusive\n";
    return kUsageError;
  }

  try {
    const std::uint32_t n = resolve_trunc(trunc);
    char* out = nullptr;
    if (sg->parsed()) {
      auto s = load_semigroup(gens);
      check(zf_semigroup_render(s.get(), fmt, &out));
      emit(out);
    } else if (sm->parsed()) {
      auto s = load_semigroup(gens);
      check(zf_semimodules_render(s.get(), codim, fmt, &out));
      emit(out);
    } else if (ig->parsed()) {
      auto s = load_semigroup(gens);
      check(zf_igen_render(s.get(), n, fmt, &out));
      emit(out);
    } else if (ze->parsed()) {
      check(zf_zeta_render(type.c_str(), expand, at_l ? at_l->c_str() : nullptr, fmt, &out));
      emit(out);
    } else if (gp->parsed()) {
      check(zf_gpoly_render(which.c_str(), fmt, &out));
      emit(out);
    } else if (fp->parsed()) {
      check(zf_fpoly_render(index, fmt, &out));
      emit(out);
    } else if (vw->parsed()) {
      if (single) from = to = *single;
      if (from > to) throw CLI::ValidationError("--from", "must not exceed --to");
      int all = 0;
      check(zf_verify_w2_render(from, to, fmt, &out, &all));
      emit(out);
      if (all == 0) return kDomainError;
    } else if (cu->parsed()) {
      auto c = load_curve(genus, sings);
      check(zf_curve_render(c.get(), n, fmt, &out));
      emit(out);
    } else if (bp->parsed()) {
      auto c = load_curve(genus, sings);
      check(zf_bps_render(c.get(), n, fmt, &out));
      emit(out);
    } else if (sv->parsed()) {
      auto s = load_semigroup(gens);
      int integral = 1;
      check(zf_severi_render(s.get(), fmt, &out, &integral));
      emit(out);
      if (integral == 0 && !quiet) std::cerr << "warning: non-integral Severi degree\n";
    } else if (hc->parsed()) {
      int match = -1;
      check(zf_homfly_check_render(torus[0], torus[1], fmt, &out, &match));
      emit(out);
      if (match == 0) return kDomainError;
    } else if (st->parsed()) {
      int all = 0;
      check(zf_selftest_render(fmt, quiet ? 1 : 0, &out, &all));
      emit(out);
      if (all == 0) return kDomainError;
    }
  } catch (const DomainFailure& e) {
    std::cerr << "error: " << e.message << '\n';
    return kDomainError;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}
