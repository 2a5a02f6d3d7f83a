#include "zetaforge/zetaforge.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>

#include "zetaforge/error.hpp"
#include "zetaforge/kawai.hpp"
#include "zetaforge/report.hpp"
#include "zetaforge/semimodule.hpp"
#include "zetaforge/semigroup.hpp"
#include "zetaforge/zeta.hpp"

struct zf_semigroup {
  zetaforge::NumericalSemigroup value;
};

struct zf_curve {
  zetaforge::CurveSpec value;
};

namespace {

using namespace zetaforge;

thread_local std::string last_error;

zf_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return ZF_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotDivisible: return ZF_ERR_NOT_DIVISIBLE;
    case ErrorCode::DivisionByZero: return ZF_ERR_DIVISION_BY_ZERO;
    case ErrorCode::NotNumerical: return ZF_ERR_NOT_NUMERICAL;
    case ErrorCode::EmptyGenerators: return ZF_ERR_EMPTY_GENERATORS;
    case ErrorCode::TruncationTooShort: return ZF_ERR_TRUNCATION_TOO_SHORT;
    case ErrorCode::InvalidCurveSpec: return ZF_ERR_INVALID_CURVE;
    case ErrorCode::DecompositionFailure: return ZF_ERR_DECOMPOSITION;
    case ErrorCode::InversionFailure: return ZF_ERR_INVERSION;
    case ErrorCode::UnknownSingularity: return ZF_ERR_UNKNOWN_SINGULARITY;
  }
  return ZF_ERR_INTERNAL;
}

zf_status fail(zf_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
zf_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return ZF_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZF_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Format format_of(zf_format fmt) {
  switch (fmt) {
    case ZF_FORMAT_TEXT: return Format::Text;
    case ZF_FORMAT_JSON: return Format::Json;
    case ZF_FORMAT_LATEX: return Format::Latex;
  }
  throw Error(ErrorCode::InvalidInput, "unknown output format");
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::InvalidInput, what);
}

size_t copy_out(std::span<const std::uint32_t> xs, uint32_t* buf, size_t cap) {
  for (size_t i = 0; i < xs.size() && i < cap && buf != nullptr; ++i) buf[i] = xs[i];
  return xs.size();
}

}  // namespace

extern "C" {

const char* zf_version(void) { return ZETAFORGE_VERSION; }

const char* zf_status_name(zf_status status) {
  switch (status) {
    case ZF_OK: return "ok";
    case ZF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ZF_ERR_NOT_NUMERICAL: return "not a numerical semigroup";
    case ZF_ERR_EMPTY_GENERATORS: return "empty generator list";
    case ZF_ERR_TRUNCATION_TOO_SHORT: return "truncation too short";
    case ZF_ERR_INVALID_CURVE: return "invalid curve description";
    case ZF_ERR_DECOMPOSITION: return "BPS decomposition failure";
    case ZF_ERR_INVERSION: return "Severi inversion failure";
    case ZF_ERR_NOT_DIVISIBLE: return "not divisible";
    case ZF_ERR_DIVISION_BY_ZERO: return "division by zero";
    case ZF_ERR_UNKNOWN_SINGULARITY: return "unknown singularity type";
    case ZF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* zf_last_error(void) { return last_error.c_str(); }

void zf_string_free(char* s) { std::free(s); }

zf_status zf_semigroup_new(const uint32_t* gens, size_t count, zf_semigroup** out) {
  return guarded([&] {
    require(out != nullptr && (gens != nullptr || count == 0), "null argument");
    *out = new zf_semigroup{NumericalSemigroup::make(std::span<const std::uint32_t>(gens, count))};
  });
}

zf_status zf_semigroup_parse(const char* text, zf_semigroup** out) {
  return guarded([&] {
    require(out != nullptr && text != nullptr, "null argument");
    *out = new zf_semigroup{NumericalSemigroup::parse(text)};
  });
}

void zf_semigroup_free(zf_semigroup* s) { delete s; }

uint32_t zf_semigroup_delta(const zf_semigroup* s) { return s->value.delta(); }

uint32_t zf_semigroup_conductor(const zf_semigroup* s) { return s->value.conductor(); }

uint32_t zf_semigroup_multiplicity(const zf_semigroup* s) { return s->value.multiplicity(); }

int zf_semigroup_contains(const zf_semigroup* s, int64_t n) { return s->value.contains(n) ? 1 : 0; }

size_t zf_semigroup_generators(const zf_semigroup* s, uint32_t* buf, size_t cap) {
  return copy_out(s->value.generators(), buf, cap);
}

size_t zf_semigroup_gaps(const zf_semigroup* s, uint32_t* buf, size_t cap) {
  return copy_out(s->value.gaps(), buf, cap);
}

zf_status zf_semigroup_render(const zf_semigroup* s, zf_format fmt, char** out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = dup_string(report_semigroup(s->value, format_of(fmt)));
  });
}

zf_status zf_semimodule_count(const zf_semigroup* s, uint32_t codim, uint64_t* out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = count_semimodules(s->value, codim);
  });
}

zf_status zf_semimodules_render(const zf_semigroup* s, uint32_t codim, zf_format fmt, char** out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = dup_string(report_semimodules(s->value, codim, format_of(fmt)));
  });
}

zf_status zf_igen_render(const zf_semigroup* s, uint32_t trunc, zf_format fmt, char** out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = dup_string(report_igen(s->value, trunc, format_of(fmt)));
  });
}

zf_status zf_igen_numerator(const zf_semigroup* s, int64_t* buf, size_t cap, size_t* count) {
  return guarded([&] {
    require(s != nullptr && count != nullptr, "null argument");
    const auto gen = igen(s->value, s->value.conductor() + 1);
    const auto cs = gen.numerator.coeffs();
    for (size_t i = 0; i < cs.size() && i < cap && buf != nullptr; ++i) {
      require(cs[i].fits_slong_p(), "coefficient does not fit in int64");
      buf[i] = cs[i].get_si();
    }
    *count = cs.size();
  });
}

zf_status zf_severi_render(const zf_semigroup* s, zf_format fmt, char** out, int* integral) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    bool ok = true;
    *out = dup_string(report_severi(s->value, format_of(fmt), ok));
    if (integral != nullptr) *integral = ok ? 1 : 0;
  });
}

zf_status zf_zeta_render(const char* type, uint32_t expand, const char* at_L, zf_format fmt, char** out) {
  return guarded([&] {
    require(type != nullptr && out != nullptr, "null argument");
    std::optional<Rational> at;
    if (at_L != nullptr) at = parse_rational(at_L);
    *out = dup_string(report_zeta(SingularityType::parse(type), expand, at, format_of(fmt)));
  });
}

zf_status zf_check_main4(const char* type, uint32_t n, int* holds) {
  return guarded([&] {
    require(type != nullptr && holds != nullptr, "null argument");
    *holds = check_theorem_main4(SingularityType::parse(type), n) ? 1 : 0;
  });
}

zf_status zf_fpoly_render(uint32_t i, zf_format fmt, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = dup_string(report_fpoly(i, format_of(fmt)));
  });
}

zf_status zf_gpoly_render(const char* which, zf_format fmt, char** out) {
  return guarded([&] {
    require(which != nullptr && out != nullptr, "null argument");
    *out = dup_string(report_gpoly(which, format_of(fmt)));
  });
}

zf_status zf_verify_w2(uint32_t i, int* holds) {
  return guarded([&] {
    require(holds != nullptr, "null argument");
    *holds = verify_w2(i) ? 1 : 0;
  });
}

zf_status zf_verify_w2_render(uint32_t from, uint32_t to, zf_format fmt, char** out, int* all_hold) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    bool all = true;
    *out = dup_string(report_verify_w2(from, to, format_of(fmt), all));
    if (all_hold != nullptr) *all_hold = all ? 1 : 0;
  });
}

zf_status zf_curve_new(uint32_t genus, const char* sings, zf_curve** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new zf_curve{CurveSpec::parse(genus, sings == nullptr ? "" : sings)};
  });
}

void zf_curve_free(zf_curve* c) { delete c; }

int64_t zf_curve_geometric_genus(const zf_curve* c) { return c->value.geometric_genus(); }

uint32_t zf_curve_default_trunc(const zf_curve* c) { return c->value.default_trunc(); }

zf_status zf_curve_render(const zf_curve* c, uint32_t trunc, zf_format fmt, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "null argument");
    *out = dup_string(report_curve(c->value, trunc, format_of(fmt)));
  });
}

zf_status zf_curve_bps(const zf_curve* c, uint32_t trunc, int64_t* buf, size_t cap, size_t* count) {
  return guarded([&] {
    require(c != nullptr && count != nullptr, "null argument");
    const auto& spec = c->value;
    const std::uint32_t n = trunc == 0 ? spec.default_trunc() : trunc;
    const auto shifted = curve_euler_series(spec, n).shift(1 - static_cast<long>(spec.genus));
    const auto bps = bps_decompose(shifted, spec.genus, spec.geometric_genus());
    size_t i = 0;
    for (const auto& [h, v] : bps) {
      require(v.fits_slong_p(), "BPS number does not fit in int64");
      if (buf != nullptr && i < cap) buf[i] = v.get_si();
      ++i;
    }
    *count = bps.size();
  });
}

zf_status zf_bps_render(const zf_curve* c, uint32_t trunc, zf_format fmt, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "null argument");
    *out = dup_string(report_bps(c->value, trunc, format_of(fmt)));
  });
}

zf_status zf_curve_kawai_match(const zf_curve* c, uint32_t trunc, int* match) {
  return guarded([&] {
    require(c != nullptr && match != nullptr, "null argument");
    const auto& spec = c->value;
    const std::uint32_t n = trunc == 0 ? spec.default_trunc() : trunc;
    const long g = spec.genus;
    const auto shifted = curve_euler_series(spec, n).shift(1 - g);
    *match = agree_through(shifted, kawai_product_series(spec, n), static_cast<long>(n) + 1 - g) ? 1 : 0;
  });
}

zf_status zf_homfly_check_render(uint32_t p, uint32_t q, zf_format fmt, char** out, int* match) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    std::optional<bool> m;
    *out = dup_string(report_homfly_check(p, q, format_of(fmt), m));
    if (match != nullptr) *match = m ? (*m ? 1 : 0) : -1;
  });
}

zf_status zf_selftest_render(zf_format fmt, int quiet, char** out, int* all_passed) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const auto items = run_selftest();
    bool all = true;
    for (const auto& it : items) all = all && it.passed;
    *out = dup_string(report_selftest(items, format_of(fmt), quiet != 0));
    if (all_passed != nullptr) *all_passed = all ? 1 : 0;
  });
}

}  // extern "C"
