#ifndef ZETAFORGE_H
#define ZETAFORGE_H

/*
 * C interface to libzetaforge.
 *
 * Objects are opaque handles created by the _new and _parse calls and released
 * with the matching _free. Every fallible call returns a zf_status; on failure a
 * one-line diagnostic is available from zf_last_error() on the same thread.
 * Strings returned through `char** out` are owned by the caller and must be
 * released with zf_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ZETAFORGE_BUILDING)
#    define ZF_API __declspec(dllexport)
#  else
#    define ZF_API __declspec(dllimport)
#  endif
#else
#  define ZF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zf_status {
  ZF_OK = 0,
  ZF_ERR_INVALID_ARGUMENT = 1,
  ZF_ERR_NOT_NUMERICAL = 2,
  ZF_ERR_EMPTY_GENERATORS = 3,
  ZF_ERR_TRUNCATION_TOO_SHORT = 4,
  ZF_ERR_INVALID_CURVE = 5,
  ZF_ERR_DECOMPOSITION = 6,
  ZF_ERR_INVERSION = 7,
  ZF_ERR_NOT_DIVISIBLE = 8,
  ZF_ERR_DIVISION_BY_ZERO = 9,
  ZF_ERR_UNKNOWN_SINGULARITY = 10,
  ZF_ERR_INTERNAL = 99
} zf_status;

typedef enum zf_format {
  ZF_FORMAT_TEXT = 0,
  ZF_FORMAT_JSON = 1,
  ZF_FORMAT_LATEX = 2
} zf_format;

typedef struct zf_semigroup zf_semigroup;
typedef struct zf_curve zf_curve;

ZF_API const char* zf_version(void);
ZF_API const char* zf_status_name(zf_status status);
/* Diagnostic for the last failing call on this thread ("" if none). */
ZF_API const char* zf_last_error(void);
ZF_API void zf_string_free(char* s);

/* Numerical semigroups */
ZF_API zf_status zf_semigroup_new(const uint32_t* gens, size_t count, zf_semigroup** out);
/* Textual form "3,4". */
ZF_API zf_status zf_semigroup_parse(const char* text, zf_semigroup** out);
ZF_API void zf_semigroup_free(zf_semigroup* s);
ZF_API uint32_t zf_semigroup_delta(const zf_semigroup* s);
ZF_API uint32_t zf_semigroup_conductor(const zf_semigroup* s);
ZF_API uint32_t zf_semigroup_multiplicity(const zf_semigroup* s);
ZF_API int zf_semigroup_contains(const zf_semigroup* s, int64_t n);
/* Copy up to `cap` values into buf; returns the total count. */
ZF_API size_t zf_semigroup_generators(const zf_semigroup* s, uint32_t* buf, size_t cap);
ZF_API size_t zf_semigroup_gaps(const zf_semigroup* s, uint32_t* buf, size_t cap);
ZF_API zf_status zf_semigroup_render(const zf_semigroup* s, zf_format fmt, char** out);

/* Semimodules and I(Γ;q) */
ZF_API zf_status zf_semimodule_count(const zf_semigroup* s, uint32_t codim, uint64_t* out);
ZF_API zf_status zf_semimodules_render(const zf_semigroup* s, uint32_t codim, zf_format fmt, char** out);
/* trunc = 0 selects the default order and omits the series from text output. */
ZF_API zf_status zf_igen_render(const zf_semigroup* s, uint32_t trunc, zf_format fmt, char** out);
/* Coefficients of (1-q)·I(Γ;q), constant term first; returns ZF_OK and the
   degree + 1 in *count (values beyond cap are not written). */
ZF_API zf_status zf_igen_numerator(const zf_semigroup* s, int64_t* buf, size_t cap, size_t* count);

/* Severi degrees; *integral is set to 0 when some degree is not an integer. */
ZF_API zf_status zf_severi_render(const zf_semigroup* s, zf_format fmt, char** out, int* integral);

/* Zeta functions. type: "A1", "A2d(3)", "A6", "E6", "E8". expand = 0 skips the
   per-l classes; at_L may be NULL or a rational such as "1". */
ZF_API zf_status zf_zeta_render(const char* type, uint32_t expand, const char* at_L, zf_format fmt, char** out);
/* Z(q,1) against I(Γ;q) through order n for a unibranch type. */
ZF_API zf_status zf_check_main4(const char* type, uint32_t n, int* holds);

/* F_i / G_i polynomials and identities. `which` is "i", "E6" or "E8". */
ZF_API zf_status zf_fpoly_render(uint32_t i, zf_format fmt, char** out);
ZF_API zf_status zf_gpoly_render(const char* which, zf_format fmt, char** out);
ZF_API zf_status zf_verify_w2(uint32_t i, int* holds);
ZF_API zf_status zf_verify_w2_render(uint32_t from, uint32_t to, zf_format fmt, char** out, int* all_hold);

/* Global curves. sings: "A1:2,A2d(3):1,E6:1" (empty for a smooth curve). */
ZF_API zf_status zf_curve_new(uint32_t genus, const char* sings, zf_curve** out);
ZF_API void zf_curve_free(zf_curve* c);
ZF_API int64_t zf_curve_geometric_genus(const zf_curve* c);
ZF_API uint32_t zf_curve_default_trunc(const zf_curve* c);
/* trunc = 0 selects zf_curve_default_trunc(). */
ZF_API zf_status zf_curve_render(const zf_curve* c, uint32_t trunc, zf_format fmt, char** out);
/* n_h for h = g̃ .. g written to buf[h - g̃]; *count = g - g̃ + 1. Fails with
   ZF_ERR_INVALID_ARGUMENT if a value does not fit in int64. */
ZF_API zf_status zf_curve_bps(const zf_curve* c, uint32_t trunc, int64_t* buf, size_t cap, size_t* count);
ZF_API zf_status zf_bps_render(const zf_curve* c, uint32_t trunc, zf_format fmt, char** out);
/* Generalized product formula against the local-zeta product, through order trunc. */
ZF_API zf_status zf_curve_kawai_match(const zf_curve* c, uint32_t trunc, int* match);

/* HOMFLY bottom row of T(p,q). *match is 1/0, or -1 when no oracle exists. */
ZF_API zf_status zf_homfly_check_render(uint32_t p, uint32_t q, zf_format fmt, char** out, int* match);

/* Identity suite; quiet hides passing items in text output. */
ZF_API zf_status zf_selftest_render(zf_format fmt, int quiet, char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* ZETAFORGE_H */
