/* C interface of the catalan-log library. Generated by cbindgen; do not edit. */

#ifndef CATALAN_LOG_H
#define CATALAN_LOG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every C-ABI call.
 */
typedef enum CatlogStatus {
  CATLOG_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  CATLOG_STATUS_NULL_ARGUMENT = 1,
  /**
   * An argument was outside its domain (for example lambda = 0, or the
   * harmonic route with lambda != 2 or p = 0).
   */
  CATLOG_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A coefficient index beyond the series truncation order.
   */
  CATLOG_STATUS_OUT_OF_RANGE = 3,
} CatlogStatus;

/**
 * Which of the three routes computes (log C_lambda)^p.
 */
typedef enum CatlogRoute {
  CATLOG_ROUTE_DIRECT = 0,
  CATLOG_ROUTE_STIRLING = 1,
  CATLOG_ROUTE_HARMONIC = 2,
} CatlogRoute;

/**
 * Verification suite selector, mirroring the CLI `verify --suite` values.
 */
typedef enum CatlogSuite {
  CATLOG_SUITE_ALL = 0,
  CATLOG_SUITE_ROUTES = 1,
  CATLOG_SUITE_KNUTH = 2,
  CATLOG_SUITE_ALTERNATING = 3,
  CATLOG_SUITE_GRUNBERG = 4,
  CATLOG_SUITE_FUNCTIONAL_EQUATION = 5,
} CatlogSuite;

/**
 * Opaque handle to a truncated series with exact rational coefficients.
 */
typedef struct CatlogSeries CatlogSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Catalan generating function C(z) truncated at `order`.
 *
 * # Safety
 * `out` must be a valid pointer to a `CatlogSeries*`.
 */
enum CatlogStatus catlog_series_catalan(uintptr_t order, struct CatlogSeries **out);

/**
 * Generalized Catalan series C_lambda(z) truncated at `order`.
 *
 * # Safety
 * `out` must be a valid pointer to a `CatlogSeries*`.
 */
enum CatlogStatus catlog_series_fuss_catalan(uint32_t lambda,
                                             uintptr_t order,
                                             struct CatlogSeries **out);

/**
 * u(z)^m for u = z(1+u)^lambda, from the Lagrange-inversion closed form.
 *
 * # Safety
 * `out` must be a valid pointer to a `CatlogSeries*`.
 */
enum CatlogStatus catlog_series_u_power(uint32_t m,
                                        uint32_t lambda,
                                        uintptr_t order,
                                        struct CatlogSeries **out);

/**
 * (log C_lambda(z))^p by the chosen route. The harmonic route requires
 * lambda = 2 and p >= 1.
 *
 * # Safety
 * `out` must be a valid pointer to a `CatlogSeries*`.
 */
enum CatlogStatus catlog_series_log_pow(enum CatlogRoute route,
                                        uint32_t p,
                                        uint32_t lambda,
                                        uintptr_t order,
                                        struct CatlogSeries **out);

/**
 * The harmonic-number closed form for (log C)^2.
 *
 * # Safety
 * `out` must be a valid pointer to a `CatlogSeries*`.
 */
enum CatlogStatus catlog_series_knuth_rhs(uintptr_t order, struct CatlogSeries **out);

/**
 * Truncation order of a series handle.
 *
 * # Safety
 * `series` must be a live handle from this library; `out` must be valid.
 */
enum CatlogStatus catlog_series_order(const struct CatlogSeries *series, uintptr_t *out);

/**
 * Coefficient of z^n as a lowest-terms string; free it with
 * `catlog_string_free`.
 *
 * # Safety
 * `series` must be a live handle from this library; `out` must be valid.
 */
enum CatlogStatus catlog_series_coeff(const struct CatlogSeries *series, uintptr_t n, char **out);

/**
 * c(n+1, r+1)/n! from harmonic numbers and partitions, as a lowest-terms
 * string; free it with `catlog_string_free`.
 *
 * # Safety
 * `out` must be a valid pointer to a `char*`.
 */
enum CatlogStatus catlog_grunberg_stirling(uintptr_t n, uintptr_t r, char **out);

/**
 * Runs a verification suite. `lambdas`/`lambdas_len` select the branching
 * parameters for the route sweeps (pass a single 2 for the classical case).
 * `out_passed` receives whether every report passed; when `out_json` is
 * non-null it receives the full report document (free with
 * `catlog_string_free`).
 *
 * # Safety
 * `lambdas` must point to `lambdas_len` readable u32 values (it may be null
 * only when `lambdas_len` is 0); `out_passed` must be valid.
 */
enum CatlogStatus catlog_verify(enum CatlogSuite suite,
                                uint32_t pmax,
                                const uint32_t *lambdas,
                                uintptr_t lambdas_len,
                                uintptr_t order,
                                uintptr_t nmax,
                                uintptr_t rmax,
                                bool *out_passed,
                                char **out_json);

/**
 * Frees a series handle. Null is ignored.
 *
 * # Safety
 * `series` must be null or a handle returned by this library, not yet freed.
 */
void catlog_series_free(struct CatlogSeries *series);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void catlog_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CATALAN_LOG_H */
