#ifndef CASSINI_H
#define CASSINI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CassiniStatus {
  CASSINI_STATUS_OK = 0,
  CASSINI_STATUS_NULL_POINTER = 1,
  CASSINI_STATUS_DIMENSION = 2,
  CASSINI_STATUS_ON_BOUNDARY = 3,
  CASSINI_STATUS_OUT_OF_RANGE = 4,
  CASSINI_STATUS_CONFIG = 5,
  CASSINI_STATUS_INVALID_INPUT = 6,
  CASSINI_STATUS_IO = 7,
  // An internal panic was caught at the boundary.
  CASSINI_STATUS_PANIC = 8,
  // A buffer passed by the caller is too small.
  CASSINI_STATUS_BUFFER_TOO_SMALL = 9,
} CassiniStatus;

enum CassiniRegime
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : uint32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  CASSINI_REGIME_SECTOR = 0,
  CASSINI_REGIME_PINCHED = 1,
  CASSINI_REGIME_ANNULAR = 2,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum CassiniRegime CassiniRegime;
#else
typedef uint32_t CassiniRegime;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

// Metric selector for [`cassini_metric`].
enum CassiniMetric
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : uint32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  CASSINI_METRIC_TAU_HAT = 0,
  CASSINI_METRIC_TAU_TILDE = 1,
  CASSINI_METRIC_U = 2,
  CASSINI_METRIC_J_TILDE = 3,
  CASSINI_METRIC_J = 4,
  CASSINI_METRIC_J_STAR = 5,
  CASSINI_METRIC_S = 6,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum CassiniMetric CassiniMetric;
#else
typedef uint32_t CassiniMetric;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

// Inequality selector for [`cassini_check_theorem`] and [`cassini_sharpness`].
enum CassiniTheorem
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : uint32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  CASSINI_THEOREM_TAU_U = 0,
  CASSINI_THEOREM_TAU_HAT_U = 1,
  CASSINI_THEOREM_TAU_J_TILDE = 2,
  CASSINI_THEOREM_TAU_HAT_J_TILDE = 3,
  CASSINI_THEOREM_TAU_J = 4,
  CASSINI_THEOREM_TAU_HAT_J = 5,
  CASSINI_THEOREM_TANH_J_STAR = 6,
  CASSINI_THEOREM_S_TAU = 7,
  CASSINI_THEOREM_DENSITY_ONCE = 8,
  CASSINI_THEOREM_DENSITY_AVG = 9,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum CassiniTheorem CassiniTheorem;
#else
typedef uint32_t CassiniTheorem;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

enum CassiniEndpoint
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : uint32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  CASSINI_ENDPOINT_TO_ZERO = 0,
  CASSINI_ENDPOINT_TO_ONE = 1,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum CassiniEndpoint CassiniEndpoint;
#else
typedef uint32_t CassiniEndpoint;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

// Opaque sampled ball boundary.
typedef struct CassiniCurve CassiniCurve;

// Opaque punctured domain.
typedef struct CassiniDomain CassiniDomain;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Length in bytes of the last error message on this thread, excluding the NUL.
size_t cassini_last_error_length(void);

// Copies the last error message, NUL-terminated, into `buf`.
//
// # Safety
// `buf` must be valid for `cap` bytes of writes.
enum CassiniStatus cassini_last_error_message(char *buf, size_t cap);

// Creates `R^dim` minus `n_punctures` points read row-major from `coords`.
//
// # Safety
// `coords` must hold `n_punctures * dim` doubles; `out` must be writable.
enum CassiniStatus cassini_domain_new(const double *coords,
                                      size_t n_punctures,
                                      size_t dim,
                                      struct CassiniDomain **out);

// # Safety
// `domain` must come from [`cassini_domain_new`] and not be used afterwards.
void cassini_domain_free(struct CassiniDomain *domain);

// # Safety
// `domain` must be a live handle; `out` must be writable.
enum CassiniStatus cassini_domain_dim(const struct CassiniDomain *domain, size_t *out);

// Evaluates a metric of the domain at `x`, `y`, each of the domain's dimension.
//
// # Safety
// `domain` must be a live handle, `x` and `y` must hold `dim` doubles.
enum CassiniStatus cassini_metric(const struct CassiniDomain *domain,
                                  uint32_t metric,
                                  const double *x,
                                  const double *y,
                                  double *out);

// `tau_p(x, y)` in `R^dim \ {p}`.
//
// # Safety
// `p`, `x`, `y` must hold `dim` doubles; `out` must be writable.
enum CassiniStatus cassini_tau_p(const double *p,
                                 const double *x,
                                 const double *y,
                                 size_t dim,
                                 double *out);

// Checks every side of an inequality at `(x, y)`. `holds` is set when all
// sides hold, `min_slack` to the smallest `rhs - lhs`.
//
// # Safety
// `domain` must be a live handle; `x`, `y` must hold `dim` doubles; outputs writable.
enum CassiniStatus cassini_check_theorem(const struct CassiniDomain *domain,
                                         uint32_t theorem_code,
                                         const double *x,
                                         const double *y,
                                         bool *holds,
                                         double *min_slack);

// Roots `t1 <= t2` of the ball boundary of radius `r` centred at `e1` along
// angle `theta`. `has_roots` is false when the ray misses the boundary.
//
// # Safety
// Outputs must be writable.
enum CassiniStatus cassini_polar_roots(double r,
                                       double theta,
                                       bool *has_roots,
                                       double *t1,
                                       double *t2);

// Convexity of the ball of radius `r` from `n_samples` boundary points.
//
// # Safety
// Outputs must be writable.
enum CassiniStatus cassini_classify_convexity(double r,
                                              size_t n_samples,
                                              double tol,
                                              bool *convex,
                                              double *max_reverse_turn);

// Samples the boundary of the ball of radius `r` centred at `e1` in `R^2 \ {0}`.
//
// # Safety
// `out` must be writable.
enum CassiniStatus cassini_curve_new(double r, size_t n_samples, struct CassiniCurve **out);

// Like [`cassini_curve_new`] with a radius token such as `"log5"` or `"0.8"`,
// which keeps `log x` radii exact.
//
// # Safety
// `radius` must be a NUL-terminated string; `out` must be writable.
enum CassiniStatus cassini_curve_new_parsed(const char *radius,
                                            size_t n_samples,
                                            struct CassiniCurve **out);

// # Safety
// `curve` must come from a `cassini_curve_new*` call and not be used afterwards.
void cassini_curve_free(struct CassiniCurve *curve);

// # Safety
// `curve` must be a live handle; `out` must be writable.
enum CassiniStatus cassini_curve_regime(const struct CassiniCurve *curve, CassiniRegime *out);

// # Safety
// `curve` must be a live handle; `out` must be writable.
enum CassiniStatus cassini_curve_component_count(const struct CassiniCurve *curve, size_t *out);

// Number of samples in one component.
//
// # Safety
// `curve` must be a live handle; `out` must be writable.
enum CassiniStatus cassini_curve_component_len(const struct CassiniCurve *curve,
                                               size_t component,
                                               size_t *out);

// Copies the `(x, y)` samples of one component into `xs` and `ys`.
//
// # Safety
// `xs` and `ys` must be valid for `cap` doubles of writes.
enum CassiniStatus cassini_curve_component_points(const struct CassiniCurve *curve,
                                                  size_t component,
                                                  double *xs,
                                                  double *ys,
                                                  size_t cap);

// Extrapolated and claimed limits of the sharpness family of `theorem_code`
// toward `endpoint`, sampled down to distance `gap_min` from it.
//
// # Safety
// Outputs must be writable.
enum CassiniStatus cassini_sharpness(uint32_t theorem_code,
                                     uint32_t endpoint,
                                     double gap_min,
                                     double *extrapolated,
                                     double *claimed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CASSINI_H */
