#ifndef CIRCLELAB_H
#define CIRCLELAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ClStatus {
  CL_STATUS_OK = 0,
  // An argument is outside the operation's domain.
  CL_STATUS_DOMAIN = 1,
  // A size cap was exceeded.
  CL_STATUS_RESOURCE = 2,
  // A required pointer was null.
  CL_STATUS_NULL_POINTER = 3,
  // An evaluation failed numerically (NaN, no convergence, inconsistency).
  CL_STATUS_NUMERIC = 4,
  // A Rust panic was caught at the boundary.
  CL_STATUS_INTERNAL = 5,
} ClStatus;

typedef enum ClSumMethod {
  CL_SUM_METHOD_ENUMERATE = 0,
  CL_SUM_METHOD_SIEVE = 1,
  CL_SUM_METHOD_FLOOR_IDENTITY = 2,
} ClSumMethod;

typedef enum ClSampling {
  CL_SAMPLING_INTEGERS = 0,
  CL_SAMPLING_HALF_INTEGERS = 1,
  // Uses the `step` argument of [`cl_sweep_new`].
  CL_SAMPLING_GRID = 2,
} ClSampling;

// Sieved r₂ values. Opaque.
typedef struct ClR2Table ClR2Table;

// A finished sweep. Opaque.
typedef struct ClSweep ClSweep;

typedef struct ClClosedForm {
  double lhs;
  double rhs;
  double residual;
} ClClosedForm;

// One lattice sample. `has_normalized` is 0 at `x = 0`.
typedef struct ClLatticeRecord {
  double x;
  uint64_t count;
  double pi_x;
  double delta;
  double normalized;
  int32_t has_normalized;
} ClLatticeRecord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call on this thread.
const char *cl_last_error(void);

// Library version, NUL-terminated and static.
const char *cl_version(void);

// r₂(n); `n = 0` gives 1.
enum ClStatus cl_r2(uint64_t n, uint64_t *result);

// Σ_{0 ≤ n ≤ x} r₂(n).
//
// `method` is a [`ClSumMethod`] value.
enum ClStatus cl_lattice_count(double x, uint32_t method, uint64_t *result);

// Δ(x) and Δ(x)/x^{1/4} for `x > 0`.
enum ClStatus cl_delta(double x, double *delta, double *normalized);

// Sieves r₂ over `0..=limit`. Free with [`cl_r2_table_free`].
enum ClStatus cl_r2_table_new(uint64_t limit, struct ClR2Table **table);

// Releases a table; null is ignored.
void cl_r2_table_free(struct ClR2Table *table);

enum ClStatus cl_r2_table_limit(const struct ClR2Table *table, uint64_t *limit);

enum ClStatus cl_r2_table_get(const struct ClR2Table *table, uint64_t n, uint32_t *value);

// J₁(z) with the default evaluation policy.
enum ClStatus cl_bessel_j1(double z, double *result);

// Fresnel integrals `C(z)`, `S(z)`.
enum ClStatus cl_fresnel(double z, double *c, double *s);

// `E_order(re + i·im)`.
enum ClStatus cl_expint(double order, double re, double im, double *out_re, double *out_im);

// Truncated Hardy–Voronoi series; `table` must cover `terms`.
enum ClStatus cl_voronoi_partial(double x,
                                 uint64_t terms,
                                 const struct ClR2Table *table,
                                 double *result);

// `Σ_{n ≤ terms} r₂(n) cos(2π√(nx) + π/4)/n^{3/4}`.
enum ClStatus cl_s_partial(double x, uint64_t terms, const struct ClR2Table *table, double *result);

// `Σ_{n ≤ terms} cos(2π√(nx) + π/4)/n^{3/4−delta}`.
enum ClStatus cl_d_partial(double x, uint64_t terms, double delta, double *result);

enum ClStatus cl_fresnel_closed_form(double a, uint64_t m, struct ClClosedForm *result);

enum ClStatus cl_expint_closed_form(double eps, double x, double y, struct ClClosedForm *result);

enum ClStatus cl_sqrt_closed_form(double x, uint64_t m, struct ClClosedForm *result);

// Runs a sweep; `sampling` is a [`ClSampling`] value and `step` is read
// only for grid sampling. Free with [`cl_sweep_free`].
enum ClStatus cl_sweep_new(double x_start,
                           double x_end,
                           uint32_t sampling,
                           double step,
                           uint32_t workers,
                           struct ClSweep **sweep);

void cl_sweep_free(struct ClSweep *sweep);

enum ClStatus cl_sweep_len(const struct ClSweep *sweep, uint64_t *len);

enum ClStatus cl_sweep_record(const struct ClSweep *sweep,
                              uint64_t index,
                              struct ClLatticeRecord *record);

// Maximum of |Δ(x)|/x^{1/4} over the sweep and where it occurs.
enum ClStatus cl_sweep_max(const struct ClSweep *sweep, double *value, double *x);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CIRCLELAB_H */
