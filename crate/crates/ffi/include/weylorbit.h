#ifndef WEYLORBIT_H
#define WEYLORBIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WoStatus {
  WO_STATUS_OK = 0,
  WO_STATUS_NULL_POINTER = 1,
  WO_STATUS_INVALID_ARGUMENT = 2,
  WO_STATUS_UNSUPPORTED = 3,
  WO_STATUS_TYPE_UNAVAILABLE = 4,
  WO_STATUS_OUTSIDE_DOMAIN = 5,
  WO_STATUS_NO_CLOSED_FORM = 6,
  WO_STATUS_BUDGET_EXCEEDED = 7,
  WO_STATUS_TOO_LARGE = 8,
  WO_STATUS_INTERNAL = 9,
} WoStatus;

/**
 * Opaque handle to an algebra with its Weyl group data.
 */
typedef struct WoSystem WoSystem;

/**
 * Opaque handle to a discrete transform on one grid.
 */
typedef struct WoTransform WoTransform;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *wo_last_error(void);

/**
 * Builds the root system named `name` (e.g. `"G2"`).
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum WoStatus wo_system_new(const char *name, struct WoSystem **out);

/**
 * # Safety
 * `sys` must come from [`wo_system_new`] and not be used afterwards.
 */
void wo_system_free(struct WoSystem *sys);

/**
 * # Safety
 * `sys` and `out` must be valid pointers.
 */
enum WoStatus wo_system_rank(const struct WoSystem *sys, size_t *out);

/**
 * Number of points of `F_M` for the named type, by enumeration.
 *
 * # Safety
 * Pointers must be valid; `ftype` NUL-terminated.
 */
enum WoStatus wo_count_points(const struct WoSystem *sys,
                              const char *ftype,
                              int64_t m,
                              uint64_t *out);

/**
 * Number of points of `F_M` from the closed-form expressions.
 *
 * # Safety
 * Pointers must be valid; `ftype` NUL-terminated.
 */
enum WoStatus wo_count_closed_form(const struct WoSystem *sys,
                                   const char *ftype,
                                   int64_t m,
                                   uint64_t *out);

/**
 * `Ψ_t(y)` at the point with ω^∨-coordinates `num[i]/den[i]`.
 *
 * # Safety
 * `label`, `num`, `den` must hold `rank` entries; `out` two doubles.
 */
enum WoStatus wo_eval_psi(const struct WoSystem *sys,
                          const char *ftype,
                          const int64_t *label,
                          const int64_t *num,
                          const int64_t *den,
                          double *out);

/**
 * `ζ_t(y) = Re Ψ_t(y) + Im Ψ_t(y)`; arguments as for [`wo_eval_psi`].
 *
 * # Safety
 * As for [`wo_eval_psi`], with `out` holding one double.
 */
enum WoStatus wo_eval_zeta(const struct WoSystem *sys,
                           const char *ftype,
                           const int64_t *label,
                           const int64_t *num,
                           const int64_t *den,
                           double *out);

/**
 * Builds the transform for the named type on `F_M`.
 *
 * # Safety
 * Pointers must be valid; `ftype` NUL-terminated.
 */
enum WoStatus wo_transform_new(const struct WoSystem *sys,
                               const char *ftype,
                               int64_t m,
                               struct WoTransform **out);

/**
 * # Safety
 * `t` must come from [`wo_transform_new`] and not be used afterwards.
 */
void wo_transform_free(struct WoTransform *t);

/**
 * Number of grid points, which equals the number of labels.
 *
 * # Safety
 * `t` and `out` must be valid pointers.
 */
enum WoStatus wo_transform_len(const struct WoTransform *t, size_t *out);

/**
 * Writes `len × rank` point numerators and, if `reflected` is not null,
 * `len` flags marking points of the reflected part.
 *
 * # Safety
 * `u` must hold `len * rank` entries and `reflected` (if given) `len`.
 */
enum WoStatus wo_transform_points(const struct WoTransform *t, int64_t *u, uint8_t *reflected);

/**
 * Writes `len × rank` label coordinates.
 *
 * # Safety
 * `labels` must hold `len * rank` entries.
 */
enum WoStatus wo_transform_labels(const struct WoTransform *t, int64_t *labels);

/**
 * Expansion coefficients of complex samples (`2·len` doubles each way).
 *
 * # Safety
 * `samples` and `coeffs` must hold `2 * len` doubles.
 */
enum WoStatus wo_transform_forward(const struct WoTransform *t,
                                   const double *samples,
                                   double *coeffs);

/**
 * Values of the interpolant at the grid points (`2·len` doubles each way).
 *
 * # Safety
 * `coeffs` and `samples` must hold `2 * len` doubles.
 */
enum WoStatus wo_transform_inverse(const struct WoTransform *t,
                                   const double *coeffs,
                                   double *samples);

/**
 * Hartley expansion coefficients of real samples.
 *
 * # Safety
 * `samples` and `coeffs` must hold `len` doubles.
 */
enum WoStatus wo_transform_forward_hartley(const struct WoTransform *t,
                                           const double *samples,
                                           double *coeffs);

/**
 * Values of the Hartley interpolant at the grid points.
 *
 * # Safety
 * `coeffs` and `samples` must hold `len` doubles.
 */
enum WoStatus wo_transform_inverse_hartley(const struct WoTransform *t,
                                           const double *coeffs,
                                           double *samples);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WEYLORBIT_H */
