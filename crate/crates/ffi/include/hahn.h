#ifndef HAHN_H
#define HAHN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HahnStatus {
  HAHN_STATUS_OK = 0,
  HAHN_STATUS_NULL_POINTER = 1,
  // Parameters or arguments outside their domain.
  HAHN_STATUS_DOMAIN = 2,
  HAHN_STATUS_DEGREE_OUT_OF_RANGE = 3,
  HAHN_STATUS_LENGTH_MISMATCH = 4,
  // Any other numerical failure.
  HAHN_STATUS_NUMERIC = 5,
  HAHN_STATUS_PANIC = 6,
} HahnStatus;

// Truncated expansion `sum c_n Q~_n` produced by `hahn_family_project`.
typedef struct HahnExpansion HahnExpansion;

// Hahn family for fixed `alpha`, `beta`, `N`, with weights, norms and the
// normalized polynomials on the grid precomputed.
typedef struct HahnFamily HahnFamily;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Create a family. Requires `alpha, beta > -1` and `n_max >= 1`.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum HahnStatus hahn_family_new(double alpha, double beta, size_t n_max, struct HahnFamily **out);

// # Safety
// `family` must be null or a handle from `hahn_family_new` not yet freed.
void hahn_family_free(struct HahnFamily *family);

// Number of grid points, `N + 1`; 0 for a null handle.
//
// # Safety
// `family` must be null or a live handle.
size_t hahn_family_grid_len(const struct HahnFamily *family);

// `Q_n(x)`, or the unit-norm `Q~_n(x)` when `normalized` is true, at any
// real `x`.
//
// # Safety
// `family` must be a live handle and `out` writable.
enum HahnStatus hahn_family_eval(const struct HahnFamily *family,
                                 size_t degree,
                                 double x,
                                 bool normalized,
                                 double *out);

// Copy `omega(0..=N)` into `out`, which must hold exactly `N + 1` values.
//
// # Safety
// `family` must be a live handle and `out` valid for `len` writes.
enum HahnStatus hahn_family_weights(const struct HahnFamily *family, double *out, size_t len);

// Squared norm of the unnormalized `Q_n`.
//
// # Safety
// `family` must be a live handle and `out` writable.
enum HahnStatus hahn_family_norm_sq(const struct HahnFamily *family, size_t degree, double *out);

// Project grid data `values[0..=N]` onto degrees `0..=m`.
//
// # Safety
// `family` must be a live handle, `values` valid for `len` reads and `out`
// writable. The returned handle is released with `hahn_expansion_free`.
enum HahnStatus hahn_family_project(const struct HahnFamily *family,
                                    const double *values,
                                    size_t len,
                                    size_t m,
                                    struct HahnExpansion **out);

// # Safety
// `expansion` must be null or a live handle.
void hahn_expansion_free(struct HahnExpansion *expansion);

// Truncation degree `m`; the expansion has `m + 1` coefficients.
//
// # Safety
// `expansion` must be a live handle.
size_t hahn_expansion_degree(const struct HahnExpansion *expansion);

// Copy the coefficients against the unit-norm basis, or against `Q_n`
// when `normalized` is false. `out` must hold exactly `m + 1` values.
//
// # Safety
// `expansion` must be a live handle and `out` valid for `len` writes.
enum HahnStatus hahn_expansion_coeffs(const struct HahnExpansion *expansion,
                                      bool normalized,
                                      double *out,
                                      size_t len);

// Evaluate the expansion at a real grid coordinate `x`.
//
// # Safety
// `expansion` must be a live handle and `out` writable.
enum HahnStatus hahn_expansion_eval(const struct HahnExpansion *expansion, double x, double *out);

// Copy the calling thread's last error message into `buf` (NUL
// terminated, truncated to fit). Returns the full message length without
// the terminator, or 0 when there is none. Pass a null `buf` to query the
// length.
//
// # Safety
// `buf` must be null or valid for `cap` writes.
size_t hahn_last_error_message(char *buf, size_t cap);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HAHN_H */
