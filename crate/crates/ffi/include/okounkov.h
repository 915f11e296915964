#ifndef OKOUNKOV_H
#define OKOUNKOV_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every exported call.
 */
typedef enum OkStatus {
  OK_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  OK_STATUS_NULL_POINTER = 1,
  /**
   * Malformed input: bad UTF-8 or JSON, wrong shape, unknown name.
   */
  OK_STATUS_INVALID_INPUT = 2,
  /**
   * Well-formed input violating a mathematical precondition.
   */
  OK_STATUS_PRECONDITION = 3,
  /**
   * Internal invariant failure or a caught panic.
   */
  OK_STATUS_INTERNAL = 4,
} OkStatus;

/**
 * A blown-up plane, its curve list and a class `L`.
 */
typedef struct OkSurface OkSurface;

/**
 * A smooth lattice polytope with chosen vertices.
 */
typedef struct OkToric OkToric;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or NULL. Owned by the
 * library and valid until the next failing call on the same thread.
 */
const char *ok_last_error(void);

/**
 * Library version as a static string.
 */
const char *ok_version(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ok_string_free(char *s);

/**
 * Parses `{"vertices": [...], "chosen": [...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum OkStatus ok_toric_new(const char *json, struct OkToric **out);

/**
 * # Safety
 * `h` must come from [`ok_toric_new`] and not have been freed. NULL is ignored.
 */
void ok_toric_free(struct OkToric *h);

/**
 * Number of chosen vertices.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OkStatus ok_toric_num_points(const struct OkToric *h, size_t *out);

/**
 * Body at the `j`-th chosen vertex as polytope JSON.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OkStatus ok_toric_body_json(const struct OkToric *h, size_t j, char **out);

/**
 * Euclidean volume of the `j`-th body as `"p/q"`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OkStatus ok_toric_body_volume(const struct OkToric *h, size_t j, char **out);

/**
 * Closed-form Seshadri constant from edge lengths, as `"p/q"`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OkStatus ok_toric_seshadri(const struct OkToric *h, char **out);

/**
 * Largest `t` with `t * Sigma_n` inside every body, as `"p/q"`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OkStatus ok_toric_xi(const struct OkToric *h, char **out);

/**
 * Whether `n!` times the total body volume equals `n! * vol(P)`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OkStatus ok_toric_volume_check(const struct OkToric *h, bool *out);

/**
 * Parses `{"N": .., "curves": .., "L": [..], "rays": ..}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum OkStatus ok_surface_new(const char *json, struct OkSurface **out);

/**
 * # Safety
 * `h` must come from [`ok_surface_new`] and not have been freed. NULL is ignored.
 */
void ok_surface_free(struct OkSurface *h);

/**
 * Zariski decomposition of `L` as JSON.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OkStatus ok_surface_zariski_json(const struct OkSurface *h, char **out);

/**
 * Body over the `j`-th exceptional curve, with breakpoints and slice profile, as JSON.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OkStatus ok_surface_body_json(const struct OkSurface *h, size_t j, char **out);

/**
 * Simplex-fit constant of the bodies over all points, as `"p/q"`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OkStatus ok_surface_xi(const struct OkSurface *h, char **out);

/**
 * Runs a whole pipeline (`"toric"`, `"surface"`, `"semigroup"`, `"seshadri"`
 * or `"check"`) on an input document and returns the JSON report.
 * `k_max` of 0 means the default. Failed checks are reported inside the
 * document, not through the status.
 *
 * # Safety
 * `mode` and `input_json` must be NUL-terminated strings; `out` must be writable.
 */
enum OkStatus ok_run_json(const char *mode, const char *input_json, uint32_t k_max, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OKOUNKOV_H */
