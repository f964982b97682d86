#ifndef GSF_H
#define GSF_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GsfStatus {
  GSF_STATUS_OK = 0,
  GSF_STATUS_NULL_POINTER = 1,
  GSF_STATUS_INVALID_UTF8 = 2,
  GSF_STATUS_SYNTAX = 3,
  GSF_STATUS_INVALID = 4,
  GSF_STATUS_UNSUPPORTED = 5,
  GSF_STATUS_BUFFER_TOO_SMALL = 6,
  GSF_STATUS_INTERNAL = 7,
} GsfStatus;

/**
 * Opaque handle to a validated semigroup.
 */
typedef struct GsfSemigroup GsfSemigroup;

typedef struct GsfMetrics {
  uint64_t length;
  uint64_t genus;
  uint64_t conductor_sum;
  /**
   * 0 when undefined (dimension other than 2, or the whole plane).
   */
  uint64_t type_;
} GsfMetrics;

typedef struct GsfWilf {
  uint64_t edim;
  uint64_t c_s;
  uint64_t genus;
  uint64_t rhs_num;
  uint64_t rhs_den;
  bool holds;
} GsfWilf;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into this library from the same thread.
 */
const char *gsf_last_error(void);

/**
 * Parses and validates a small-element document (text or JSON).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum GsfStatus gsf_semigroup_parse(const char *text, struct GsfSemigroup **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `h` must come from this library and not be used afterwards.
 */
void gsf_semigroup_free(struct GsfSemigroup *h);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum GsfStatus gsf_semigroup_dim(const struct GsfSemigroup *h, size_t *out);

/**
 * Copies the conductor into `out`, which holds `len` entries.
 *
 * # Safety
 * `h` must be a live handle; `out` must hold `len` writable values.
 */
enum GsfStatus gsf_semigroup_conductor(const struct GsfSemigroup *h, uint32_t *out, size_t len);

/**
 * Membership of the finite point `point[0..len]`.
 *
 * # Safety
 * `h` must be a live handle; `point` must hold `len` values.
 */
enum GsfStatus gsf_semigroup_contains(const struct GsfSemigroup *h,
                                      const uint32_t *point,
                                      size_t len,
                                      bool *out);

/**
 * Canonical text form; release with [`gsf_string_free`].
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum GsfStatus gsf_semigroup_to_string(const struct GsfSemigroup *h, char **out);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void gsf_string_free(char *s);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum GsfStatus gsf_semigroup_metrics(const struct GsfSemigroup *h, struct GsfMetrics *out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum GsfStatus gsf_wilf_check(const struct GsfSemigroup *h, struct GsfWilf *out);

/**
 * Writes `n_1..n_max_g` into `out`, which holds `len` entries.
 * `threads == 0` uses every core.
 *
 * # Safety
 * `out` must hold `len` writable values.
 */
enum GsfStatus gsf_count_by_genus(uint64_t max_g, size_t threads, uint64_t *out, size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GSF_H */
