#ifndef OCTANT_COVER_H
#define OCTANT_COVER_H

/* Generated by cbindgen from crates/capi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OcStatus {
  OC_STATUS_OK = 0,
  OC_STATUS_NULL_POINTER = 1,
  OC_STATUS_INVALID_INPUT = 2,
  OC_STATUS_BUDGET_EXHAUSTED = 3,
  OC_STATUS_OVERFLOW = 4,
  OC_STATUS_CONTRACT_VIOLATION = 5,
  OC_STATUS_NOT_FOUND = 6,
} OcStatus;

/**
 * Opaque coloring, keyed by point id.
 */
typedef struct OcColoring OcColoring;

/**
 * Opaque ordered planar point set.
 */
typedef struct OcPointSet OcPointSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread. Valid until the next
 * failing call on the same thread; never null.
 */
const char *oc_last_error(void);

/**
 * Parse an instance in the `x y z` text format and reduce it to an
 * ordered planar set.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum OcStatus oc_pointset_parse(const char *text, struct OcPointSet **out);

/**
 * Build a set from rank arrays: point `i` has x-rank `xs[i]`, y-rank
 * `ys[i]`, arrival time `i + 1` and id `i`.
 *
 * # Safety
 * `xs` and `ys` must point to `n` readable values; `out` must be writable.
 */
enum OcStatus oc_pointset_from_ranks(const uint32_t *xs,
                                     const uint32_t *ys,
                                     size_t n,
                                     struct OcPointSet **out);

/**
 * Number of points; 0 for a null handle.
 *
 * # Safety
 * `set` must be null or a live handle.
 */
size_t oc_pointset_len(const struct OcPointSet *set);

/**
 * # Safety
 * `set` must be null or a handle not yet freed.
 */
void oc_pointset_free(struct OcPointSet *set);

/**
 * Color `set` with colors `1..=k`.
 *
 * # Safety
 * `set` must be a live handle; `out` must be writable.
 */
enum OcStatus oc_color_set(const struct OcPointSet *set,
                           size_t k,
                           uint64_t node_budget,
                           struct OcColoring **out);

/**
 * Proper 4-coloring of the wedge graph of `set`.
 *
 * # Safety
 * `set` must be a live handle; `out` must be writable.
 */
enum OcStatus oc_wedge_four_color(const struct OcPointSet *set, struct OcColoring **out);

/**
 * Color of point `id`.
 *
 * # Safety
 * `coloring` must be a live handle; `color` must be writable.
 */
enum OcStatus oc_coloring_get(const struct OcColoring *coloring, size_t id, uint32_t *color);

/**
 * # Safety
 * `coloring` must be null or a live handle.
 */
size_t oc_coloring_len(const struct OcColoring *coloring);

/**
 * # Safety
 * `coloring` must be null or a handle not yet freed.
 */
void oc_coloring_free(struct OcColoring *coloring);

/**
 * Count wedges whose first `m` arrivals show fewer than `d` colors.
 *
 * # Safety
 * Handles must be live; `violations` must be writable.
 */
enum OcStatus oc_verify(const struct OcPointSet *set,
                        const struct OcColoring *coloring,
                        size_t m,
                        size_t d,
                        size_t *violations);

/**
 * Smallest `m` at which the coloring passes with `d` distinct colors.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum OcStatus oc_empirical_min_threshold(const struct OcPointSet *set,
                                         const struct OcColoring *coloring,
                                         size_t d,
                                         size_t *out);

/**
 * `m(k)` as a 64-bit integer; `OVERFLOW` from `k = 5` on.
 *
 * # Safety
 * `out` must be writable.
 */
enum OcStatus oc_threshold(uint32_t k, uint64_t *out);

/**
 * Decimal digits of `m(k)` as a new string; release with [`oc_string_free`].
 */
char *oc_threshold_string(uint32_t k);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void oc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OCTANT_COVER_H */
