#ifndef RAMSEYFORGE_H
#define RAMSEYFORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RfStatus {
  RF_STATUS_OK = 0,
  RF_STATUS_PARAMETER = 1,
  RF_STATUS_DOMAIN = 2,
  RF_STATUS_DEGENERATE_BRIDGE = 3,
  RF_STATUS_SIZE_LIMIT = 4,
  RF_STATUS_NOT_PROPER = 5,
  RF_STATUS_PARSE = 6,
  RF_STATUS_INTERNAL = 7,
  RF_STATUS_NULL_POINTER = 8,
  RF_STATUS_INVALID_UTF8 = 9,
  RF_STATUS_PANIC = 10,
} RfStatus;

/*
 A proper coloring of a shift graph.
 */
typedef struct RfShiftColoring RfShiftColoring;

/*
 A 2-coloring of `Z_c^n`.
 */
typedef struct RfVectorColoring RfVectorColoring;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static NUL-terminated string.
 */
const char *rf_version(void);

/*
 Message for the last failed call on this thread, or null. Valid until the
 next call into the library from this thread.
 */
const char *rf_last_error(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void rf_string_free(char *s);

/*
 The key coloring of `Z_3^4` at `coords[0..4]`, written to `out_color`
 as 1 or 2.

 # Safety
 `coords` must point to `n` readable bytes and `out_color` be writable.
 */
enum RfStatus rf_chi_key(const uint8_t *coords, size_t n, uint8_t *out_color);

/*
 A new handle holding the key coloring of `Z_3^4`.
 */
struct RfVectorColoring *rf_vector_coloring_key(void);

/*
 A coloring of `Z_c^n` from `c^n` colors in {1, 2}, indexed with the first
 coordinate most significant.

 # Safety
 `colors` must point to `len` readable bytes and `out` be writable.
 */
enum RfStatus rf_vector_coloring_new(size_t n,
                                     uint8_t c,
                                     const uint8_t *colors,
                                     size_t len,
                                     struct RfVectorColoring **out);

/*
 Number of vectors (`c^n`) colored by `h`, or 0 for null.

 # Safety
 `h` must be null or a live handle.
 */
size_t rf_vector_coloring_len(const struct RfVectorColoring *h);

/*
 Copies the colors of `h` into `buf[0..len]`; `len` must equal
 [`rf_vector_coloring_len`].

 # Safety
 `h` must be a live handle and `buf` point to `len` writable bytes.
 */
enum RfStatus rf_vector_coloring_colors(const struct RfVectorColoring *h, uint8_t *buf, size_t len);

/*
 # Safety
 `h` must be null or a handle not yet freed.
 */
void rf_vector_coloring_free(struct RfVectorColoring *h);

/*
 Scans all bridges of the coloring's space. Sets `*out_found`; when a
 monochromatic bridge exists and `out_a`/`out_b` are non-null, its
 endpoints are written there (`n` bytes each).

 # Safety
 `h` must be a live handle; `out_a` and `out_b` null or `n` writable bytes.
 */
enum RfStatus rf_has_mono_bridge(const struct RfVectorColoring *h,
                                 size_t workers,
                                 bool *out_found,
                                 uint8_t *out_a,
                                 uint8_t *out_b);

/*
 Decides 2-colorability of the bridge hypergraph over `Z_c^n`. When
 colorable and `out_certificate` is non-null, a certificate handle is
 stored there; otherwise it is set to null.

 # Safety
 `out_colorable` must be writable; `out_certificate` null or writable.
 */
enum RfStatus rf_bridge_2colorable(size_t n,
                                   uint8_t c,
                                   bool *out_colorable,
                                   struct RfVectorColoring **out_certificate);

/*
 The plain not-all-equal CNF of the bridge hypergraph as DIMACS text.

 # Safety
 `out` must be writable; free the result with [`rf_string_free`].
 */
enum RfStatus rf_bridge_dimacs(size_t n, uint8_t c, char **out);

/*
 Searches for a proper `c`-coloring of `Sh(n, k)`. Stores a handle in
 `*out`, or null when none exists.

 # Safety
 `out` must be writable.
 */
enum RfStatus rf_shift_coloring_find(uint32_t n,
                                     uint32_t k,
                                     uint32_t c,
                                     struct RfShiftColoring **out);

/*
 The most-significant-bit coloring of the pairs of `[n]`.

 # Safety
 `out` must be writable.
 */
enum RfStatus rf_shift_coloring_bit_pairs(uint32_t n, struct RfShiftColoring **out);

/*
 Number of k-sets colored by `h`, or 0 for null.

 # Safety
 `h` must be null or a live handle.
 */
size_t rf_shift_coloring_len(const struct RfShiftColoring *h);

/*
 Colors in `0..c` by lexicographic rank, copied into `buf[0..len]`.

 # Safety
 `h` must be a live handle and `buf` point to `len` writable bytes.
 */
enum RfStatus rf_shift_coloring_colors(const struct RfShiftColoring *h, uint8_t *buf, size_t len);

/*
 The coloring in the `shiftcoloring` text format.

 # Safety
 `h` must be a live handle and `out` writable.
 */
enum RfStatus rf_shift_coloring_to_text(const struct RfShiftColoring *h, char **out);

/*
 Parses and re-verifies a `shiftcoloring` file.

 # Safety
 `text` must be a NUL-terminated string and `out` writable.
 */
enum RfStatus rf_shift_coloring_from_text(const char *text, struct RfShiftColoring **out);

/*
 # Safety
 `h` must be null or a handle not yet freed.
 */
void rf_shift_coloring_free(struct RfShiftColoring *h);

/*
 `tw_i(x)` rendered in decimal, or symbolically once it is too large.

 # Safety
 `out` must be writable.
 */
enum RfStatus rf_tower_render(uint32_t i, uint64_t x, char **out);

/*
 A bound from the table (`kind` is "diag", "k1k2", "k2k2" or "k1_2k1"),
 rendered like [`rf_tower_render`].

 # Safety
 `kind` must be a NUL-terminated string and `out` writable.
 */
enum RfStatus rf_bound_render(uint32_t k, const char *kind, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RAMSEYFORGE_H */
