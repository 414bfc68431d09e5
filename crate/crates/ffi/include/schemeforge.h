#ifndef SCHEMEFORGE_H
#define SCHEMEFORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function.
typedef enum SfStatus {
  SF_STATUS_OK = 0,
  SF_STATUS_NULL_POINTER = 1,
  SF_STATUS_INVALID_ARGUMENT = 2,
  SF_STATUS_PARSE = 3,
  SF_STATUS_UNKNOWN_CATALOG = 4,
  SF_STATUS_COMPUTATION = 5,
  SF_STATUS_BUFFER_TOO_SMALL = 6,
  SF_STATUS_PANIC = 7,
} SfStatus;

// Opaque symmetric association scheme.
typedef struct SfScheme SfScheme;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Last error message on this thread, or NULL. Valid until the next failing call.
const char *sf_last_error(void);

// Library version as a static string.
const char *sf_version(void);

// Releases a string returned by the library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void sf_string_free(char *s);

// Scheme of a catalog name such as `"cube"` or `"bd-dodecahedron"`.
//
// # Safety
// `name` must be a nul-terminated string and `out` a valid pointer.
enum SfStatus sf_scheme_from_catalog(const char *name, struct SfScheme **out);

// Scheme generated by a graph in the edge-list format (`n m`, then `u v` lines).
//
// # Safety
// `edges` must be a nul-terminated string and `out` a valid pointer.
enum SfStatus sf_scheme_from_graph_text(const char *edges, struct SfScheme **out);

// Scheme in the text format (`n d`, then `rel i` blocks of pairs).
//
// # Safety
// `scheme` must be a nul-terminated string and `out` a valid pointer.
enum SfStatus sf_scheme_parse(const char *scheme, struct SfScheme **out);

// Releases a scheme. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void sf_scheme_free(struct SfScheme *s);

// Number of points and rank `d + 1`.
//
// # Safety
// `s` must be a live handle; `n` and `rank` valid pointers.
enum SfStatus sf_scheme_size(struct SfScheme *s, uintptr_t *n, uintptr_t *rank);

// Intersection number `p^h_ij`.
//
// # Safety
// `s` must be a live handle and `out` a valid pointer.
enum SfStatus sf_scheme_intersection_number(struct SfScheme *s,
                                            uintptr_t h,
                                            uintptr_t i,
                                            uintptr_t j,
                                            uintptr_t *out);

// Writes the multiplicities into `buf` (capacity `len`) and their count into `written`.
// Returns [`SfStatus::BufferTooSmall`] with `written` set to the rank if `len` is too small.
//
// # Safety
// `s` must be a live handle, `buf` valid for `len` writes and `written` a valid pointer.
enum SfStatus sf_scheme_multiplicities(struct SfScheme *s,
                                       uintptr_t *buf,
                                       uintptr_t len,
                                       uintptr_t *written);

// Spectral report as JSON; release with [`sf_string_free`].
//
// # Safety
// `s` must be a live handle and `out` a valid pointer.
enum SfStatus sf_scheme_spectral_json(struct SfScheme *s, char **out);

// Runs a verification suite and stores the number of failed checks in `failed`.
//
// # Safety
// `suite` must be a nul-terminated string and `failed` a valid pointer.
enum SfStatus sf_verify_suite(const char *suite, uintptr_t *failed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHEMEFORGE_H */
