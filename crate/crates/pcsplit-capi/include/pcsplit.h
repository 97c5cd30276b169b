#ifndef PCSPLIT_H
#define PCSPLIT_H

/* Generated by cbindgen from pcsplit-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every API call.
typedef enum PcStatus {
  // Success.
  PcOk = 0,
  // A pointer argument was null or a scalar argument was out of range.
  PcInvalidArgument = 1,
  // The requested algebra or scenario is outside the supported table.
  PcUnsupported = 2,
  // The verification ran but at least one certificate did not pass.
  PcCheckFailed = 3,
  // Internal error; consult `pc_last_error`.
  PcInternal = 4,
} PcStatus;

// Opaque handle to a constructed Lie algebra.
typedef struct PcAlgebra PcAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent error on this thread, or null.
// The pointer stays valid until the next failing call on the same thread.
const char *pc_last_error(void);

// Build a classical Lie algebra (series one of 'A', 'B', 'C', 'D').
//
// # Safety
// `out` must be a valid pointer; the handle must be released with
// [`pc_algebra_free`].
enum PcStatus pc_algebra_build(char series, uint32_t rank, struct PcAlgebra **out);

// Release an algebra handle (null is ignored).
//
// # Safety
// `handle` must come from [`pc_algebra_build`] and not be used afterwards.
void pc_algebra_free(struct PcAlgebra *handle);

// Dimension of the algebra behind the handle, 0 for null.
//
// # Safety
// `handle` must be a live handle from [`pc_algebra_build`].
uint32_t pc_algebra_dim(const struct PcAlgebra *handle);

// Rank of the algebra behind the handle, 0 for null.
//
// # Safety
// `handle` must be a live handle from [`pc_algebra_build`].
uint32_t pc_algebra_rank(const struct PcAlgebra *handle);

// The magic number `b(g) = (dim g + rank g)/2`, 0 for null.
//
// # Safety
// `handle` must be a live handle from [`pc_algebra_build`].
uint32_t pc_algebra_magic_number(const struct PcAlgebra *handle);

// Serialize the algebra document (basis labels, structure constants,
// invariant form) as JSON.
//
// # Safety
// `handle` must be live and `out_json` valid; release the string with
// [`pc_string_free`].
enum PcStatus pc_algebra_to_json(const struct PcAlgebra *handle, char **out_json);

// Basic symmetric invariants of the algebra as a JSON document.
//
// # Safety
// `handle` must be live and `out_json` valid; release the string with
// [`pc_string_free`].
enum PcStatus pc_invariants_to_json(const struct PcAlgebra *handle, char **out_json);

// Free generators of the commutative subalgebra of a scenario, as JSON.
// `scenario` is one of "borel", "involution", "manin".
//
// # Safety
// `scenario` must be a NUL-terminated string and `out_json` valid;
// release the string with [`pc_string_free`].
enum PcStatus pc_generators_to_json(char series,
                                    uint32_t rank,
                                    const char *scenario,
                                    char **out_json);

// Run the full certificate suite for a scenario and return the report as
// JSON. `PcOk` means every certificate passed; `PcCheckFailed` means the
// report (still written to `out_json`) contains a non-passing certificate.
//
// # Safety
// `scenario` must be a NUL-terminated string and `out_json` valid;
// release the string with [`pc_string_free`].
enum PcStatus pc_verify_run(char series,
                            uint32_t rank,
                            const char *scenario,
                            uint64_t seed,
                            uint32_t samples,
                            int64_t bound,
                            char **out_json);

// Release a string returned by this API (null is ignored).
//
// # Safety
// `s` must come from this API and not be used afterwards.
void pc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PCSPLIT_H */
