#ifndef HFFT_H
#define HFFT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result code of every call.
 */
typedef enum HfftStatus {
  HFFT_STATUS_OK = 0,
  HFFT_STATUS_NULL_POINTER = 1,
  /*
   Zero length, or not a power of two where one is required.
   */
  HFFT_STATUS_INVALID_SIZE = 2,
  /*
   Table, buffer or pass index does not match.
   */
  HFFT_STATUS_SIZE_MISMATCH = 3,
  HFFT_STATUS_NON_FINITE = 4,
  /*
   Unknown algorithm or direction code.
   */
  HFFT_STATUS_INVALID_ARGUMENT = 5,
  /*
   A self-check ran and found a discrepancy.
   */
  HFFT_STATUS_VERIFICATION_FAILED = 6,
  HFFT_STATUS_PANIC = 7,
} HfftStatus;

/*
 Algorithm codes accepted by `algorithm` parameters.
 */
typedef enum HfftAlgorithm {
  HFFT_ALGORITHM_NAIVE = 0,
  HFFT_ALGORITHM_RECURSIVE = 1,
  HFFT_ALGORITHM_BITPASS = 2,
  HFFT_ALGORITHM_HEURISTIC = 3,
} HfftAlgorithm;

/*
 Direction codes accepted by `direction` parameters.
 */
typedef enum HfftDirection {
  HFFT_DIRECTION_FORWARD = 0,
  HFFT_DIRECTION_INVERSE = 1,
} HfftDirection;

/*
 Opaque pass trace.
 */
typedef struct HfftTrace HfftTrace;

/*
 Opaque twiddle table.
 */
typedef struct HfftTwiddles HfftTwiddles;

typedef struct HfftComplex {
  double re;
  double im;
} HfftComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Builds the table `w^0 … w^{n-1}` and stores a new handle in `*out`.

 # Safety
 `out` must be a valid pointer to writable storage for one handle.
 */
enum HfftStatus hfft_twiddles_new(size_t n, int32_t direction, struct HfftTwiddles **out);

/*
 Releases a table. Null is ignored.

 # Safety
 `tw` must be null or a handle from `hfft_twiddles_new` not yet freed.
 */
void hfft_twiddles_free(struct HfftTwiddles *tw);

/*
 Transform size of the table, or 0 for null.

 # Safety
 `tw` must be null or a live handle.
 */
size_t hfft_twiddles_len(const struct HfftTwiddles *tw);

/*
 Reads `w^j` into `*out`.

 # Safety
 `tw` must be a live handle and `out` writable.
 */
enum HfftStatus hfft_twiddles_get(const struct HfftTwiddles *tw, size_t j, struct HfftComplex *out);

/*
 Transforms `n` values from `input` into `output` (natural order).

 The table must have size `n`; its direction selects forward or inverse
 (inverse results are scaled by `1/n`). `input` and `output` may alias.
 When `additions` / `multiplications` are non-null they receive the
 complex operation counts of this call.

 # Safety
 `input` and `output` must each point to `n` elements; `tw` must be live.
 */
enum HfftStatus hfft_transform(int32_t algorithm,
                               const struct HfftTwiddles *tw,
                               const struct HfftComplex *input,
                               struct HfftComplex *output,
                               size_t n,
                               uint64_t *additions,
                               uint64_t *multiplications);

/*
 Quadratic reference DFT for any `n >= 1`, building its own table.

 # Safety
 `input` and `output` must each point to `n` elements.
 */
enum HfftStatus hfft_naive_dft(int32_t direction,
                               const struct HfftComplex *input,
                               struct HfftComplex *output,
                               size_t n);

/*
 Reverses the low `k` bits of `i` into `*out`.

 # Safety
 `out` must be writable.
 */
enum HfftStatus hfft_bit_reverse_index(size_t i, uint32_t k, size_t *out);

/*
 Complex additions and multiplications of a heuristic transform of size `n`.

 # Safety
 Both pointers must be writable.
 */
enum HfftStatus hfft_count_operations(size_t n, uint64_t *additions, uint64_t *multiplications);

/*
 Runs a traced transform (not `HFFT_ALGORITHM_NAIVE`) and stores the trace in `*out`.

 # Safety
 `input` must point to `n` elements, `tw` must be live and `out` writable.
 */
enum HfftStatus hfft_trace_new(int32_t algorithm,
                               const struct HfftTwiddles *tw,
                               const struct HfftComplex *input,
                               size_t n,
                               struct HfftTrace **out);

/*
 Releases a trace. Null is ignored.

 # Safety
 `trace` must be null or a handle from `hfft_trace_new` not yet freed.
 */
void hfft_trace_free(struct HfftTrace *trace);

/*
 Number of passes `k`; snapshots are numbered `0..=k`. Returns 0 for null.

 # Safety
 `trace` must be null or live.
 */
size_t hfft_trace_passes(const struct HfftTrace *trace);

/*
 Copies snapshot `pass` (`n` values, flat slot order) into `out`.

 # Safety
 `trace` must be live and `out` must hold `n` elements.
 */
enum HfftStatus hfft_trace_snapshot(const struct HfftTrace *trace,
                                    size_t pass,
                                    struct HfftComplex *out,
                                    size_t n);

/*
 Operation counts of pass `pass` (1-based).

 # Safety
 `trace` must be live and both counters writable.
 */
enum HfftStatus hfft_trace_pass_counts(const struct HfftTrace *trace,
                                       size_t pass,
                                       uint64_t *additions,
                                       uint64_t *multiplications);

/*
 Checks the size-8 bit-pass trace of every basis vector against the
 worked expansions. Returns `HFFT_STATUS_VERIFICATION_FAILED` on any mismatch.
 */
enum HfftStatus hfft_golden_trace_check(void);

/*
 Static, NUL-terminated description of a status code.
 */
const char *hfft_status_message(int32_t status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HFFT_H */
