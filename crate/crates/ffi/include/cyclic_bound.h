#ifndef CYCLIC_BOUND_H
#define CYCLIC_BOUND_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CbStatus {
  CB_STATUS_OK = 0,
  CB_STATUS_NULL_POINTER = 1,
  CB_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Parameters do not describe a cyclic code (q not a prime power,
   * gcd(n, q) > 1, duplicate coset, ...).
   */
  CB_STATUS_INVALID_CODE = 3,
  /**
   * A search or field exceeded its size limit.
   */
  CB_STATUS_LIMIT_EXCEEDED = 4,
  CB_STATUS_LENGTH_MISMATCH = 5,
  /**
   * More errors than the decoder can handle were detected.
   */
  CB_STATUS_DECODE_FAILURE = 6,
  CB_STATUS_BUFFER_TOO_SMALL = 7,
  CB_STATUS_INTERNAL = 99,
} CbStatus;

/**
 * Opaque cyclic code handle.
 */
typedef struct CbCode CbCode;

/**
 * Opaque decoder handle.
 */
typedef struct CbDecoder CbDecoder;

typedef struct CbBounds {
  uint64_t bch;
  /**
   * 0 when the length is beyond the search limit.
   */
  uint64_t ht;
  uint64_t d_star;
} CbBounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the code over GF(q) of length `n` whose defining set is the union
 * of the cyclotomic cosets of `reps[0..reps_len]`.
 *
 * # Safety
 * `reps` must be valid for `reps_len` reads; `out` must be writable.
 */
enum CbStatus cb_code_new(uint64_t q,
                          uint64_t n,
                          const uint64_t *reps,
                          uintptr_t reps_len,
                          struct CbCode **out);

/**
 * # Safety
 * `code` must be null or a handle from [`cb_code_new`] not yet freed.
 */
void cb_code_free(struct CbCode *code);

/**
 * Length and dimension.
 *
 * # Safety
 * `code` must be a live handle; `n` and `k` writable.
 */
enum CbStatus cb_code_params(const struct CbCode *code, uint64_t *n, uint64_t *k);

/**
 * BCH, Hartmann-Tzeng and the best non-zero-locator bound with default limits.
 *
 * # Safety
 * `code` must be a live handle; `out` writable.
 */
enum CbStatus cb_code_bounds(const struct CbCode *code, struct CbBounds *out);

/**
 * Full bound report as JSON (exhaustive search included when at most
 * `cap` codewords); free with [`cb_string_free`].
 *
 * # Safety
 * `code` must be a live handle; `out` writable.
 */
enum CbStatus cb_code_report_json(const struct CbCode *code, uint64_t cap, char **out);

/**
 * Decoder built from the best non-zero-locator certificate for `code`.
 *
 * # Safety
 * `code` must be a live handle; `out` writable.
 */
enum CbStatus cb_decoder_new(const struct CbCode *code, struct CbDecoder **out);

/**
 * # Safety
 * `dec` must be null or a handle from [`cb_decoder_new`] not yet freed.
 */
void cb_decoder_free(struct CbDecoder *dec);

/**
 * Guaranteed number of correctable errors `⌊(d* - 1)/2⌋`.
 *
 * # Safety
 * `dec` must be a live handle; `out` writable.
 */
enum CbStatus cb_decoder_radius(const struct CbDecoder *dec, uint64_t *out);

/**
 * Encodes `k` message digits into `n` codeword digits.
 *
 * # Safety
 * `msg` valid for `msg_len` reads, `out` for `out_len` writes.
 */
enum CbStatus cb_decoder_encode(const struct CbDecoder *dec,
                                const uint32_t *msg,
                                uintptr_t msg_len,
                                uint32_t *out,
                                uintptr_t out_len);

/**
 * Decodes `received` (n digits) into `corrected` (n digits) and reports the
 * number of corrected symbols. Returns `CB_STATUS_DECODE_FAILURE` when the
 * word could not be decoded; `corrected` is then left untouched.
 *
 * # Safety
 * `received` valid for `len` reads, `corrected` for `len` writes,
 * `num_errors` writable or null.
 */
enum CbStatus cb_decoder_decode(const struct CbDecoder *dec,
                                const uint32_t *received,
                                uintptr_t len,
                                uint32_t *corrected,
                                uint64_t *num_errors);

/**
 * Exact minimum distance by enumeration (at most `cap` codewords).
 *
 * # Safety
 * `code` must be a live handle; `out` writable.
 */
enum CbStatus cb_code_min_distance(const struct CbCode *code, uint64_t cap, uint64_t *out);

/**
 * Message of the last failed call on this thread, or null. Free with
 * [`cb_string_free`].
 */
char *cb_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void cb_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLIC_BOUND_H */
