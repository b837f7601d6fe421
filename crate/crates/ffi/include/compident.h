#ifndef COMPIDENT_H
#define COMPIDENT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CompidentStatus {
  COMPIDENT_STATUS_OK = 0,
  COMPIDENT_STATUS_NULL_POINTER = 1,
  COMPIDENT_STATUS_INVALID_UTF8 = 2,
  COMPIDENT_STATUS_PARSE = 3,
  COMPIDENT_STATUS_DOMAIN = 4,
  COMPIDENT_STATUS_UNKNOWN_IDENTITY = 5,
  COMPIDENT_STATUS_BUDGET_EXCEEDED = 6,
  COMPIDENT_STATUS_DIVISION_BY_ZERO = 7,
  COMPIDENT_STATUS_INTERNAL = 8,
  COMPIDENT_STATUS_PANIC = 9,
} CompidentStatus;

/**
 * Outcome of one verification run.
 */
typedef struct CompidentReport CompidentReport;

/**
 * Settings for verification runs.
 */
typedef struct CompidentVerifier CompidentVerifier;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next call into this library on the same thread.
 */
const char *compident_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void compident_string_free(char *s);

/**
 * A verifier with the given seed; `samples == 0` keeps each identity's default.
 */
struct CompidentVerifier *compident_verifier_new(uint64_t seed, uint32_t samples);

/**
 * # Safety
 * `v` must come from [`compident_verifier_new`] and not have been freed.
 */
void compident_verifier_free(struct CompidentVerifier *v);

/**
 * Fixes the rational parameter `a` (e.g. "3/7"); NULL clears it.
 *
 * # Safety
 * `v` must be a live verifier; `a` NULL or a nul-terminated string.
 */
enum CompidentStatus compident_verifier_set_a(struct CompidentVerifier *v, const char *a);

/**
 * Fixes the rational parameter `b`; NULL clears it.
 *
 * # Safety
 * As for [`compident_verifier_set_a`].
 */
enum CompidentStatus compident_verifier_set_b(struct CompidentVerifier *v, const char *b);

/**
 * Caps the composition size `k` for enumeration-based identities.
 *
 * # Safety
 * `v` must be a live verifier.
 */
enum CompidentStatus compident_verifier_set_budget(struct CompidentVerifier *v, uint32_t max_k);

/**
 * Checks identity `id` over `ranges`, written like `"k=1..8,n=0..8"`.
 * NULL or empty `ranges` uses the identity's defaults. On success `*out`
 * receives a report to be released with [`compident_report_free`].
 *
 * # Safety
 * `v` must be a live verifier, `id` a nul-terminated string, `ranges` NULL
 * or nul-terminated, and `out` writable.
 */
enum CompidentStatus compident_verify_range(const struct CompidentVerifier *v,
                                            const char *id,
                                            const char *ranges,
                                            struct CompidentReport **out);

/**
 * # Safety
 * `r` must come from [`compident_verify_range`] and not have been freed.
 */
void compident_report_free(struct CompidentReport *r);

/**
 * True when every case passed. NULL yields false.
 *
 * # Safety
 * `r` must be NULL or a live report.
 */
bool compident_report_passed(const struct CompidentReport *r);

/**
 * # Safety
 * `r` must be NULL or a live report.
 */
uint64_t compident_report_cases(const struct CompidentReport *r);

/**
 * # Safety
 * `r` must be NULL or a live report.
 */
uint64_t compident_report_failed(const struct CompidentReport *r);

/**
 * The report as one JSON line, without timing.
 *
 * # Safety
 * `r` must be a live report and `out` writable.
 */
enum CompidentStatus compident_report_json(const struct CompidentReport *r, char **out);

/**
 * `C(top, k)` in decimal; zero for negative `k`.
 *
 * # Safety
 * `out` must be writable.
 */
enum CompidentStatus compident_binomial(int64_t top, int64_t k, char **out);

/**
 * Signed Stirling number of the first kind `s(n, t)` in decimal.
 *
 * # Safety
 * `out` must be writable.
 */
enum CompidentStatus compident_stirling1(int64_t n, int64_t t, char **out);

/**
 * Bernoulli number `B_m` as `"p/q"` (bare integer when `q = 1`).
 *
 * # Safety
 * `out` must be writable.
 */
enum CompidentStatus compident_bernoulli(int64_t m, char **out);

size_t compident_identity_count(void);

/**
 * Static id string of the `index`-th registered identity, or NULL when out of range.
 */
const char *compident_identity_id(size_t index);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COMPIDENT_H */
