#ifndef SPGCD_H
#define SPGCD_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum SpgcdExtension {
  SPGCD_EXTENSION_FORMULA = 0,
  SPGCD_EXTENSION_BASE_FIELD = 1,
} SpgcdExtension;

typedef enum SpgcdStatus {
  SPGCD_STATUS_OK = 0,
  SPGCD_STATUS_NULL_POINTER = 1,
  SPGCD_STATUS_INVALID_INPUT = 2,
  SPGCD_STATUS_PARSE = 3,
  /**
   * The randomized algorithm failed on every attempt.
   */
  SPGCD_STATUS_FAILURE = 4,
  SPGCD_STATUS_DEADLINE_EXCEEDED = 5,
  SPGCD_STATUS_OUT_OF_RANGE = 6,
  SPGCD_STATUS_PANIC = 7,
} SpgcdStatus;

typedef enum SpgcdTermStrategy {
  SPGCD_TERM_STRATEGY_DOUBLING = 0,
  SPGCD_TERM_STRATEGY_LINEAR = 1,
} SpgcdTermStrategy;

/**
 * A polynomial over a prime field.
 */
typedef struct SpgcdPoly SpgcdPoly;

typedef struct SpgcdOptions {
  double epsilon;
  uint64_t seed;
  uint32_t max_retries;
  /**
   * Primitive element of the prime field; 0 selects one automatically.
   */
  uint64_t omega;
  enum SpgcdTermStrategy term_strategy;
  enum SpgcdExtension extension;
} SpgcdOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *spgcd_last_error(void);

/**
 * Library defaults: epsilon 1e-3, seed 0, 3 retries, automatic omega,
 * doubling term bounds, tolerance-sized extensions.
 */
struct SpgcdOptions spgcd_options_default(void);

/**
 * Parses the text format (`p <prime>`, `n <nvars>`, then one term per line).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SpgcdStatus spgcd_poly_parse(const char *text, struct SpgcdPoly **out);

/**
 * Builds a polynomial over `F_p` from `nterms` coefficients and a row-major
 * `nterms * nvars` exponent array. Coefficients are reduced mod `p`; repeated
 * exponent vectors are summed.
 *
 * # Safety
 * `coeffs` must hold `nterms` values and `exps` `nterms * nvars` values
 * (either may be null when that count is zero); `out` must be valid.
 */
enum SpgcdStatus spgcd_poly_from_terms(uint64_t p,
                                       size_t nvars,
                                       size_t nterms,
                                       const uint64_t *coeffs,
                                       const uint32_t *exps,
                                       struct SpgcdPoly **out);

/**
 * Renders the text format into a new string released with `spgcd_string_free`.
 *
 * # Safety
 * `poly` must be a live handle and `out` a valid pointer.
 */
enum SpgcdStatus spgcd_poly_render(const struct SpgcdPoly *poly, char **out);

/**
 * # Safety
 * `s` must come from `spgcd_poly_render` or be null.
 */
void spgcd_string_free(char *s);

/**
 * # Safety
 * `poly` must be a live handle or null.
 */
void spgcd_poly_free(struct SpgcdPoly *poly);

/**
 * Characteristic of the coefficient field; 0 for a null handle.
 *
 * # Safety
 * `poly` must be a live handle or null.
 */
uint64_t spgcd_poly_modulus(const struct SpgcdPoly *poly);

/**
 * # Safety
 * `poly` must be a live handle or null.
 */
size_t spgcd_poly_nvars(const struct SpgcdPoly *poly);

/**
 * Number of terms.
 *
 * # Safety
 * `poly` must be a live handle or null.
 */
size_t spgcd_poly_len(const struct SpgcdPoly *poly);

/**
 * Copies term `index` (lexicographically increasing order) into `coeff`
 * and the `nvars` entries of `exps`.
 *
 * # Safety
 * `poly` must be a live handle, `coeff` valid, and `exps` must hold
 * `spgcd_poly_nvars(poly)` values.
 */
enum SpgcdStatus spgcd_poly_term(const struct SpgcdPoly *poly,
                                 size_t index,
                                 uint64_t *coeff,
                                 uint32_t *exps);

/**
 * Lex-monic `gcd(a, b)`. `opts` may be null for the defaults.
 *
 * # Safety
 * `a`, `b` must be live handles, `opts` valid or null, `out` valid.
 */
enum SpgcdStatus spgcd_gcd(const struct SpgcdPoly *a,
                           const struct SpgcdPoly *b,
                           const struct SpgcdOptions *opts,
                           struct SpgcdPoly **out);

/**
 * Sets `*divides` to whether `g` divides `a` exactly. When it does and
 * `quotient` is not null, the quotient is returned there.
 *
 * # Safety
 * `g`, `a` must be live handles, `divides` valid, `quotient` valid or null.
 */
enum SpgcdStatus spgcd_divides(const struct SpgcdPoly *g,
                               const struct SpgcdPoly *a,
                               bool *divides,
                               struct SpgcdPoly **quotient);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPGCD_H */
