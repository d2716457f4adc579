#ifndef ARQUIVER_H
#define ARQUIVER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum {
  ArqStatus_Ok = 0,
  /**
   * Invalid argument: unknown family, bad rank, malformed arrow list.
   */
  ArqStatus_InvalidArgument = 1,
  /**
   * A cross-check that the theory guarantees has failed.
   */
  ArqStatus_Inconsistent = 2,
  /**
   * A required pointer was NULL.
   */
  ArqStatus_NullPointer = 3,
  /**
   * A string argument was not valid UTF-8.
   */
  ArqStatus_InvalidUtf8 = 4,
  /**
   * A panic was caught at the boundary.
   */
  ArqStatus_Panic = 5,
} ArqStatus;

/**
 * Opaque quiver handle.
 */
typedef struct ArqQuiver ArqQuiver;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a quiver handle from a family letter, a rank and an arrow list
 * such as `"4>3,3>5,2>3,2>1"` (empty for rank 1). On success writes the
 * handle to `out`.
 *
 * # Safety
 * `arrows` must be NULL or a valid NUL-terminated string; `out` must be a
 * valid pointer.
 */
ArqStatus arq_quiver_new(char family, uintptr_t rank, const char *arrows, ArqQuiver **out);

/**
 * Releases a quiver handle. NULL is a no-op.
 *
 * # Safety
 * `q` must be NULL or a pointer obtained from [`arq_quiver_new`].
 */
void arq_quiver_free(ArqQuiver *q);

/**
 * Releases a string returned by any payload function. NULL is a no-op.
 *
 * # Safety
 * `s` must be NULL or a pointer returned by this library.
 */
void arq_string_free(char *s);

/**
 * Static name of a status code.
 */
const char *arq_status_name(ArqStatus status);

/**
 * Window JSON: objects, arrows and exponents.
 *
 * # Safety
 * `q` must come from [`arq_quiver_new`]; `out` must be valid.
 */
ArqStatus arq_window_json(const ArqQuiver *q, char **out);

/**
 * Window DOT rendering.
 *
 * # Safety
 * As for [`arq_window_json`].
 */
ArqStatus arq_window_dot(const ArqQuiver *q, char **out);

/**
 * Dimension-vector table as CSV rows `i,q,d1,...,dn` sorted by `(q,i)`.
 *
 * # Safety
 * As for [`arq_window_json`].
 */
ArqStatus arq_dims_csv(const ArqQuiver *q, char **out);

/**
 * Rigid-module JSON: summands, total, endomorphism dimension, certificate.
 *
 * # Safety
 * As for [`arq_window_json`].
 */
ArqStatus arq_start_json(const ArqQuiver *q, char **out);

/**
 * Graded-quiver DOT rendering.
 *
 * # Safety
 * As for [`arq_window_json`].
 */
ArqStatus arq_graded_dot(const ArqQuiver *q, char **out);

/**
 * Initial-seed JSON for the canonical adapted word.
 *
 * # Safety
 * As for [`arq_window_json`].
 */
ArqStatus arq_seed_json(const ArqQuiver *q, char **out);

/**
 * Seed-quiver DOT rendering for the canonical adapted word.
 *
 * # Safety
 * As for [`arq_window_json`].
 */
ArqStatus arq_seed_dot(const ArqQuiver *q, char **out);

/**
 * Full cross-validation report as JSON. Returns `Inconsistent` (with the
 * report still written) when any check fails.
 *
 * # Safety
 * As for [`arq_window_json`].
 */
ArqStatus arq_check_json(const ArqQuiver *q, uint64_t seed, char **out);

/**
 * Tabulated endomorphism dimensions for one family as JSON
 * (`{"6":2444,...}` for `E`).
 *
 * # Safety
 * `out` must be valid.
 */
ArqStatus arq_dq_table_json(char family, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ARQUIVER_H */
