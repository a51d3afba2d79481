#ifndef CK_H
#define CK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CkContraction {
  CK_CONTRACTION_SPACE_TIME = 0,
  CK_CONTRACTION_SPEED_SPACE = 1,
} CkContraction;

typedef enum CkStatus {
  CK_STATUS_OK = 0,
  CK_STATUS_NULL_POINTER = 1,
  CK_STATUS_INVALID_UTF8 = 2,
  CK_STATUS_NOT_FOUND = 3,
  CK_STATUS_INVALID_ARGUMENT = 4,
  CK_STATUS_ENGINE_ERROR = 5,
  CK_STATUS_PANIC = 6,
} CkStatus;

typedef enum CkVerdict {
  CK_VERDICT_PASS = 0,
  CK_VERDICT_FAIL = 1,
  CK_VERDICT_EXPECTED_FAIL = 2,
} CkVerdict;

/**
 * An algebra with its bracket table.
 */
typedef struct CkAlgebra CkAlgebra;

/**
 * A finished expansion or atlas run.
 */
typedef struct CkReport CkReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message on this thread, or null. Valid until the next call
 * into this library from the same thread.
 */
const char *ck_last_error(void);

/**
 * Built-in algebra by key, sign pair or unique name.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum CkStatus ck_algebra_builtin(const char *name, bool symbolic, struct CkAlgebra **out);

/**
 * Algebra from a JSON definition.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum CkStatus ck_algebra_from_json(const char *json, struct CkAlgebra **out);

/**
 * # Safety
 * `alg` must come from this library and not be freed twice; null is ignored.
 */
void ck_algebra_free(struct CkAlgebra *alg);

/**
 * # Safety
 * `alg` must be a live handle; `out` must be writable.
 */
enum CkStatus ck_algebra_dim(const struct CkAlgebra *alg, size_t *out);

/**
 * JSON definition of the algebra, to be released with `ck_string_free`.
 *
 * # Safety
 * `alg` must be a live handle; `out` must be writable.
 */
enum CkStatus ck_algebra_to_json(const struct CkAlgebra *alg, char **out);

/**
 * Antisymmetry, Jacobi identities and, for family members, Casimir
 * centrality.
 *
 * # Safety
 * `alg` must be a live handle; `passed` must be writable.
 */
enum CkStatus ck_algebra_verify(const struct CkAlgebra *alg, bool *passed);

/**
 * # Safety
 * `alg` must be a live handle; `out` must be writable.
 */
enum CkStatus ck_algebra_contract(const struct CkAlgebra *alg,
                                  enum CkContraction kind,
                                  struct CkAlgebra **out);

/**
 * Structural equality of two bracket tables.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum CkStatus ck_algebra_same_structure(const struct CkAlgebra *a,
                                        const struct CkAlgebra *b,
                                        bool *out);

/**
 * Expansion between two built-in algebras along `axis` (1 or 2).
 *
 * # Safety
 * `from` and `to` must be NUL-terminated strings; `out` must be writable.
 */
enum CkStatus ck_expand(const char *from,
                        const char *to,
                        uint8_t axis,
                        bool symbolic,
                        struct CkReport **out);

/**
 * Every built-in expansion. The verdict is `CK_VERDICT_PASS` when no
 * entry failed (the expected failure included).
 *
 * # Safety
 * `out` must be writable.
 */
enum CkStatus ck_atlas(bool symbolic, struct CkReport **out);

/**
 * # Safety
 * `report` must be a live handle; `out` must be writable.
 */
enum CkStatus ck_report_verdict(const struct CkReport *report, enum CkVerdict *out);

/**
 * The report as JSON, borrowed: valid while the report lives.
 *
 * # Safety
 * `report` must be a live handle or null.
 */
const char *ck_report_json(const struct CkReport *report);

/**
 * # Safety
 * `report` must come from this library and not be freed twice; null is ignored.
 */
void ck_report_free(struct CkReport *report);

/**
 * # Safety
 * `s` must come from a `char **` output of this library; null is ignored.
 */
void ck_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CK_H */
