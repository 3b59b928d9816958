#ifndef KOSZULKIT_H
#define KOSZULKIT_H

/* Generated from src/lib.rs by build.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes.
 */
typedef enum KkStatus {
  KK_STATUS_OK = 0,
  KK_STATUS_NULL_ARGUMENT = 1,
  KK_STATUS_INVALID_UTF8 = 2,
  KK_STATUS_PARSE = 3,
  KK_STATUS_INVALID_INPUT = 4,
  KK_STATUS_UNSUPPORTED = 5,
  KK_STATUS_COMPUTATION = 6,
  KK_STATUS_PANIC = 7,
} KkStatus;

/**
 * A coalgebra, curved Lie algebra, curved associative algebra or morphism.
 */
typedef struct KkObject KkObject;

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next call into the library on the same thread.
 */
const char *kk_last_error(void);

/**
 * Parses a JSON document. String references inside it resolve against
 * `base_dir` (may be null for the current directory).
 *
 * # Safety
 * `json` and `base_dir` must be null or NUL-terminated strings; `out` must
 * be a valid pointer.
 */
enum KkStatus kk_object_from_json(const char *json,
                                  const char *base_dir,
                                  uint32_t max_weight,
                                  struct KkObject **out);

/**
 * Loads `path` or `path#entry` from disk.
 *
 * # Safety
 * `reference` must be a NUL-terminated string; `out` must be valid.
 */
enum KkStatus kk_object_load(const char *reference, uint32_t max_weight, struct KkObject **out);

/**
 * # Safety
 * `obj` must be a handle from this library (or null); `out` must be valid.
 */
enum KkStatus kk_object_to_json(const struct KkObject *obj, char **out);

/**
 * Static string: "coalgebra", "curved Lie algebra", ... or null.
 *
 * # Safety
 * `obj` must be a handle from this library or null.
 */
const char *kk_object_kind(const struct KkObject *obj);

/**
 * Axiom certificate of any object, as JSON.
 *
 * # Safety
 * `obj` must be a handle from this library; `out` must be valid.
 */
enum KkStatus kk_validate(const struct KkObject *obj, char **out);

/**
 * Group-like elements of a coalgebra as a JSON array of literals.
 *
 * # Safety
 * `obj` must be a handle from this library; `out` must be valid.
 */
enum KkStatus kk_group_likes(const struct KkObject *obj, char **out);

/**
 * Curved Harrison algebra at word length `max_weight`. `coaug` is an
 * element literal; null means the coalgebra's own coaugmentation.
 *
 * # Safety
 * `obj` must be a handle from this library, `coaug` null or a string, `out` valid.
 */
enum KkStatus kk_harrison(const struct KkObject *obj,
                          const char *coaug,
                          uint32_t max_weight,
                          struct KkObject **out);

/**
 * Complete Maurer-Cartan set, when the solver can decide it, as JSON.
 *
 * # Safety
 * `obj` must be a handle from this library; `out` must be valid.
 */
enum KkStatus kk_mc_solve(const struct KkObject *obj, char **out);

/**
 * Extended Chevalley-Eilenberg coalgebra. `witnesses` is a JSON array of
 * literals, or null for the solved MC set.
 *
 * # Safety
 * `obj` must be a handle from this library, `witnesses` null or a string, `out` valid.
 */
enum KkStatus kk_ce(const struct KkObject *obj,
                    const char *witnesses,
                    uint32_t max_weight,
                    struct KkObject **out);

/**
 * Weak-equivalence certificate of a coalgebra map or curved morphism on
 * degrees `lo..=hi`. For curved morphisms both MC sets are solved for.
 *
 * # Safety
 * `obj` must be a handle from this library; `out` must be valid.
 */
enum KkStatus kk_weak_equivalence(const struct KkObject *obj,
                                  int64_t lo,
                                  int64_t hi,
                                  uint32_t max_weight,
                                  char **out);

/**
 * Contraction certificate for a curved associative algebra.
 *
 * # Safety
 * `obj` must be a handle from this library; `out` must be valid.
 */
enum KkStatus kk_lemma410(const struct KkObject *obj,
                          uint32_t max_weight,
                          int64_t lo,
                          int64_t hi,
                          char **out);

/**
 * # Safety
 * `obj` must be null or a handle from this library not yet freed.
 */
void kk_object_free(struct KkObject *obj);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void kk_string_free(char *s);

#endif  /* KOSZULKIT_H */
