#ifndef RIBBONDM_H
#define RIBBONDM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. `RDM_STATUS_FALSE` is a successful "no" answer.
 */
typedef enum RdmStatus {
  RDM_STATUS_OK = 0,
  RDM_STATUS_FALSE = 1,
  RDM_STATUS_NULL_ARGUMENT = 2,
  RDM_STATUS_INVALID_UTF8 = 3,
  RDM_STATUS_PARSE = 4,
  RDM_STATUS_UNKNOWN_LABEL = 5,
  RDM_STATUS_CAP_EXCEEDED = 6,
  RDM_STATUS_DISCONNECTED = 7,
  RDM_STATUS_BUDGET_EXHAUSTED = 8,
  RDM_STATUS_INVALID = 9,
  RDM_STATUS_PANIC = 10,
} RdmStatus;

/**
 * A ribbon graph given by an arrow presentation.
 */
typedef struct RdmRibbon RdmRibbon;

/**
 * A set system over a labelled ground set.
 */
typedef struct RdmSetSystem RdmSetSystem;

typedef struct RdmStats {
  size_t vertices;
  size_t edges;
  size_t components;
  size_t boundaries;
  size_t euler_genus;
  bool orientable;
} RdmStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *rdm_last_error(void);

/**
 * Parses a presentation: the `ribbon v1` file format, or the inline form
 * with curves separated by `/`.
 *
 * # Safety
 * `source` must be a NUL-terminated string; `out` must be writable.
 */
enum RdmStatus rdm_ribbon_parse(const char *source, struct RdmRibbon **out);

/**
 * # Safety
 * `g` must come from this library and not be used afterwards. Null is ignored.
 */
void rdm_ribbon_free(struct RdmRibbon *g);

/**
 * The `ribbon v1` text of a presentation.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RdmStatus rdm_ribbon_serialize(const struct RdmRibbon *g, char **out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RdmStatus rdm_ribbon_stats(const struct RdmRibbon *g, struct RdmStats *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RdmStatus rdm_ribbon_delta_matroid(const struct RdmRibbon *g, struct RdmSetSystem **out);

/**
 * Partial dual at the edges listed in `edges` (comma or space separated).
 *
 * # Safety
 * `g` must be a live handle, `edges` a NUL-terminated string, `out` writable.
 */
enum RdmStatus rdm_ribbon_partial_dual(const struct RdmRibbon *g,
                                       const char *edges,
                                       struct RdmRibbon **out);

/**
 * Partial petrial at the edges listed in `edges`.
 *
 * # Safety
 * As for [`rdm_ribbon_partial_dual`].
 */
enum RdmStatus rdm_ribbon_partial_petrial(const struct RdmRibbon *g,
                                          const char *edges,
                                          struct RdmRibbon **out);

/**
 * `RDM_STATUS_OK` if isomorphic, `RDM_STATUS_FALSE` if not.
 *
 * # Safety
 * Both handles must be live.
 */
enum RdmStatus rdm_ribbon_isomorphic(const struct RdmRibbon *a, const struct RdmRibbon *b);

/**
 * Decides equivalence under vertex joins, vertex cuts, mutation and
 * isomorphism. If `report` is not null it receives one line per move of
 * the certificate, or the reason the graphs differ.
 *
 * # Safety
 * Both handles must be live; `report` may be null.
 */
enum RdmStatus rdm_two_isomorphic(const struct RdmRibbon *a,
                                  const struct RdmRibbon *b,
                                  char **report);

/**
 * The Bollobás–Riordan polynomial as text, e.g. `1*y*z - 1*z + 1`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RdmStatus rdm_ribbon_polynomial(const struct RdmRibbon *g, char **out);

/**
 * Parses a set system: a `ground` line then `feasible` lines.
 *
 * # Safety
 * `source` must be a NUL-terminated string; `out` must be writable.
 */
enum RdmStatus rdm_set_system_parse(const char *source, struct RdmSetSystem **out);

/**
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum RdmStatus rdm_set_system_text(const struct RdmSetSystem *d, char **out);

/**
 * `RDM_STATUS_OK` if the two set systems are isomorphic.
 *
 * # Safety
 * Both handles must be live.
 */
enum RdmStatus rdm_set_system_isomorphic(const struct RdmSetSystem *a,
                                         const struct RdmSetSystem *b);

/**
 * # Safety
 * `d` must come from this library and not be used afterwards. Null is ignored.
 */
void rdm_set_system_free(struct RdmSetSystem *d);

/**
 * # Safety
 * `s` must be a string returned by this library, or null.
 */
void rdm_string_free(char *s);

/**
 * Library version, static storage.
 */
const char *rdm_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RIBBONDM_H */
