#ifndef TOPOLAB_H
#define TOPOLAB_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum TopolabStatus {
  TOPOLAB_STATUS_OK = 0,
  /**
   * A required pointer was null or a string was not UTF-8.
   */
  TOPOLAB_STATUS_NULL_ARGUMENT = 1,
  /**
   * A JSON document could not be parsed or failed validation.
   */
  TOPOLAB_STATUS_INVALID_DOCUMENT = 2,
  /**
   * A subset mask names points outside the space.
   */
  TOPOLAB_STATUS_INVALID_SUBSET = 3,
  /**
   * Unrecognised tag or theorem id.
   */
  TOPOLAB_STATUS_UNKNOWN_NAME = 4,
  /**
   * Enumeration bound outside the supported range.
   */
  TOPOLAB_STATUS_BOUND_EXCEEDED = 5,
  /**
   * The engine panicked; the handle arguments are left untouched.
   */
  TOPOLAB_STATUS_INTERNAL = 6,
} TopolabStatus;

/**
 * A function between two finite spaces.
 */
typedef struct TopolabMap TopolabMap;

/**
 * A validated finite topological space with cached operator tables.
 */
typedef struct TopolabSpace TopolabSpace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. Valid until
 * the next call into the library from the same thread.
 */
const char *topolab_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a pointer obtained from this library, freed once.
 */
void topolab_string_free(char *s);

/**
 * Parses and validates a space document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum TopolabStatus topolab_space_from_json(const char *json, struct TopolabSpace **out);

/**
 * # Safety
 * `space` must be null or a live handle, freed once.
 */
void topolab_space_free(struct TopolabSpace *space);

/**
 * Number of points, or 0 for a null handle.
 *
 * # Safety
 * `space` must be null or a live handle.
 */
uint32_t topolab_space_point_count(const struct TopolabSpace *space);

/**
 * Bitmask of the subset spelled by comma-separated point labels.
 *
 * # Safety
 * Pointers must be valid; `labels` NUL-terminated.
 */
enum TopolabStatus topolab_space_parse_set(const struct TopolabSpace *space,
                                           const char *labels,
                                           uint32_t *out);

/**
 * Closure of a subset.
 *
 * # Safety
 * `space` must be a live handle; `out` writable.
 */
enum TopolabStatus topolab_space_closure(const struct TopolabSpace *space,
                                         uint32_t set,
                                         uint32_t *out);

/**
 * SC*-closure of a subset.
 *
 * # Safety
 * `space` must be a live handle; `out` writable.
 */
enum TopolabStatus topolab_space_scstar_closure(const struct TopolabSpace *space,
                                                uint32_t set,
                                                uint32_t *out);

/**
 * Membership of a subset in a set class such as `"gscstar-closed"`.
 *
 * # Safety
 * Pointers must be valid; `class` NUL-terminated.
 */
enum TopolabStatus topolab_space_classify_set(const struct TopolabSpace *space,
                                              uint32_t set,
                                              const char *class_,
                                              bool *out);

/**
 * Whether the space satisfies a separation axiom, variant, or alternate.
 *
 * # Safety
 * Pointers must be valid; `tag` NUL-terminated.
 */
enum TopolabStatus topolab_space_axiom(const struct TopolabSpace *space,
                                       const char *tag,
                                       bool *out);

/**
 * Full axiom vector as a JSON object. Release with [`topolab_string_free`].
 *
 * # Safety
 * `space` must be a live handle; `out` writable.
 */
enum TopolabStatus topolab_space_classify_json(const struct TopolabSpace *space, char **out);

/**
 * Parses a map document. Domain and codomain must be inline space
 * documents; file references are rejected.
 *
 * # Safety
 * `json` must be NUL-terminated; `out` writable.
 */
enum TopolabStatus topolab_map_from_json(const char *json, struct TopolabMap **out);

/**
 * # Safety
 * `map` must be null or a live handle, freed once.
 */
void topolab_map_free(struct TopolabMap *map);

/**
 * Whether the map has a property such as `"scstar-irresolute"`.
 *
 * # Safety
 * Pointers must be valid; `property` NUL-terminated.
 */
enum TopolabStatus topolab_map_property(const struct TopolabMap *map,
                                        const char *property,
                                        bool *out);

/**
 * Sweeps one registered theorem and writes its report as JSON. A bound of
 * 0 selects the default. A counterexample is reported inside the JSON, not
 * through the status code.
 *
 * # Safety
 * `id` must be NUL-terminated; `out` writable.
 */
enum TopolabStatus topolab_verify_theorem(const char *id, uint32_t bound, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TOPOLAB_H */
