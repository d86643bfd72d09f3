#ifndef HURWITZ_H
#define HURWITZ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HurwitzStatus {
  HURWITZ_STATUS_OK = 0,
  HURWITZ_STATUS_NULL_POINTER = 1,
  HURWITZ_STATUS_INVALID_ARGUMENT = 2,
  HURWITZ_STATUS_SIZE_LIMIT = 3,
  HURWITZ_STATUS_INTERNAL = 4,
  HURWITZ_STATUS_PANIC = 5,
} HurwitzStatus;

/**
 * Opaque character table of S_d.
 */
typedef struct HurwitzCharTable HurwitzCharTable;

/**
 * Opaque covering problem, built up one branch profile at a time.
 */
typedef struct HurwitzCovering HurwitzCovering;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *hurwitz_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void hurwitz_string_free(char *s);

/**
 * χ^λ(μ) as a decimal string. Partitions are written "3,1,1".
 *
 * # Safety
 * `lambda` and `mu` must be nul-terminated strings; `out` must be writable.
 */
enum HurwitzStatus hurwitz_character_value(const char *lambda, const char *mu, char **out);

/**
 * Littlewood–Richardson coefficient c^η_{λμ}.
 *
 * # Safety
 * String arguments must be nul-terminated; `out` must be writable.
 */
enum HurwitzStatus hurwitz_lr_coefficient(const char *lambda,
                                          const char *mu,
                                          const char *eta,
                                          uint64_t *out);

/**
 * Kronecker coefficient g_{λμν} as a decimal string.
 *
 * # Safety
 * String arguments must be nul-terminated; `out` must be writable.
 */
enum HurwitzStatus hurwitz_kronecker_coefficient(const char *lambda,
                                                 const char *mu,
                                                 const char *nu,
                                                 char **out);

/**
 * (2d-2)!/d! · d^(d-3) as "p/q" or an integer string.
 *
 * # Safety
 * `out` must be writable.
 */
enum HurwitzStatus hurwitz_genus0(uint32_t d, char **out);

/**
 * Genus of y^d = Π (x - a_i)^(m_i) over `len` roots.
 *
 * # Safety
 * `multiplicities` must point to `len` readable values; `out` must be writable.
 */
enum HurwitzStatus hurwitz_cover_genus(uint32_t d,
                                       const uint32_t *multiplicities,
                                       uintptr_t len,
                                       uint64_t *out);

/**
 * Plane-curve count N_{d,g} from floor diagrams, as a decimal string.
 *
 * # Safety
 * `out` must be writable.
 */
enum HurwitzStatus hurwitz_gw_invariant(uint32_t d, uint32_t g, char **out);

/**
 * Rational plane-curve count N_d from Kontsevich's recursion.
 *
 * # Safety
 * `out` must be writable.
 */
enum HurwitzStatus hurwitz_kontsevich(uint32_t d, char **out);

/**
 * Molien series to degree `terms` of the action described by `config_json`
 * ({"n":…, "s":…, "generators":[{"perm":[…], "exponents":[…]}]}), written as
 * a JSON array of decimal strings.
 *
 * # Safety
 * `config_json` must be nul-terminated; `out` must be writable.
 */
enum HurwitzStatus hurwitz_molien_series_json(const char *config_json, uint32_t terms, char **out);

/**
 * # Safety
 * `out` must be writable. Free the table with [`hurwitz_char_table_free`].
 */
enum HurwitzStatus hurwitz_char_table_new(uint32_t d, struct HurwitzCharTable **out);

/**
 * # Safety
 * `table` must come from [`hurwitz_char_table_new`]; null is ignored.
 */
void hurwitz_char_table_free(struct HurwitzCharTable *table);

/**
 * Number of irreducibles, equal to the number of classes.
 *
 * # Safety
 * `table` must be a live table; `out` must be writable.
 */
enum HurwitzStatus hurwitz_char_table_size(const struct HurwitzCharTable *table, uintptr_t *out);

/**
 * Label of row (and column) `index` as "3,1,1".
 *
 * # Safety
 * `table` must be a live table; `out` must be writable.
 */
enum HurwitzStatus hurwitz_char_table_label(const struct HurwitzCharTable *table,
                                            uintptr_t index,
                                            char **out);

/**
 * χ^{irreps[irrep]}(classes[class]) as a decimal string.
 *
 * # Safety
 * `table` must be a live table; `out` must be writable.
 */
enum HurwitzStatus hurwitz_char_table_value(const struct HurwitzCharTable *table,
                                            uintptr_t irrep,
                                            uintptr_t class_,
                                            char **out);

/**
 * The whole table as JSON {"d", "irreps", "classes", "values"}.
 *
 * # Safety
 * `table` must be a live table; `out` must be writable.
 */
enum HurwitzStatus hurwitz_char_table_json(const struct HurwitzCharTable *table, char **out);

/**
 * # Safety
 * `out` must be writable. Free with [`hurwitz_covering_free`].
 */
enum HurwitzStatus hurwitz_covering_new(uint32_t d, struct HurwitzCovering **out);

/**
 * # Safety
 * `covering` must come from [`hurwitz_covering_new`]; null is ignored.
 */
void hurwitz_covering_free(struct HurwitzCovering *covering);

/**
 * Appends the ramification profile over one more branch point.
 *
 * # Safety
 * `covering` must be live; `profile` must be nul-terminated.
 */
enum HurwitzStatus hurwitz_covering_add_profile(struct HurwitzCovering *covering,
                                                const char *profile);

/**
 * Disconnected Hurwitz number as "p/q" or an integer string.
 *
 * # Safety
 * `covering` must be live; `out` must be writable.
 */
enum HurwitzStatus hurwitz_covering_disconnected(const struct HurwitzCovering *covering,
                                                 char **out);

/**
 * Connected Hurwitz number as "p/q" or an integer string.
 *
 * # Safety
 * `covering` must be live; `out` must be writable.
 */
enum HurwitzStatus hurwitz_covering_connected(const struct HurwitzCovering *covering, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HURWITZ_H */
