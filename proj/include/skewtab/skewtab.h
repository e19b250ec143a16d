/* skewtab: exact skew standard Young tableau counts, Kostka numbers and
 * symmetric group character values, with built-in cross-verification.
 *
 * All counts are exact and returned as decimal strings (they outgrow 64
 * bits quickly). Every function returns a status code; on failure a
 * human-readable message is available from skewtab_last_error() until the
 * next call on the same thread. Strings returned through char** out
 * parameters are owned by the caller and released with
 * skewtab_string_free(); handles with skewtab_partition_free().
 *
 * All functions are safe to call concurrently from multiple threads.
 */
#ifndef SKEWTAB_H
#define SKEWTAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skewtab_status {
  SKEWTAB_OK = 0,
  SKEWTAB_INVALID_ARGUMENT = 1, /* null pointer or similar misuse */
  SKEWTAB_PARSE_ERROR = 2,      /* malformed partition/weight text */
  SKEWTAB_DOMAIN_ERROR = 3,     /* valid input outside an operation's domain */
  SKEWTAB_UNSUPPORTED = 4,      /* unknown method, suite or cycle type */
  SKEWTAB_CAP_EXCEEDED = 5,     /* enumeration past the configured cell cap */
  SKEWTAB_INTERNAL_ERROR = 6    /* exactness invariant broke; report a bug */
} skewtab_status;

/* Opaque validated partition handle. */
typedef struct skewtab_partition skewtab_partition;

const char* skewtab_version(void);
const char* skewtab_status_name(skewtab_status status);

/* Message for the most recent failure on the calling thread ("" if none). */
const char* skewtab_last_error(void);

void skewtab_string_free(char* s);

/* Partition text is comma-separated positive non-increasing parts with
 * exponent sugar: "3,2,1" or "3,1^3" (= 3,1,1,1). */
skewtab_status skewtab_partition_parse(const char* text, skewtab_partition** out);
void skewtab_partition_free(skewtab_partition* p);
skewtab_status skewtab_partition_to_string(const skewtab_partition* p, char** out);

/* f^mu, the number of standard Young tableaux of shape mu. */
skewtab_status skewtab_hook_count(const skewtab_partition* mu, char** out_value);

/* f^{mu/(m)}, the number of skew standard tableaux after removing an
 * m-cell strip from the first row. Requires 1 <= m <= n and mu_1 >= m.
 * method: "closed"      exact closed form (m <= 4)
 *         "determinant" factorial-determinant evaluation
 *         "enumerate"   exhaustive backtracking (cell cap applies)
 *         "frobenius"   character expansion over partitions of m
 * enum_cap: cell cap for "enumerate"; 0 means the built-in default. */
skewtab_status skewtab_skew_count(const skewtab_partition* mu, unsigned m,
                                  const char* method, unsigned enum_cap,
                                  char** out_value);

/* Kostka number K(mu, weight). Weights of the form (m,1^k) are answered
 * by the closed forms; anything else is counted by exhaustive
 * semistandard fill under enum_cap (0 = default). */
skewtab_status skewtab_kostka(const skewtab_partition* mu, const char* weight,
                              unsigned enum_cap, char** out_value);

/* Character chi^mu(cycle_type), with cycle_type padded by fixed points up
 * to |mu|. method: "lassalle" for the closed evaluations (cycle types
 * (m,1^k) with m = 2..6 and (2,2,1^k)) or "mn" for the general
 * Murnaghan-Nakayama recursion. */
skewtab_status skewtab_character(const skewtab_partition* mu, const char* cycle_type,
                                 const char* method, char** out_value);

/* Table over all partitions of n in reverse-lexicographic order with
 * columns f^mu and f^{mu/(m)} for each m in ms; format "csv" or "json".
 * Output is byte-deterministic for fixed inputs. */
skewtab_status skewtab_table(unsigned n, const unsigned* ms, size_t m_count,
                             const char* format, char** out_text);

/* Runs a verification suite: "arith", "conjugate", "prop1", "characters",
 * "closed-forms" or "all". max_n <= 0 picks per-suite defaults;
 * enumeration-backed checks stay capped regardless. enum_cap 0 is the
 * default cell cap. On SKEWTAB_OK, *out_json holds the JSON report and
 * *out_failures the total number of failed checks (0 means the suite
 * passed). */
skewtab_status skewtab_verify(const char* suite, int max_n, unsigned enum_cap,
                              char** out_json, long* out_failures);

#ifdef __cplusplus
}
#endif

#endif /* SKEWTAB_H */
