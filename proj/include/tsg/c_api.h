#ifndef TSG_C_API_H
#define TSG_C_API_H
/*
 * Stable C interface to the symmetry-classification engine.
 *
 * Usage: create an engine, call operations, free returned strings with
 * tsg_string_free, free the engine.  Every operation returns TSG_OK on
 * success; on failure it returns one of the error codes below, leaves its
 * output parameters untouched, and records a message retrievable with
 * tsg_last_error until the next call on the same engine.
 *
 * The engine is stateless apart from that message and internal caches;
 * operations on one engine are not thread-safe, but separate engines are
 * independent.  All strings are NUL-terminated UTF-8 (in practice ASCII).
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; they double as the CLI's exit codes. */
#define TSG_OK 0        /* success */
#define TSG_EPARSE 2    /* malformed textual input or bad argument value */
#define TSG_EDATA 3     /* well-formed input violating a data invariant */
#define TSG_EINTERNAL 4 /* unexpected internal failure */

typedef struct tsg_engine tsg_engine;

tsg_engine* tsg_engine_new(void);
void tsg_engine_free(tsg_engine* eng);

/* Message of the most recent failed call; "" when the last call succeeded.
 * The pointer stays valid until the next call on the engine. */
const char* tsg_last_error(const tsg_engine* eng);

/* Release a string returned through an out parameter. */
void tsg_string_free(char* s);

/* Classification table for K_n (3 <= n <= 6).
 * mode: "positive" | "full"; format: "markdown" | "csv" | "json". */
int tsg_classify_render(tsg_engine* eng, int n, const char* mode,
                        const char* format, int show_reasons, char** out);

/* Per-rule report for the closure of `generators` in S_n (4 <= n <= 6).
 * generators: semicolon-separated cycle notation, e.g. "(12); (34)(56)";
 * rules: "all" or a comma-separated list of rule ids. */
int tsg_check_group(tsg_engine* eng, int n, const char* generators,
                    const char* rules, const char* format, char** out);

/* Orbits of the closure of `generators` in S_6 on the ten complementary
 * triangle pairs of K6. */
int tsg_orbits(tsg_engine* eng, const char* generators, const char* format,
               char** out);

/* Subgroup-lattice summary of S_n (2 <= n <= 6). */
int tsg_subgroups(tsg_engine* eng, int n, const char* format, char** out);

/* Linking number of two vertex-disjoint cycles of an embedding given as
 * JSON text.  cycle_a / cycle_b: comma-separated vertex lists ("1,2,3").
 * On success *out holds the report line and, when lk is non-NULL, *lk the
 * exact linking number. */
int tsg_linking_number(tsg_engine* eng, const char* embedding_json,
                       const char* cycle_a, const char* cycle_b, char** out,
                       long long* lk);

/* Pairwise linking report and mod-2 invariant of a K6 embedding given as
 * JSON text; when invariant is non-NULL, *invariant receives the parity. */
int tsg_cg_check(tsg_engine* eng, const char* embedding_json, char** out,
                 int* invariant);

/* The invariant over `count` seeded random straight-line K6 embeddings
 * (seeds seed..seed+count-1); when good is non-NULL, *good receives the
 * number of embeddings with invariant 1. */
int tsg_cg_random(tsg_engine* eng, int count, uint64_t seed, char** out,
                  int* good);

/* Invariant report for a diagram in Gauss-code text (comments allowed).
 * with_det adds the determinant; with_mirror adds the mirror comparison. */
int tsg_bracket_report(tsg_engine* eng, const char* gauss_text, int with_det,
                       int with_mirror, const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TSG_C_API_H */
