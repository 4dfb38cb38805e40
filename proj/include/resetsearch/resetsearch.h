#ifndef RESETSEARCH_H
#define RESETSEARCH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rs_status {
  RS_OK = 0,
  RS_ERR_ARGUMENT = 1, /* invalid argument or flag combination */
  RS_ERR_PARSE = 2,    /* malformed automaton, pool or report text */
  RS_ERR_IO = 3,       /* file could not be read or written */
  RS_ERR_STATE = 4,    /* operation not valid for this input */
  RS_ERR_NOMEM = 5
} rs_status;

/* Message for the most recent failure on the calling thread. Never NULL;
 * empty after a success. The pointer stays valid until the next call on the
 * same thread. */
const char* rs_last_error(void);

const char* rs_version(void);

/* ---- automata ---------------------------------------------------------- */

typedef struct rs_automaton rs_automaton;

/* Text form: "n k : r00 r01 .. ; r10 r11 .." with one row per letter. */
rs_status rs_automaton_parse(const char* line, rs_automaton** out);

/* delta is letter-major, n*k entries, delta[a*n + q] = destination of state
 * q under letter a. */
rs_status rs_automaton_create(int n, int k, const uint8_t* delta,
                              rs_automaton** out);

void rs_automaton_free(rs_automaton* a);

int rs_automaton_states(const rs_automaton* a);
int rs_automaton_letters(const rs_automaton* a);

/* Copies the letter-major table into buf (needs n*k bytes). */
rs_status rs_automaton_table(const rs_automaton* a, uint8_t* buf, size_t len);

/* Every returned string is owned by the caller; release with
 * rs_string_free. */
rs_status rs_automaton_to_line(const rs_automaton* a, char** out);

/* Text form of the least isomorphic relabeling (states and letters). */
rs_status rs_automaton_canonical_line(const rs_automaton* a, char** out);

void rs_string_free(char* s);

/* ---- synchronization --------------------------------------------------- */

typedef struct rs_reset_result {
  int synchronizing;
  int reset_length; /* -1 when not synchronizing */
  int min_rank;
  int min_rank_word_length;
} rs_reset_result;

rs_status rs_reset_analysis(const rs_automaton* a, rs_reset_result* out);

/* Lexicographically least shortest reset word, letter indices as digits
 * (comma separated past ten letters). Empty string when the automaton has a
 * single state. Fails with RS_ERR_STATE when not synchronizing. */
rs_status rs_reset_word(const rs_automaton* a, char** out);

/* Predicates return 1 or 0, or -1 on error (see rs_last_error). */
int rs_is_synchronizing(const rs_automaton* a);
int rs_is_strongly_connected(const rs_automaton* a);
int rs_is_irreducibly_synchronizing(const rs_automaton* a);

/* ---- bounds ------------------------------------------------------------ */

/* Multi-line diagnostic: rank data, pair counts, sequence lengths, the
 * rank-descent bound and a line per one-cluster transformation of the
 * semigroup. */
rs_status rs_bound_report_text(const rs_automaton* a, uint64_t semigroup_cap,
                               char** out);

/* Table of cyclic-vector bounds for composite cycle lengths up to max_m
 * (at most 24 via this entry point). */
rs_status rs_dstar_tables_text(int max_m, char** out);

/* Single values; -1 on error. */
int rs_dstar_value(int m, int k);
int64_t rs_sum_dstar(int m);

/* ---- search pipeline --------------------------------------------------- */

typedef struct rs_sieve_config {
  int threshold;
  uint64_t semigroup_cap;
  int assume_cerny_below;
  int use_pairs_bound;
  int use_pin_bound;
  int use_one_cluster;
  int use_reducible_generators;
  int use_twin_pairs;
  int use_alternating_letters;
} rs_sieve_config;

void rs_sieve_config_default(rs_sieve_config* cfg);

/* Every function taking an rs_sieve_config treats a NULL cfg as defaults. */

/* Enumerates the unary automata on n states (n <= 8), sieves them, writes
 * the surviving pool. */
rs_status rs_write_unary_pool(int n, const rs_sieve_config* cfg,
                              const char* pool_path);

/* Extends every pool member by one letter, sieves the deduplicated
 * children, and writes the requested files (any output path may be NULL). */
rs_status rs_extend_pool(const char* pool_in_path, const rs_sieve_config* cfg,
                         int jobs, const char* pool_out_path,
                         const char* reports_path, const char* stats_path);

/* Seed stage plus extensions up to k letters. Writes pool.k<K>.aut,
 * reports.k<K>.tsv and stats.k<K>.txt into workdir for every stage K. */
rs_status rs_search(int n, int k, const rs_sieve_config* cfg, int jobs,
                    const char* workdir);

/* One-line shape and size summary of a pool file. */
rs_status rs_pool_stats_text(const char* pool_path, char** out);

#ifdef __cplusplus
}
#endif

#endif /* RESETSEARCH_H */
