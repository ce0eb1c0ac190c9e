/* kellymod: exact linear algebra over GF(p) and Q for inclusion matrices of
 * set systems, with verification harnesses for reconstruction statements on
 * set families, graphs, and tournaments.
 *
 * All functions return km_status; outputs are written through pointers.
 * Strings returned through char** are heap-allocated and must be released
 * with km_string_free. Handles are opaque and must be released with their
 * matching *_free function. On failure km_last_error() describes the cause
 * for the calling thread.
 */
#ifndef KELLYMOD_H
#define KELLYMOD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define KM_API __declspec(dllexport)
#else
#define KM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum km_status {
  KM_OK = 0,
  KM_ERR_ARGUMENT = 1,     /* bad argument or precondition violation */
  KM_ERR_RESOURCE = 2,     /* configured size cap exceeded */
  KM_ERR_PARSE = 3,        /* graph / tournament text rejected */
  KM_ERR_UNKNOWN_ID = 4,   /* theorem id not in the catalogue */
  KM_ERR_INTERNAL = 5
} km_status;

KM_API const char* km_version(void);
KM_API const char* km_last_error(void);
KM_API void km_string_free(char* s);

/* ---- exact combinatorics ---- */

/* C(n, r) as a decimal string; 0 when r < 0 or r > n. */
KM_API km_status km_binomial(uint32_t n, int64_t r, char** out_decimal);
/* C(k, t) mod p by the base-p digit product. */
KM_API km_status km_binomial_mod_p(uint64_t k, uint64_t t, uint32_t p, uint32_t* out);
/* requires t <= k */
KM_API km_status km_p_divides_binomial(uint64_t k, uint64_t t, uint32_t p, int* out);
/* little-endian digits of n base p; *inout_len carries capacity in, length out */
KM_API km_status km_digits_base_p(uint64_t n, uint32_t p, uint32_t* digits, size_t* inout_len);

/* subsets of {0..v-1} as bitmasks, colex order */
KM_API km_status km_subset_rank(uint32_t mask, uint64_t* out_rank);
KM_API km_status km_subset_unrank(uint64_t rank, uint32_t card, uint32_t v, uint32_t* out_mask);

/* ---- matrices ---- */

typedef struct km_matrix km_matrix;

KM_API km_status km_inclusion_matrix(uint32_t v, uint32_t t, uint32_t k, km_matrix** out);
KM_API km_status km_kneser_matrix(uint32_t t, uint32_t v, km_matrix** out);
KM_API void km_matrix_free(km_matrix* m);
KM_API uint64_t km_matrix_rows(const km_matrix* m);
KM_API uint64_t km_matrix_cols(const km_matrix* m);
KM_API km_status km_matrix_entry(const km_matrix* m, uint64_t i, uint64_t j, int64_t* out);
KM_API km_status km_matrix_rank_mod_p(const km_matrix* m, uint32_t p, uint64_t* out);
KM_API km_status km_matrix_rank_rational(const km_matrix* m, uint64_t* out);
/* basis of { x : x . m = 0 (mod p) } as a new matrix handle, one row per vector */
KM_API km_status km_matrix_left_kernel_mod_p(const km_matrix* m, uint32_t p, km_matrix** out_basis);
/* invariant factors as JSON {"rows":..,"cols":..,"factors":[{"value":"d","mult":n},..]} */
KM_API km_status km_matrix_smith_normal_form(const km_matrix* m, char** out_json);

KM_API km_status km_wilson_rank(uint32_t v, uint32_t t, uint32_t k, uint32_t p, uint64_t* out);
/* diagonal-form spec as JSON in the same shape as the Smith form output */
KM_API km_status km_wilson_diagonal(uint32_t v, uint32_t t, uint32_t k, char** out_json);

typedef enum km_kernel_tag { KM_KERNEL_TRIVIAL = 0, KM_KERNEL_ALL_ONES = 1, KM_KERNEL_OTHER = 2 } km_kernel_tag;
KM_API km_status km_kernel_class(uint32_t t, uint32_t k, uint32_t p, km_kernel_tag* out);

/* ---- graphs and tournaments ---- */

typedef struct km_graph km_graph;
typedef struct km_tournament km_tournament;

KM_API km_status km_graph_parse(const char* text, km_graph** out);
KM_API km_status km_graph_serialize(const km_graph* g, char** out);
KM_API void km_graph_free(km_graph* g);
KM_API uint32_t km_graph_vertices(const km_graph* g);
KM_API uint64_t km_graph_edges(const km_graph* g);
KM_API km_status km_graph_induced_edge_count(const km_graph* g, uint32_t vertex_mask, uint64_t* out);
KM_API km_status km_graph_boolean_sum(const km_graph* g, const km_graph* g2, km_graph** out);
KM_API km_status km_graph_is_complete_bipartite(const km_graph* g, int* out);
KM_API km_status km_graph_is_claw_free(const km_graph* g, int* out);
KM_API km_status km_graph_h3_count(const km_graph* g, uint64_t* out);
KM_API km_status km_graph_p4_count(const km_graph* g, uint64_t* out);

KM_API km_status km_tournament_parse(const char* text, km_tournament** out);
KM_API km_status km_tournament_serialize(const km_tournament* t, char** out);
KM_API void km_tournament_free(km_tournament* t);
KM_API uint32_t km_tournament_vertices(const km_tournament* t);
KM_API km_status km_tournament_dual(const km_tournament* t, km_tournament** out);
KM_API km_status km_tournament_c3_count(const km_tournament* t, uint64_t* out);
KM_API km_status km_tournament_diamond_counts(const km_tournament* t, uint64_t* out_plus, uint64_t* out_minus);
KM_API km_status km_tournament_circular(uint32_t h, km_tournament** out);
KM_API km_status km_tournament_is_interval(const km_tournament* t, uint32_t vertex_mask, int* out);
KM_API km_status km_tournament_hypomorphic_up_to(const km_tournament* t, const km_tournament* t2, uint32_t k,
                                                 int up_to_duality, int* out);

/* ---- command-level reports (JSON, schema-stable) ----
 *
 * Report schema: {"command": string, "params": object, "verdict":
 * "pass"|"fail", "route": string, "counters": object of integers,
 * "counterexamples": array, "seed": integer|null, "ms": integer}.
 */

/* p = 0 computes the rational rank only */
KM_API km_status km_cmd_rank(uint32_t v, uint32_t t, uint32_t k, uint32_t p, char** out_json);
/* report plus the kernel basis rows, one residue row vector per line */
KM_API km_status km_cmd_kernel(uint32_t v, uint32_t t, uint32_t k, uint32_t p, char** out_json, char** out_basis);
/* params_json: {"v":..,"t":..,"k":..,"p":..,"r":..,"graph":"...",...};
 * options_json (may be NULL): {"seed":n,"threads":n,"route":"exhaustive"|"sampled"|"kernel","sample_cap":n} */
KM_API km_status km_cmd_verify(const char* id, const char* params_json, const char* options_json, char** out_json);
/* newline-separated catalogue of theorem ids */
KM_API km_status km_catalogue(char** out_text);
/* profile "quick" or "full"; out_json gets the aggregate report and, when
 * out_sub_json is non-NULL, the sub-reports as a JSON array */
KM_API km_status km_cmd_suite(const char* profile, const char* options_json, char** out_json, char** out_sub_json);

#ifdef __cplusplus
}
#endif

#endif /* KELLYMOD_H */
