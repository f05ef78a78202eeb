/* matrex: matroid expansion/contraction toolkit, C interface.
 *
 * All objects are opaque handles created by the library and released with
 * the matching *_free function. Functions return MX_OK on success; on any
 * other status mx_last_error() describes the failure (thread-local, valid
 * until the next failing call on the same thread). Strings returned through
 * char** out parameters are heap-allocated; release them with
 * mx_string_free. Handles are not synchronized; do not share one handle
 * between threads without external locking.
 */
#ifndef MATREX_H
#define MATREX_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mx_status {
    MX_OK = 0,
    MX_ERR_INVALID = 1, /* semantic error: bad argument, violated precondition */
    MX_ERR_PARSE = 2    /* syntax error; message carries the line number */
} mx_status;

typedef struct mx_family mx_family; /* ground set + set family (maybe a matroid) */
typedef struct mx_graph mx_graph;
typedef struct mx_system mx_system;
typedef struct mx_alpha mx_alpha;

const char* mx_last_error(void);
void mx_string_free(char* s);
void mx_family_free(mx_family* f);
void mx_graph_free(mx_graph* g);
void mx_system_free(mx_system* s);
void mx_alpha_free(mx_alpha* a);

/* -- parsing and serialization (line-oriented v1 formats) ---------------- */

mx_status mx_family_parse(const char* text, mx_family** out);
mx_status mx_graph_parse(const char* text, mx_graph** out);
mx_status mx_system_parse(const char* text, mx_system** out);
mx_status mx_alpha_parse(const char* text, mx_alpha** out);
/* Comma- or space-separated multiplicities, e.g. "1,1,2". */
mx_status mx_alpha_from_csv(const char* csv, mx_alpha** out);

mx_status mx_family_serialize(const mx_family* f, char** out_text);

/* -- queries on families -------------------------------------------------- */

mx_status mx_family_is_antichain(const mx_family* f, int* out);
mx_status mx_family_is_matroid(const mx_family* f, int* out);
/* The remaining queries require the family to be a matroid. */
mx_status mx_family_rank(const mx_family* f, int* out);
/* One circuit per line, canonical order; empty string for a free matroid. */
mx_status mx_family_circuits(const mx_family* f, char** out_text);
mx_status mx_family_is_binary(const mx_family* f, int* out);
mx_status mx_family_is_contracted(const mx_family* f, int* out);

/* -- constructions --------------------------------------------------------- */

/* elements: space-separated labels, e.g. "x1 x3". */
mx_status mx_family_restrict(const mx_family* f, const char* elements, mx_family** out);
mx_status mx_family_expand(const mx_family* f, const mx_alpha* a, mx_family** out);
mx_status mx_family_contract(const mx_family* f, mx_family** out);
mx_status mx_family_direct_sum(const mx_family* a, const mx_family* b, mx_family** out);
mx_status mx_family_add_coloop(const mx_family* f, const char* element, mx_family** out);
/* out_found: 1 and a "xI -> xJ" map text when isomorphic, else 0. */
mx_status mx_family_isomorphism(const mx_family* a, const mx_family* b, int* out_found,
                                char** out_map_text);

mx_status mx_uniform(int rank, int size, mx_family** out);
mx_status mx_partition(const mx_system* partition, int rank, mx_family** out);
mx_status mx_graphic(const mx_graph* g, mx_family** out);
mx_status mx_transversal(const mx_system* s, mx_family** out);

/* -- bounded symmetric-exchange connectivity ------------------------------ */

/* verdict: 0 holds_at_m, 1 fails_at_m, 2 budget_exceeded. out_text is the
 * verdict line plus witness lines on failure. budget 0 selects the default
 * (10^6 nodes). */
mx_status mx_te_check(const mx_family* f, int exchange_class, int length,
                      uint64_t budget, int* out_verdict, char** out_text);
/* all_hold: 1 iff every class/length verdict is holds_at_m. */
mx_status mx_white_report(const mx_family* f, int m_max, uint64_t budget,
                          int kv_format, int* out_all_hold, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* MATREX_H */
