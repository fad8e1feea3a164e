/* C interface of the directed-hypergraph library.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions return DHG_OK on success; on any other status,
 * dhg_last_error_message() gives a human-readable detail for the calling
 * thread. Output buffers are provided by the caller; the required capacity
 * is stated per function.
 */
#ifndef DHG_H
#define DHG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dhg_status {
    DHG_OK = 0,
    DHG_ERR_EMPTY_TAIL,
    DHG_ERR_EMPTY_HEAD,
    DHG_ERR_VERTEX_OUT_OF_RANGE,
    DHG_ERR_DOUBLE_INIT,
    DHG_ERR_MERGE_SAME_CLASS,
    DHG_ERR_NOT_REPRESENTATIVE,
    DHG_ERR_EMPTY_HYPERGRAPH,
    DHG_ERR_CYCLIC,
    DHG_ERR_NOT_TRANSITIVE,
    DHG_ERR_TOO_MANY_VARIABLES,
    DHG_ERR_UNUSED_VARIABLE,
    DHG_ERR_DUPLICATE_SET,
    DHG_ERR_BAD_N,
    DHG_ERR_PARSE,
    DHG_ERR_INVALID_ARGUMENT,
    DHG_ERR_INTERNAL,
} dhg_status;

typedef struct dhg_hypergraph dhg_hypergraph;
typedef struct dhg_components dhg_components;
typedef struct dhg_horn dhg_horn;
typedef struct dhg_family dhg_family;

typedef struct dhg_run_stats {
    uint64_t makeset_calls;
    uint64_t find_calls;
    uint64_t merge_calls;
    uint64_t fu_pushes;
    uint64_t f_pushes;
    uint64_t inner_loop_iterations;
} dhg_run_stats;

typedef struct dhg_growth_row {
    uint32_t n;
    uint64_t hypergraph_size;
    uint64_t reduction_size;
} dhg_growth_row;

const char* dhg_status_name(dhg_status status);

/* Message of the most recent failure on this thread; empty string if none. */
const char* dhg_last_error_message(void);

/* ---- hypergraphs ---- */

dhg_status dhg_hypergraph_create(uint32_t vertex_count, dhg_hypergraph** out);
dhg_status dhg_hypergraph_add_arc(dhg_hypergraph* h, const uint32_t* tail,
                                  size_t tail_len, const uint32_t* head,
                                  size_t head_len, uint32_t* arc_index_out);
dhg_status dhg_hypergraph_parse(const char* text, dhg_hypergraph** out);
void dhg_hypergraph_free(dhg_hypergraph* h);

uint32_t dhg_hypergraph_vertex_count(const dhg_hypergraph* h);
uint32_t dhg_hypergraph_arc_count(const dhg_hypergraph* h);
uint64_t dhg_hypergraph_size(const dhg_hypergraph* h);

/* Canonical text form; free the returned string with dhg_string_free. */
dhg_status dhg_hypergraph_format(const dhg_hypergraph* h, char** out);
void dhg_string_free(char* text);

/* members_out needs capacity vertex_count; *count_out gets the fill. */
dhg_status dhg_reachable_set(const dhg_hypergraph* h, uint32_t from,
                             uint32_t* members_out, size_t* count_out);
dhg_status dhg_is_reachable(const dhg_hypergraph* h, uint32_t from, uint32_t to,
                            int* out);

dhg_status dhg_terminal_sccs(const dhg_hypergraph* h, dhg_components** out,
                             dhg_run_stats* stats_out /* may be NULL */);
void dhg_components_free(dhg_components* c);
size_t dhg_components_count(const dhg_components* c);
size_t dhg_components_size(const dhg_components* c, size_t index);
/* Pointer into the handle; valid until dhg_components_free. */
const uint32_t* dhg_components_members(const dhg_components* c, size_t index);
int dhg_components_is_terminal(const dhg_components* c, size_t index);

dhg_status dhg_has_sink(const dhg_hypergraph* h, int* out);
dhg_status dhg_is_strongly_connected(const dhg_hypergraph* h, int* out);

dhg_status dhg_transitive_reduction_size(const dhg_hypergraph* h, uint64_t* out);

/* order_out needs capacity vertex_count. */
dhg_status dhg_topological_sort(const dhg_hypergraph* h, uint32_t* order_out);

/* rows_out needs one slot per entry of n_values. */
dhg_status dhg_growth_experiment(const uint32_t* n_values, size_t count,
                                 dhg_growth_row* rows_out);

/* ---- Horn formulas ---- */

dhg_status dhg_horn_parse(const char* text, dhg_horn** out);
void dhg_horn_free(dhg_horn* f);
uint32_t dhg_horn_var_count(const dhg_horn* f);

dhg_status dhg_horn_entails(const dhg_horn* f, uint32_t from_var, uint32_t to_var,
                            int* out);
/* *var_out gets the smallest qualifying variable, or 0 when none exists. */
dhg_status dhg_horn_implied_by_all(const dhg_horn* f, uint32_t* var_out);
dhg_status dhg_horn_all_equivalent(const dhg_horn* f, int* out);

/* ---- set families ---- */

dhg_status dhg_family_parse(const char* text, dhg_family** out);
void dhg_family_free(dhg_family* f);
uint32_t dhg_family_set_count(const dhg_family* f);
uint32_t dhg_family_domain_size(const dhg_family* f);

dhg_status dhg_family_format(const dhg_family* f, char** out);
dhg_status dhg_lower_bound_family(uint32_t n, dhg_family** out);

/* The subset hypergraph of the family, as a fresh handle. */
dhg_status dhg_family_hypergraph(const dhg_family* f, dhg_hypergraph** out);

/* indices_out needs capacity set_count. */
dhg_status dhg_minimal_sets(const dhg_family* f, uint32_t* indices_out,
                            size_t* count_out);
dhg_status dhg_is_sperner(const dhg_family* f, int* out);
/* order_out needs capacity set_count. */
dhg_status dhg_linear_extension(const dhg_family* f, uint32_t* order_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DHG_H */
