#ifndef BICLIQUE_BICLIQUE_H
#define BICLIQUE_BICLIQUE_H

#include <stddef.h>
#include <stdint.h>

#if defined(BICLIQUE_BUILDING_LIBRARY)
#define BICLIQUE_API __attribute__((visibility("default")))
#else
#define BICLIQUE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status. On failure bcp_last_error() describes it (per thread). */
typedef enum bcp_status {
  BCP_OK = 0,
  BCP_VALIDATION_FAILED = 1,
  BCP_INVALID_ARGUMENT = 2,
  BCP_MALFORMED_INPUT = 3,
  BCP_BUDGET_EXCEEDED = 4,
  BCP_NOT_FOUND = 5,
  BCP_PRECONDITION = 6,
  BCP_INTERNAL = 7
} bcp_status;

typedef struct bcp_graph bcp_graph;
typedef struct bcp_partition bcp_partition;
typedef struct bcp_witness bcp_witness;
typedef struct bcp_labeling bcp_labeling;

BICLIQUE_API const char* bcp_version(void);
BICLIQUE_API const char* bcp_last_error(void);
BICLIQUE_API const char* bcp_status_name(bcp_status status);
/* Frees any string returned through a char** out-parameter. */
BICLIQUE_API void bcp_string_free(char* s);

/* Graphs. Text format: "p <n> <m>" header, "e <u> <v>" lines, "#" comments. */
BICLIQUE_API bcp_status bcp_graph_new(size_t n, bcp_graph** out);
BICLIQUE_API bcp_status bcp_graph_complete(size_t n, bcp_graph** out);
BICLIQUE_API bcp_status bcp_graph_gnp(size_t n, double p, uint64_t seed, bcp_graph** out);
BICLIQUE_API bcp_status bcp_graph_parse(const char* text, bcp_graph** out);
BICLIQUE_API bcp_status bcp_graph_to_text(const bcp_graph* g, char** out);
BICLIQUE_API bcp_status bcp_graph_add_edge(bcp_graph* g, uint32_t u, uint32_t v);
BICLIQUE_API bcp_status bcp_graph_adjacent(const bcp_graph* g, uint32_t u, uint32_t v, int* out);
BICLIQUE_API size_t bcp_graph_order(const bcp_graph* g);
BICLIQUE_API size_t bcp_graph_edge_count(const bcp_graph* g);
BICLIQUE_API bcp_status bcp_graph_is_twin_free(const bcp_graph* g, int* out);
BICLIQUE_API void bcp_graph_free(bcp_graph* g);

/* Independent-set effort. mode: 0 automatic, 1 exact, 2 heuristic. */
typedef struct bcp_effort {
  int mode;
  unsigned restarts;
  size_t exact_cap;
  uint64_t node_budget; /* 0 = unlimited */
  unsigned local_search;
} bcp_effort;

BICLIQUE_API bcp_effort bcp_effort_default(void);
BICLIQUE_API bcp_status bcp_effort_mode_parse(const char* name, int* mode);

/* {"alpha": k, "set": [...]} */
BICLIQUE_API bcp_status bcp_alpha(const bcp_graph* g, const bcp_effort* effort, uint64_t seed, char** json_out);

/* Partitions. JSON: {"n", "method", "seed", "blocks": [{"left": [...], "right": [...]}]}. */
BICLIQUE_API bcp_status bcp_partition_parse_json(const char* text, bcp_partition** out);
BICLIQUE_API bcp_status bcp_partition_to_json(const bcp_partition* p, char** out);
BICLIQUE_API size_t bcp_partition_size(const bcp_partition* p);
BICLIQUE_API void bcp_partition_free(bcp_partition* p);
/* BCP_OK if p is an exact biclique partition of g; BCP_VALIDATION_FAILED with *detail set otherwise.
   detail may be NULL. */
BICLIQUE_API bcp_status bcp_partition_validate(const bcp_graph* g, const bcp_partition* p, char** detail);

typedef struct bcp_fk_params {
  unsigned k;
  unsigned r;
  unsigned s;
  unsigned tau;
} bcp_fk_params;

typedef struct bcp_decompose_options {
  bcp_effort effort;
  bcp_fk_params fk;
  uint64_t fk_budget;
} bcp_decompose_options;

BICLIQUE_API bcp_decompose_options bcp_decompose_options_default(void);

/* method: "stars", "three-stage" or "fk". The partition is validated before returning.
   report_json (may be NULL): alpha_hat, size, fell_back, three-stage report, fk witness. */
BICLIQUE_API bcp_status bcp_decompose(const bcp_graph* g, const char* method, const bcp_decompose_options* options,
                                      uint64_t seed, bcp_partition** out, char** report_json);

/* Exact bc by vector labelling. max_r < 0 means n. BCP_NOT_FOUND if bc > max_r.
   labeling_json (may be NULL) receives a witness labelling. */
BICLIQUE_API bcp_status bcp_exact_bc(const bcp_graph* g, int max_r, size_t max_vertices, unsigned* bc,
                                     char** labeling_json);
/* max(n+, n-) of the adjacency matrix; json_out (may be NULL) gets the full inertia. */
BICLIQUE_API bcp_status bcp_lower_bound(const bcp_graph* g, size_t* bound, char** json_out);

/* Patterned bipartite family. Witness JSON: {k, r, s, tau, groups, b, patterns}. */
BICLIQUE_API bcp_status bcp_fk_sample(bcp_fk_params params, uint64_t seed, unsigned attempts, bcp_witness** out);
BICLIQUE_API bcp_status bcp_fk_plant(size_t n, bcp_fk_params params, uint64_t seed, unsigned attempts,
                                     bcp_graph** graph, bcp_witness** witness);
BICLIQUE_API bcp_status bcp_fk_search(const bcp_graph* g, bcp_fk_params params, uint64_t seed, uint64_t budget,
                                      bcp_witness** out);
BICLIQUE_API bcp_status bcp_fk_member_graph(const bcp_witness* w, size_t n, bcp_graph** out);
BICLIQUE_API bcp_status bcp_fk_is_member(const bcp_graph* g, const bcp_witness* w, int* out);
BICLIQUE_API bcp_status bcp_fk_canonical(const bcp_witness* w, size_t n, bcp_partition** out);
BICLIQUE_API bcp_status bcp_fk_decompose(const bcp_graph* g, const bcp_witness* w, bcp_partition** out);
/* {"count", "by_placement", "formula_upper_ln"}. by_placement counts (placement, pattern) pairs and exceeds
   count when some graph has several role assignments. BCP_VALIDATION_FAILED if count > by_placement. */
BICLIQUE_API bcp_status bcp_fk_count(bcp_fk_params params, uint64_t work_cap, char** json_out);
/* {"j", "bound_ln", "layouts": [{"common", "count", "bound"}]} */
BICLIQUE_API bcp_status bcp_fk_joint(bcp_fk_params params, unsigned j, uint64_t work_cap, char** json_out);
BICLIQUE_API bcp_status bcp_witness_parse_json(const char* text, bcp_witness** out);
BICLIQUE_API bcp_status bcp_witness_to_json(const bcp_witness* w, char** out);
BICLIQUE_API void bcp_witness_free(bcp_witness* w);

/* Twin-free extremal graphs. Labeling JSON: {"r", "labels": ["012", ...]}. */
BICLIQUE_API bcp_status bcp_twinfree_construct(unsigned r, bcp_graph** graph, bcp_labeling** labeling);
/* BCP_OK when every property holds; BCP_VALIDATION_FAILED otherwise. report_json may be NULL. */
BICLIQUE_API bcp_status bcp_twinfree_verify(const bcp_graph* g, const bcp_labeling* l, char** report_json);
/* {"r", "order", "expected", "nodes", "witness"} */
BICLIQUE_API bcp_status bcp_twinfree_max_order(unsigned r, int support_lemma, char** json_out);
BICLIQUE_API bcp_status bcp_labeling_parse_json(const char* text, bcp_labeling** out);
BICLIQUE_API bcp_status bcp_labeling_to_json(const bcp_labeling* l, char** out);
BICLIQUE_API void bcp_labeling_free(bcp_labeling* l);

/* quantity: birthday, alpha, log-h, threshold, case1, claim32, count-formula.
   inputs_json holds the named inputs. Output:
   {"quantity", "inputs", "log2_value", "value_if_representable", ...}. */
BICLIQUE_API bcp_status bcp_asym_eval(const char* quantity, const char* inputs_json, char** json_out);

/* Runs an experiment config (JSON). csv and summary_json may be NULL. */
BICLIQUE_API bcp_status bcp_experiment_run(const char* config_json, char** csv, char** summary_json);

#ifdef __cplusplus
}
#endif

#endif
