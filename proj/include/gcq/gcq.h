/*
 * gcq: maximum cliques, k-cores and temporal strong components.
 *
 * C interface to the shared library. All objects are opaque handles created
 * by a gcq_*_read / gcq_*_parse / gcq_max_* call and released with the
 * matching gcq_*_free. Functions returning gcq_status report failures through
 * the status code; gcq_last_error() then describes the most recent failure on
 * the calling thread. Vertex ids are dense indices in [0, n).
 */
#ifndef GCQ_GCQ_H
#define GCQ_GCQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GCQ_BUILDING_LIBRARY)
#    define GCQ_API __declspec(dllexport)
#  else
#    define GCQ_API __declspec(dllimport)
#  endif
#else
#  define GCQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcq_status {
  GCQ_OK = 0,
  GCQ_ERR_INVALID_ARGUMENT = 1,
  GCQ_ERR_PARSE = 2,
  GCQ_ERR_IO = 3,
  GCQ_ERR_OUT_OF_RANGE = 4,
  GCQ_ERR_NO_MEMORY = 5,
  GCQ_ERR_INTERNAL = 6
} gcq_status;

typedef struct gcq_graph gcq_graph;
typedef struct gcq_temporal gcq_temporal;
typedef struct gcq_reach gcq_reach;
typedef struct gcq_clique gcq_clique;
typedef struct gcq_tscc gcq_tscc;

GCQ_API const char* gcq_version(void);
GCQ_API const char* gcq_status_string(gcq_status status);
/* Message of the last failure on this thread; "" if none. */
GCQ_API const char* gcq_last_error(void);
/* 1-based input line of the last GCQ_ERR_PARSE on this thread, else 0. */
GCQ_API size_t gcq_last_error_line(void);

/* ---- static graphs ---------------------------------------------------- */

typedef struct gcq_load_options {
  int directed;           /* input pairs are arcs */
  int reciprocal_only;    /* with directed: keep {u,v} only if both arcs exist */
  int largest_component;  /* restrict to the largest connected component */
} gcq_load_options;

/* Edge-list file: "src dst [ignored...]" per line, whitespace or commas,
 * '#'/'%' comment lines, MatrixMarket banner detected. opts may be NULL. */
GCQ_API gcq_status gcq_graph_read(const char* path, const gcq_load_options* opts, gcq_graph** out);
GCQ_API gcq_status gcq_graph_parse(const char* text, size_t len, const gcq_load_options* opts,
                                   gcq_graph** out);
/* pairs holds num_pairs (u, v) pairs as 2*num_pairs ids; vertices are labelled
 * by index. Self-loops and duplicates are dropped. */
GCQ_API gcq_status gcq_graph_from_edges(size_t n, const uint32_t* pairs, size_t num_pairs, gcq_graph** out);
GCQ_API gcq_status gcq_graph_largest_component(const gcq_graph* g, gcq_graph** out);
GCQ_API void gcq_graph_free(gcq_graph* g);

GCQ_API size_t gcq_graph_num_vertices(const gcq_graph* g);
GCQ_API size_t gcq_graph_num_edges(const gcq_graph* g);
GCQ_API gcq_status gcq_graph_degree(const gcq_graph* g, uint32_t v, size_t* out);
/* Original input label of v, or NULL when v is out of range. Owned by g. */
GCQ_API const char* gcq_graph_label(const gcq_graph* g, uint32_t v);
/* Writes "label label" per undirected edge. */
GCQ_API gcq_status gcq_graph_write_edges(const gcq_graph* g, const char* path);

/* ---- metrics ------------------------------------------------------------ */

typedef struct gcq_stats {
  uint64_t n;
  uint64_t m;
  uint64_t d_max;
  double d_avg;
  double mean_cc;
  double global_cc;
  uint64_t T;
  double T_avg;
  uint64_t sqrt_2T;
  uint32_t K;
  int has_omega;
  uint32_t omega;
  int omega_is_lower_bound;
  int has_gamma_K;
  double gamma_K;
} gcq_stats;

typedef struct gcq_clique_bounds {
  uint32_t lower_delta;
  uint32_t kcore_ub;
  uint32_t degree_ub;
  uint32_t triangle_ub;
  uint32_t best_ub;
} gcq_clique_bounds;

typedef struct gcq_search_options {
  uint32_t lb;
  int has_ub;
  uint32_t ub;
  double time_limit; /* seconds; negative means no limit */
  unsigned threads;
  int warm_start;    /* seed the search with the heuristic clique */
} gcq_search_options;

/* lb 0, no ub, no time limit, 1 thread, warm start on. */
GCQ_API void gcq_search_options_init(gcq_search_options* opts);

/* search may be NULL (defaults). omega/gamma_K filled only with with_clique. */
GCQ_API gcq_status gcq_graph_stats(const gcq_graph* g, int with_clique, const gcq_search_options* search,
                                   gcq_stats* out);
/* core_out may be NULL; otherwise it must hold n entries. */
GCQ_API gcq_status gcq_graph_core_numbers(const gcq_graph* g, uint32_t* core_out, uint32_t* degeneracy_out);
GCQ_API gcq_status gcq_graph_clique_bounds(const gcq_graph* g, gcq_clique_bounds* out);
/* GCQ_ERR_INVALID_ARGUMENT when the vertices do not form a clique. */
GCQ_API gcq_status gcq_kcore_recall(const gcq_graph* g, const uint32_t* vertices, size_t count, double* out);

GCQ_API const char* gcq_stats_csv_header(void);
/* snprintf-style: writes at most cap bytes including the NUL and returns the
 * full row length excluding the NUL. */
GCQ_API size_t gcq_stats_csv_row(const char* name, const gcq_stats* s, char* buf, size_t cap);

/* ---- cliques -------------------------------------------------------------- */

typedef struct gcq_clique_info {
  uint32_t size;       /* clique number found (lb when nothing larger exists) */
  size_t witness_size; /* entries behind gcq_clique_vertices */
  int exact;
  int ub_reached;
  int time_limited;
  uint64_t steps;
  double wall_time;
  double heuristic_time;
  uint32_t heuristic_size;
} gcq_clique_info;

GCQ_API gcq_status gcq_max_clique(const gcq_graph* g, const gcq_search_options* opts, gcq_clique** out);
GCQ_API gcq_status gcq_max_clique_heuristic(const gcq_graph* g, unsigned threads, gcq_clique** out);
GCQ_API void gcq_clique_free(gcq_clique* c);
GCQ_API void gcq_clique_get_info(const gcq_clique* c, gcq_clique_info* out);
/* Witness ids, ascending. Owned by c. */
GCQ_API const uint32_t* gcq_clique_vertices(const gcq_clique* c);
GCQ_API gcq_status gcq_verify_clique(const gcq_graph* g, const uint32_t* vertices, size_t count, int* out);

typedef struct gcq_sweep_row {
  uint32_t ub;
  double wall_time;
  uint32_t size;
  int exact;
  int ub_reached;
  int failed;
} gcq_sweep_row;

/* One exact run per ub value; rows_out must hold count rows. time_limit < 0
 * means none. A failing run sets failed in its row and the sweep continues. */
GCQ_API gcq_status gcq_ub_sweep(const gcq_graph* g, const uint32_t* ub_values, size_t count, unsigned threads,
                                double time_limit, gcq_sweep_row* rows_out);

/* ---- temporal graphs ------------------------------------------------------- */

/* "src dst time [ignored...]" per line. Undirected contacts are traversable
 * both ways at their timestamp. */
GCQ_API gcq_status gcq_temporal_read(const char* path, int directed, gcq_temporal** out);
GCQ_API gcq_status gcq_temporal_parse(const char* text, size_t len, int directed, gcq_temporal** out);
GCQ_API void gcq_temporal_free(gcq_temporal* t);
GCQ_API size_t gcq_temporal_num_vertices(const gcq_temporal* t);
GCQ_API size_t gcq_temporal_num_edges(const gcq_temporal* t);
GCQ_API const char* gcq_temporal_label(const gcq_temporal* t, uint32_t v);
/* Bytes of the n x n reach matrix the temporal routines allocate. */
GCQ_API uint64_t gcq_temporal_reach_bytes(const gcq_temporal* t);

GCQ_API gcq_status gcq_temporal_reach(const gcq_temporal* t, gcq_reach** out);
GCQ_API void gcq_reach_free(gcq_reach* r);
/* 1 if a strictly time-increasing path leads from -> to (from != to), else 0. */
GCQ_API int gcq_reach_query(const gcq_reach* r, uint32_t from, uint32_t to);
GCQ_API gcq_status gcq_temporal_strong_reachability(const gcq_temporal* t, gcq_graph** out);

GCQ_API gcq_status gcq_max_tscc(const gcq_temporal* t, const gcq_search_options* opts, gcq_tscc** out);
GCQ_API void gcq_tscc_free(gcq_tscc* r);
/* Borrowed views, valid until gcq_tscc_free. */
GCQ_API const gcq_clique* gcq_tscc_clique(const gcq_tscc* r);
GCQ_API const gcq_graph* gcq_tscc_reach_graph(const gcq_tscc* r);
GCQ_API void gcq_tscc_reach_stats(const gcq_tscc* r, gcq_stats* out);
GCQ_API double gcq_tscc_reach_time(const gcq_tscc* r);

#ifdef __cplusplus
}
#endif

#endif /* GCQ_GCQ_H */
