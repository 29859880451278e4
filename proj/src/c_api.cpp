#include "gcq/gcq.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "gcq/clique.hpp"
#include "gcq/error.hpp"
#include "gcq/graph.hpp"
#include "gcq/metrics.hpp"
#include "gcq/stats.hpp"
#include "gcq/sweep.hpp"
#include "gcq/temporal.hpp"

struct gcq_graph {
  gcq::Graph g;
};

struct gcq_temporal {
  gcq::TemporalGraph t;
};

struct gcq_reach {
  gcq::ReachabilityGraph r;
};

struct gcq_clique {
  gcq::CliqueResult r;
};

struct gcq_tscc {
  gcq_clique clique;
  gcq_graph reach_graph;
  gcq::GraphStats reach_stats;
  double reach_time = 0.0;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_error_line = 0;

gcq_status fail(gcq_status status, const std::string& message, std::size_t line = 0) {
  last_error = message;
  last_error_line = line;
  return status;
}

template <typename F>
gcq_status guarded(F&& body) {
  try {
    last_error.clear();
    last_error_line = 0;
    body();
    return GCQ_OK;
  } catch (const gcq::ParseError& e) {
    return fail(GCQ_ERR_PARSE, e.what(), e.line());
  } catch (const gcq::IoError& e) {
    return fail(GCQ_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GCQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(GCQ_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GCQ_ERR_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(GCQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GCQ_ERR_INTERNAL, "unknown error");
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

gcq::SearchOptions to_options(const gcq_search_options* opts) {
  gcq::SearchOptions o;
  if (!opts) return o;
  o.bounds.lb = opts->lb;
  if (opts->has_ub) o.bounds.ub = opts->ub;
  if (opts->time_limit >= 0.0) o.bounds.time_limit = opts->time_limit;
  o.threads = std::max(1u, opts->threads);
  o.warm_start = opts->warm_start != 0;
  return o;
}

gcq::Graph load(gcq::EdgeList list, const gcq_load_options* opts) {
  bool reciprocal = opts && opts->reciprocal_only;
  gcq::Graph g = gcq::build_graph(list, reciprocal);
  if (opts && opts->largest_component) g = gcq::largest_component(g);
  return g;
}

void to_c(const gcq::GraphStats& s, gcq_stats* out) {
  *out = gcq_stats{};
  out->n = s.n;
  out->m = s.m;
  out->d_max = s.d_max;
  out->d_avg = s.d_avg;
  out->mean_cc = s.mean_cc;
  out->global_cc = s.global_cc;
  out->T = s.T;
  out->T_avg = s.T_avg;
  out->sqrt_2T = s.sqrt_2T;
  out->K = s.K;
  out->has_omega = s.omega.has_value();
  out->omega = s.omega.value_or(0);
  out->omega_is_lower_bound = s.omega_is_lower_bound;
  out->has_gamma_K = s.gamma_K.has_value();
  out->gamma_K = s.gamma_K.value_or(0.0);
}

gcq::GraphStats from_c(const gcq_stats& c) {
  gcq::GraphStats s;
  s.n = c.n;
  s.m = c.m;
  s.d_max = c.d_max;
  s.d_avg = c.d_avg;
  s.mean_cc = c.mean_cc;
  s.global_cc = c.global_cc;
  s.T = c.T;
  s.T_avg = c.T_avg;
  s.sqrt_2T = c.sqrt_2T;
  s.K = c.K;
  if (c.has_omega) s.omega = c.omega;
  s.omega_is_lower_bound = c.omega_is_lower_bound != 0;
  if (c.has_gamma_K) s.gamma_K = c.gamma_K;
  return s;
}

}  // namespace

extern "C" {

const char* gcq_version(void) { return "1.0.0"; }

const char* gcq_status_string(gcq_status status) {
  switch (status) {
    case GCQ_OK: return "ok";
    case GCQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GCQ_ERR_PARSE: return "parse error";
    case GCQ_ERR_IO: return "i/o error";
    case GCQ_ERR_OUT_OF_RANGE: return "out of range";
    case GCQ_ERR_NO_MEMORY: return "out of memory";
    case GCQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gcq_last_error(void) { return last_error.c_str(); }
size_t gcq_last_error_line(void) { return last_error_line; }

gcq_status gcq_graph_read(const char* path, const gcq_load_options* opts, gcq_graph** out) {
  return guarded([&] {
    require(path && out, "gcq_graph_read: null argument");
    bool directed = opts && opts->directed;
    auto list = gcq::read_edge_list(path, gcq::EdgeListDialect::kAuto, directed);
    *out = new gcq_graph{load(std::move(list), opts)};
  });
}

gcq_status gcq_graph_parse(const char* text, size_t len, const gcq_load_options* opts, gcq_graph** out) {
  return guarded([&] {
    require((text || len == 0) && out, "gcq_graph_parse: null argument");
    bool directed = opts && opts->directed;
    auto list = gcq::parse_edge_list(std::string_view(text ? text : "", len), gcq::EdgeListDialect::kAuto, directed);
    *out = new gcq_graph{load(std::move(list), opts)};
  });
}

gcq_status gcq_graph_from_edges(size_t n, const uint32_t* pairs, size_t num_pairs, gcq_graph** out) {
  return guarded([&] {
    require((pairs || num_pairs == 0) && out, "gcq_graph_from_edges: null argument");
    std::vector<gcq::Edge> edges(num_pairs);
    for (size_t i = 0; i < num_pairs; ++i) edges[i] = {pairs[2 * i], pairs[2 * i + 1]};
    *out = new gcq_graph{gcq::Graph::from_edges(n, edges)};
  });
}

gcq_status gcq_graph_largest_component(const gcq_graph* g, gcq_graph** out) {
  return guarded([&] {
    require(g && out, "gcq_graph_largest_component: null argument");
    *out = new gcq_graph{gcq::largest_component(g->g)};
  });
}

void gcq_graph_free(gcq_graph* g) { delete g; }

size_t gcq_graph_num_vertices(const gcq_graph* g) { return g ? g->g.num_vertices() : 0; }
size_t gcq_graph_num_edges(const gcq_graph* g) { return g ? g->g.num_edges() : 0; }

gcq_status gcq_graph_degree(const gcq_graph* g, uint32_t v, size_t* out) {
  return guarded([&] {
    require(g && out, "gcq_graph_degree: null argument");
    *out = gcq::degree(g->g, v);
  });
}

const char* gcq_graph_label(const gcq_graph* g, uint32_t v) {
  if (!g || v >= g->g.num_vertices()) return nullptr;
  return g->g.label(v).c_str();
}

gcq_status gcq_graph_write_edges(const gcq_graph* g, const char* path) {
  return guarded([&] {
    require(g && path, "gcq_graph_write_edges: null argument");
    std::ofstream out(path);
    if (!out) throw gcq::IoError(std::string("cannot open '") + path + "' for writing");
    gcq::write_edge_list(g->g, out);
    if (!out) throw gcq::IoError(std::string("write to '") + path + "' failed");
  });
}

void gcq_search_options_init(gcq_search_options* opts) {
  if (!opts) return;
  *opts = gcq_search_options{};
  opts->time_limit = -1.0;
  opts->threads = 1;
  opts->warm_start = 1;
}

gcq_status gcq_graph_stats(const gcq_graph* g, int with_clique, const gcq_search_options* search, gcq_stats* out) {
  return guarded([&] {
    require(g && out, "gcq_graph_stats: null argument");
    to_c(gcq::stats(g->g, with_clique != 0, to_options(search)), out);
  });
}

gcq_status gcq_graph_core_numbers(const gcq_graph* g, uint32_t* core_out, uint32_t* degeneracy_out) {
  return guarded([&] {
    require(g != nullptr, "gcq_graph_core_numbers: null graph");
    auto cores = gcq::core_decomposition(g->g);
    if (core_out) std::copy(cores.core_number.begin(), cores.core_number.end(), core_out);
    if (degeneracy_out) *degeneracy_out = cores.degeneracy;
  });
}

gcq_status gcq_graph_clique_bounds(const gcq_graph* g, gcq_clique_bounds* out) {
  return guarded([&] {
    require(g && out, "gcq_graph_clique_bounds: null argument");
    auto b = gcq::clique_bounds(g->g);
    *out = gcq_clique_bounds{b.lower_delta, b.kcore_ub, b.degree_ub, b.triangle_ub, b.best_ub};
  });
}

gcq_status gcq_kcore_recall(const gcq_graph* g, const uint32_t* vertices, size_t count, double* out) {
  return guarded([&] {
    require(g && out && (vertices || count == 0), "gcq_kcore_recall: null argument");
    *out = gcq::kcore_recall(g->g, std::span<const uint32_t>(vertices, count));
  });
}

const char* gcq_stats_csv_header(void) {
  static const std::string header = gcq::stats_csv_header();
  return header.c_str();
}

size_t gcq_stats_csv_row(const char* name, const gcq_stats* s, char* buf, size_t cap) {
  if (!s) return 0;
  std::string row = gcq::stats_csv_row(name ? name : "", from_c(*s));
  if (buf && cap > 0) {
    size_t n = std::min(cap - 1, row.size());
    std::memcpy(buf, row.data(), n);
    buf[n] = '\0';
  }
  return row.size();
}

gcq_status gcq_max_clique(const gcq_graph* g, const gcq_search_options* opts, gcq_clique** out) {
  return guarded([&] {
    require(g && out, "gcq_max_clique: null argument");
    *out = new gcq_clique{gcq::max_clique_exact(g->g, to_options(opts))};
  });
}

gcq_status gcq_max_clique_heuristic(const gcq_graph* g, unsigned threads, gcq_clique** out) {
  return guarded([&] {
    require(g && out, "gcq_max_clique_heuristic: null argument");
    *out = new gcq_clique{gcq::max_clique_heuristic(g->g, std::max(1u, threads))};
  });
}

void gcq_clique_free(gcq_clique* c) { delete c; }

void gcq_clique_get_info(const gcq_clique* c, gcq_clique_info* out) {
  if (!out) return;
  *out = gcq_clique_info{};
  if (!c) return;
  const auto& r = c->r;
  out->size = r.size;
  out->witness_size = r.vertices.size();
  out->exact = r.exact;
  out->ub_reached = r.ub_reached;
  out->time_limited = r.time_limited;
  out->steps = r.steps;
  out->wall_time = r.wall_time;
  out->heuristic_time = r.heuristic_time;
  out->heuristic_size = r.heuristic_size;
}

const uint32_t* gcq_clique_vertices(const gcq_clique* c) { return c ? c->r.vertices.data() : nullptr; }

gcq_status gcq_verify_clique(const gcq_graph* g, const uint32_t* vertices, size_t count, int* out) {
  return guarded([&] {
    require(g && out && (vertices || count == 0), "gcq_verify_clique: null argument");
    *out = gcq::verify_clique(g->g, std::span<const uint32_t>(vertices, count)) ? 1 : 0;
  });
}

gcq_status gcq_ub_sweep(const gcq_graph* g, const uint32_t* ub_values, size_t count, unsigned threads,
                        double time_limit, gcq_sweep_row* rows_out) {
  return guarded([&] {
    require(g && ub_values && rows_out && count > 0, "gcq_ub_sweep: null argument or empty sweep");
    std::optional<double> limit;
    if (time_limit >= 0.0) limit = time_limit;
    auto rows = gcq::ub_sweep(g->g, std::span<const uint32_t>(ub_values, count), std::max(1u, threads), limit);
    for (size_t i = 0; i < rows.size(); ++i) {
      rows_out[i] = gcq_sweep_row{rows[i].ub, rows[i].wall_time, rows[i].size,
                                  rows[i].exact, rows[i].ub_reached, !rows[i].error.empty()};
    }
  });
}

gcq_status gcq_temporal_read(const char* path, int directed, gcq_temporal** out) {
  return guarded([&] {
    require(path && out, "gcq_temporal_read: null argument");
    *out = new gcq_temporal{gcq::read_temporal_edge_list(path, directed != 0)};
  });
}

gcq_status gcq_temporal_parse(const char* text, size_t len, int directed, gcq_temporal** out) {
  return guarded([&] {
    require((text || len == 0) && out, "gcq_temporal_parse: null argument");
    *out = new gcq_temporal{gcq::parse_temporal_edge_list(std::string_view(text ? text : "", len), directed != 0)};
  });
}

void gcq_temporal_free(gcq_temporal* t) { delete t; }
size_t gcq_temporal_num_vertices(const gcq_temporal* t) { return t ? t->t.num_vertices() : 0; }
size_t gcq_temporal_num_edges(const gcq_temporal* t) { return t ? t->t.edges.size() : 0; }

const char* gcq_temporal_label(const gcq_temporal* t, uint32_t v) {
  if (!t || v >= t->t.num_vertices()) return nullptr;
  return t->t.labels[v].c_str();
}

uint64_t gcq_temporal_reach_bytes(const gcq_temporal* t) {
  return t ? gcq::reach_memory_bytes(t->t.num_vertices()) : 0;
}

gcq_status gcq_temporal_reach(const gcq_temporal* t, gcq_reach** out) {
  return guarded([&] {
    require(t && out, "gcq_temporal_reach: null argument");
    *out = new gcq_reach{gcq::reach(t->t)};
  });
}

void gcq_reach_free(gcq_reach* r) { delete r; }

int gcq_reach_query(const gcq_reach* r, uint32_t from, uint32_t to) {
  return r && r->r.reaches(from, to) ? 1 : 0;
}

gcq_status gcq_temporal_strong_reachability(const gcq_temporal* t, gcq_graph** out) {
  return guarded([&] {
    require(t && out, "gcq_temporal_strong_reachability: null argument");
    *out = new gcq_graph{gcq::strong_reachability(gcq::reach(t->t), t->t.labels)};
  });
}

gcq_status gcq_max_tscc(const gcq_temporal* t, const gcq_search_options* opts, gcq_tscc** out) {
  return guarded([&] {
    require(t && out, "gcq_max_tscc: null argument");
    auto r = gcq::max_tscc(t->t, to_options(opts));
    auto* handle = new gcq_tscc;
    handle->clique.r = std::move(r.clique);
    handle->reach_graph.g = std::move(r.reach_graph);
    handle->reach_stats = r.reach_stats;
    handle->reach_time = r.reach_time;
    *out = handle;
  });
}

void gcq_tscc_free(gcq_tscc* r) { delete r; }
const gcq_clique* gcq_tscc_clique(const gcq_tscc* r) { return r ? &r->clique : nullptr; }
const gcq_graph* gcq_tscc_reach_graph(const gcq_tscc* r) { return r ? &r->reach_graph : nullptr; }

void gcq_tscc_reach_stats(const gcq_tscc* r, gcq_stats* out) {
  if (!out) return;
  if (!r) {
    *out = gcq_stats{};
    return;
  }
  to_c(r->reach_stats, out);
}

double gcq_tscc_reach_time(const gcq_tscc* r) { return r ? r->reach_time : 0.0; }

}  // extern "C"
