#include "gcq/stats.hpp"

#include <cmath>
#include <cstdio>

#include "gcq/metrics.hpp"

namespace gcq {

namespace {

GraphStats base_stats(const Graph& g, unsigned threads, CoreDecomposition& cores) {
  GraphStats s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  if (s.n == 0) return s;
  s.d_max = g.max_degree();
  s.d_avg = 2.0 * static_cast<double>(s.m) / static_cast<double>(s.n);
  auto tri = triangle_counts(g, threads);
  auto cc = clustering(g, tri);
  s.mean_cc = cc.mean;
  s.global_cc = cc.global;
  s.T = tri.max;
  s.T_avg = tri.average;
  s.sqrt_2T = static_cast<std::uint64_t>(std::floor(std::sqrt(2.0 * static_cast<double>(tri.max))));
  cores = core_decomposition(g);
  s.K = cores.degeneracy;
  return s;
}

void fill_clique(GraphStats& s, const Graph& g, const CliqueResult& clique, const CoreDecomposition& cores) {
  s.omega = clique.size;
  s.omega_is_lower_bound = !clique.exact;
  if (!clique.vertices.empty()) {
    s.gamma_K = kcore_recall(g, clique.vertices, cores);
  }
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

GraphStats stats(const Graph& g, bool with_clique, const SearchOptions& search) {
  CoreDecomposition cores;
  GraphStats s = base_stats(g, search.threads, cores);
  if (with_clique) fill_clique(s, g, max_clique_exact(g, search), cores);
  return s;
}

GraphStats stats(const Graph& g, const CliqueResult& clique, unsigned threads) {
  CoreDecomposition cores;
  GraphStats s = base_stats(g, threads, cores);
  fill_clique(s, g, clique, cores);
  return s;
}

std::string stats_csv_header() { return "graph,|V|,|E|,d_max,d_avg,cc_mean,T,T_avg,sqrt2T,K,omega,gamma_K"; }

std::string stats_csv_row(const std::string& name, const GraphStats& s) {
  std::string row = name;
  row += ',' + std::to_string(s.n);
  row += ',' + std::to_string(s.m);
  row += ',' + std::to_string(s.d_max);
  row += ',' + fixed(s.d_avg, 4);
  row += ',' + fixed(s.mean_cc, 4);
  row += ',' + std::to_string(s.T);
  row += ',' + fixed(s.T_avg, 4);
  row += ',' + std::to_string(s.sqrt_2T);
  row += ',' + std::to_string(s.K);
  row += ',' + (s.omega ? std::to_string(*s.omega) : std::string());
  row += ',' + (s.gamma_K ? fixed(*s.gamma_K, 4) : std::string());
  return row;
}

}  // namespace gcq
