#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gcq/clique.hpp"
#include "gcq/graph.hpp"

namespace gcq {

/// One row of network statistics.
struct GraphStats {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t d_max = 0;
  double d_avg = 0.0;      // 2m / n
  double mean_cc = 0.0;    // kappa-bar
  double global_cc = 0.0;  // transitivity
  std::uint64_t T = 0;     // max triangles on one vertex
  double T_avg = 0.0;
  std::uint64_t sqrt_2T = 0;  // floor(sqrt(2 T))
  std::uint32_t K = 0;        // degeneracy
  std::optional<std::uint32_t> omega;
  std::optional<double> gamma_K;
  /// Set when omega came from a truncated (non-exact) search.
  bool omega_is_lower_bound = false;
};

/// With `with_clique`, runs the exact solver under `search` and fills omega
/// and gamma_K.
GraphStats stats(const Graph& g, bool with_clique, const SearchOptions& search = {});

/// Fills omega and gamma_K from an already computed clique.
GraphStats stats(const Graph& g, const CliqueResult& clique, unsigned threads = 1);

/// "graph,|V|,|E|,d_max,d_avg,cc_mean,T,T_avg,sqrt2T,K,omega,gamma_K"
std::string stats_csv_header();
/// One CSV row; omega and gamma_K are empty fields when absent.
std::string stats_csv_row(const std::string& name, const GraphStats& s);

}  // namespace gcq
