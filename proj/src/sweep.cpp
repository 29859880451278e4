#include "gcq/sweep.hpp"

#include <exception>
#include <stdexcept>

#include "gcq/clique.hpp"

namespace gcq {

std::vector<SweepRow> ub_sweep(const Graph& g, std::span<const std::uint32_t> ub_values, unsigned threads,
                               std::optional<double> time_limit) {
  std::vector<SweepRow> rows;
  rows.reserve(ub_values.size());
  for (std::uint32_t ub : ub_values) {
    SweepRow row;
    row.ub = ub;
    try {
      if (ub == 0) throw std::invalid_argument("ub must be at least 1");
      SearchBounds bounds;
      bounds.ub = ub;
      bounds.time_limit = time_limit;
      auto r = max_clique_exact(g, bounds, threads);
      row.wall_time = r.wall_time;
      row.size = r.size;
      row.exact = r.exact;
      row.ub_reached = r.ub_reached;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gcq
