#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcq/graph.hpp"

namespace gcq {

struct SweepRow {
  std::uint32_t ub = 0;
  double wall_time = 0.0;
  std::uint32_t size = 0;
  bool exact = false;
  bool ub_reached = false;
  std::string error;  // empty on success
};

/// One exact search per upper bound. A failing run is recorded in its row and
/// the sweep continues.
std::vector<SweepRow> ub_sweep(const Graph& g, std::span<const std::uint32_t> ub_values, unsigned threads = 1,
                               std::optional<double> time_limit = std::nullopt);

}  // namespace gcq
