#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gcq/graph.hpp"
#include "gcq/temporal.hpp"
#include "oracles.hpp"

namespace support {

inline gcq::Graph make_graph(std::size_t n, const oracle::Edges& edges) {
  std::vector<gcq::Edge> e(edges.begin(), edges.end());
  return gcq::Graph::from_edges(n, e);
}

inline gcq::Graph complete(std::size_t n) {
  oracle::Edges e;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make_graph(n, e);
}

inline gcq::Graph star(std::size_t leaves) {
  oracle::Edges e;
  for (std::uint32_t v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return make_graph(leaves + 1, e);
}

inline gcq::Graph path(std::size_t n) {
  oracle::Edges e;
  for (std::uint32_t v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return make_graph(n, e);
}

// Temporal graph whose vertex ids equal the oracle's ids.
inline gcq::TemporalGraph make_temporal(std::size_t n, const std::vector<oracle::Contact>& contacts, bool directed) {
  gcq::TemporalGraph tg;
  tg.directed = directed;
  for (std::size_t v = 0; v < n; ++v) tg.labels.push_back(std::to_string(v));
  for (const auto& c : contacts)
    if (c.u != c.v) tg.edges.push_back({c.u, c.v, c.t});
  std::stable_sort(tg.edges.begin(), tg.edges.end(),
                   [](const gcq::TemporalEdge& a, const gcq::TemporalEdge& b) { return a.time < b.time; });
  return tg;
}

// Fixed mixed suite used by the determinism and soundness checks.
inline std::vector<gcq::Graph> fixture_suite() {
  std::vector<gcq::Graph> out;
  for (std::size_t n : {1, 2, 5, 8}) out.push_back(complete(n));
  out.push_back(star(7));
  out.push_back(path(9));
  out.push_back(make_graph(6, {}));
  std::mt19937_64 rng(20240611);
  for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) out.push_back(make_graph(40, oracle::random_graph(40, p, rng)));
  out.push_back(make_graph(120, oracle::planted_clique(120, 0.15, 14, rng)));
  return out;
}

}  // namespace support
