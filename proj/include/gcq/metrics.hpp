#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcq/graph.hpp"

namespace gcq {

struct TriangleCounts {
  std::vector<std::uint64_t> per_vertex;  // t(v): edges among the neighbors of v
  std::uint64_t total = 0;                // each triangle once
  std::uint64_t max = 0;                  // T(G)
  double average = 0.0;                   // T_avg = sum t(v) / n
};

/// Exact counts by merge intersection over degree-oriented edges. `threads`
/// partitions the vertex range; partial counts are merged by summation.
TriangleCounts triangle_counts(const Graph& g, unsigned threads = 1);

struct Clustering {
  double mean = 0.0;    // average of t(v) / C(d(v), 2), with 0 for d(v) < 2
  double global = 0.0;  // 3 * triangles / wedges
};

Clustering clustering(const Graph& g);
Clustering clustering(const Graph& g, const TriangleCounts& tri);

struct CoreDecomposition {
  std::vector<std::uint32_t> core_number;
  std::uint32_t degeneracy = 0;
  /// Peeling order: order[0] was removed first. Vertices late in this order
  /// sit in the dense core.
  std::vector<VertexId> order;
  /// Vertices of the degeneracy-core, ascending.
  std::vector<VertexId> max_core_vertices;
};

/// Bucket-queue peeling, O(n + m).
CoreDecomposition core_decomposition(const Graph& g);

struct CliqueBounds {
  std::uint32_t lower_delta = 0;  // delta(G)
  std::uint32_t kcore_ub = 0;     // K(G) + 1
  std::uint32_t degree_ub = 0;    // Delta(G) + 1
  /// floor(sqrt(2 T(G))) when T > 0, else 2 (1 for an edgeless graph).
  /// Informational only: it can fall below omega (K5 gives 3).
  std::uint32_t triangle_ub = 0;
  std::uint32_t best_ub = 0;  // min(kcore_ub, degree_ub)
};

CliqueBounds clique_bounds(const Graph& g);
CliqueBounds clique_bounds(const Graph& g, const CoreDecomposition& cores, const TriangleCounts& tri);

/// |clique ∩ max-core| / |clique|. Throws std::invalid_argument when `clique`
/// is not a clique of g. An empty clique yields 0.
double kcore_recall(const Graph& g, std::span<const VertexId> clique);
double kcore_recall(const Graph& g, std::span<const VertexId> clique, const CoreDecomposition& cores);

}  // namespace gcq
