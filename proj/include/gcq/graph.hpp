#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcq {

/// Dense vertex index in [0, n).
using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

enum class EdgeListDialect {
  kAuto,          // MatrixMarket if the first line is a %%MatrixMarket banner
  kPlain,         // every non-comment line is an edge
  kMatrixMarket,  // first non-comment line is the size line and is skipped
};

/// Edges exactly as read: input order and multiplicity preserved. Labels are
/// interned in order of first appearance; edge endpoints index into `labels`.
struct EdgeList {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  bool directed = false;
};

EdgeList parse_edge_list(std::istream& in, EdgeListDialect dialect = EdgeListDialect::kAuto,
                         bool directed = false);
EdgeList parse_edge_list(std::string_view text, EdgeListDialect dialect = EdgeListDialect::kAuto,
                         bool directed = false);
EdgeList read_edge_list(const std::string& path, EdgeListDialect dialect = EdgeListDialect::kAuto,
                        bool directed = false);

/// Undirected simple graph in compressed sparse adjacency form.
///
/// Neighbor lists are strictly ascending, symmetric and loop-free. The graph is
/// immutable once built and may be read concurrently from any number of threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices from arbitrary vertex pairs: self-loops are
  /// dropped, duplicates collapsed, and every pair symmetrized. When `labels`
  /// is empty, vertex v is labelled with its decimal index.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree_unchecked(VertexId v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  /// Throws std::out_of_range when v >= n.
  std::size_t degree(VertexId v) const;

  bool has_edge(VertexId u, VertexId v) const noexcept;

  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Every undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<std::string> labels_;
};

/// Turns parsed edges into a Graph over every interned label. With
/// `reciprocal_only` on a directed edge list, {u, v} is kept only when both
/// (u, v) and (v, u) were read; otherwise all pairs are symmetrized.
Graph build_graph(const EdgeList& edges, bool reciprocal_only = false);

/// Subgraph induced by `vertices` (any order, no duplicates). New ids follow
/// ascending old id; labels are carried over.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

/// Induced subgraph on the largest connected component. Equal-size components
/// are ordered by their smallest original label (see label_less).
Graph largest_component(const Graph& g);

/// Component id per vertex, numbered in order of smallest member id.
std::vector<VertexId> connected_components(const Graph& g, std::size_t* count = nullptr);

std::size_t degree(const Graph& g, VertexId v);

/// Label order: numeric when both labels are integers, lexicographic otherwise,
/// and integers before non-integers.
bool label_less(std::string_view a, std::string_view b);

/// Writes "label label" per undirected edge, u < v.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace gcq
