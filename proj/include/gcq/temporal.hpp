#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcq/clique.hpp"
#include "gcq/graph.hpp"
#include "gcq/stats.hpp"

namespace gcq {

struct TemporalEdge {
  VertexId source = 0;
  VertexId target = 0;
  double time = 0.0;
};

/// Timestamped contacts, self-loops removed, sorted ascending by time (stable
/// with respect to input order). An undirected graph's contact (u, v, t) can
/// be traversed both ways at time t; `edges` still stores it once.
struct TemporalGraph {
  std::vector<std::string> labels;
  std::vector<TemporalEdge> edges;
  bool directed = false;

  std::size_t num_vertices() const noexcept { return labels.size(); }
  /// Traversable arcs: `edges`, plus the reversal of each contact when undirected.
  std::vector<TemporalEdge> arcs() const;
};

/// Lines of "source target time" separated by whitespace or commas, '#'/'%'
/// comments. Extra columns are ignored. Timestamps are 64-bit reals.
TemporalGraph parse_temporal_edge_list(std::istream& in, bool directed = false);
TemporalGraph parse_temporal_edge_list(std::string_view text, bool directed = false);
TemporalGraph read_temporal_edge_list(const std::string& path, bool directed = false);

/// R(v) for every v as an n x n bit matrix; R(v) never contains v itself.
class ReachabilityGraph {
 public:
  ReachabilityGraph() = default;
  explicit ReachabilityGraph(std::size_t n);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }
  bool reaches(VertexId from, VertexId to) const noexcept;
  std::span<const std::uint64_t> row(VertexId v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::span<std::uint64_t> row(VertexId v) noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::vector<VertexId> reach_set(VertexId v) const;
  /// Number of ordered pairs (v, w), v != w, with w in R(v).
  std::uint64_t num_arcs() const noexcept;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Bytes the reach matrix of an n-vertex temporal graph occupies.
std::uint64_t reach_memory_bytes(std::size_t n);

/// Single reverse-time sweep. Paths need strictly increasing times: all arcs
/// sharing a timestamp are applied as one batch that reads only the reach sets
/// from before the batch.
ReachabilityGraph reach(const TemporalGraph& tg);

/// Undirected graph with {u, v} iff v in R(u) and u in R(v).
Graph strong_reachability(const ReachabilityGraph& r, std::vector<std::string> labels = {});

struct TsccResult {
  std::vector<VertexId> vertices;  // ascending, ids of the temporal graph
  std::uint32_t size = 0;
  bool exact = false;
  CliqueResult clique;
  GraphStats reach_stats;
  Graph reach_graph;
  double reach_time = 0.0;  // seconds for reach + reduction
};

/// Largest temporal strong component: the maximum clique of the strong
/// reachability graph. On a time-limited search the best clique found so far
/// (at least the heuristic warm start) is returned with exact = false.
TsccResult max_tscc(const TemporalGraph& tg, const SearchBounds& bounds = {}, unsigned threads = 1);
TsccResult max_tscc(const TemporalGraph& tg, const SearchOptions& options);

}  // namespace gcq
