#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "gcq/graph.hpp"

namespace gcq {

/// Search parameterization. MaxSoFar starts at `lb`; the search stops as soon
/// as a clique of `ub` vertices is found.
struct SearchBounds {
  std::uint32_t lb = 0;
  std::optional<std::uint32_t> ub;
  std::optional<double> time_limit;  // seconds of wall clock

  /// Throws std::invalid_argument unless lb <= ub and time_limit >= 0.
  void validate() const;
};

struct SearchOptions {
  SearchBounds bounds;
  unsigned threads = 1;
  /// Seed MaxSoFar with the heuristic clique before branching.
  bool warm_start = true;
  /// Worker steps between refreshes of the shared incumbent (power of two).
  std::uint64_t sync_interval = std::uint64_t{1} << 14;
};

struct CliqueResult {
  /// Witness, ascending. Empty when no clique larger than the caller's lb
  /// was found, in which case `size` reports lb.
  std::vector<VertexId> vertices;
  std::uint32_t size = 0;
  /// The search ran to completion or stopped at ub. False for heuristic
  /// results and for runs cut off by the time limit.
  bool exact = false;
  bool ub_reached = false;
  bool time_limited = false;
  std::uint64_t steps = 0;      // branch-and-bound tree nodes
  double wall_time = 0.0;       // seconds, whole call
  double heuristic_time = 0.0;  // seconds spent in the warm start
  std::uint32_t heuristic_size = 0;
};

/// Incumbent shared between workers: a monotone size with a witness that is
/// replaced atomically with it.
class SharedBest {
 public:
  /// `initial_size` may exceed initial.size() when seeded from a lower bound
  /// with no witness; otherwise initial.size() == initial_size.
  explicit SharedBest(std::uint32_t initial_size = 0, std::vector<VertexId> initial = {},
                      bool record_trace = false);

  std::uint32_t size() const noexcept { return size_.load(std::memory_order_acquire); }

  /// Publishes `clique` iff it is strictly larger than the current best.
  bool offer(std::span<const VertexId> clique);

  std::vector<VertexId> clique() const;
  /// Sizes in publication order, starting with the initial size (only when
  /// constructed with record_trace).
  std::vector<std::uint32_t> trace() const;

 private:
  std::atomic<std::uint32_t> size_;
  mutable std::mutex mutex_;
  std::vector<VertexId> clique_;
  bool record_trace_;
  std::vector<std::uint32_t> trace_;
};

/// Exact maximum clique by root-parallel branch and bound.
///
/// Roots are taken in reverse degeneracy order and each root only branches on
/// neighbors later in that order, so every clique is explored from exactly one
/// root. Pruning: a root is skipped when its degree (or its forward candidate
/// count) cannot beat MaxSoFar; a branch is cut when |clique| + |candidates| <=
/// MaxSoFar; candidates are always common neighbors of the clique; and within
/// a root neighborhood, vertices outside the (MaxSoFar - 1)-core are dropped.
CliqueResult max_clique_exact(const Graph& g, const SearchOptions& options);
CliqueResult max_clique_exact(const Graph& g, const SearchBounds& bounds = {}, unsigned threads = 1);

/// Greedy clique per start vertex, always extending with the common neighbor
/// of largest degree (ties to the lower id). O(n * Delta^2).
CliqueResult max_clique_heuristic(const Graph& g, unsigned threads = 1);

/// True iff every pair is adjacent. Repeated or out-of-range vertices fail.
bool verify_clique(const Graph& g, std::span<const VertexId> vertices);

}  // namespace gcq
