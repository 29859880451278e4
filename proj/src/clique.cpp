#include "gcq/clique.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "bitset.hpp"
#include "gcq/metrics.hpp"

namespace gcq {

namespace {

using Clock = std::chrono::steady_clock;
using detail::Word;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr std::uint64_t kDeadlineCheckMask = 1023;

struct SearchContext {
  const Graph& graph;
  std::vector<std::uint32_t> position;  // index in the peeling order
  std::vector<VertexId> roots;          // reverse peeling order
  std::uint32_t ceiling = 0;            // K(G) + 1, no clique is larger
  std::optional<std::uint32_t> ub;
  std::optional<Clock::time_point> deadline;
  std::uint64_t sync_mask = 0;
  SharedBest& best;

  std::atomic<std::size_t> next_root{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
  std::atomic<std::uint64_t> steps{0};

  SearchContext(const Graph& g, SharedBest& shared) : graph(g), best(shared) {}
};

class Worker {
 public:
  explicit Worker(SearchContext& ctx)
      : ctx_(ctx), local_index_(ctx.graph.num_vertices(), kNone) {}

  void run() {
    const std::size_t root_count = ctx_.roots.size();
    while (!ctx_.stop.load(std::memory_order_relaxed)) {
      std::size_t i = ctx_.next_root.fetch_add(1, std::memory_order_relaxed);
      if (i >= root_count) break;
      refresh();
      if (deadline_passed()) break;
      if (ctx_.stop.load(std::memory_order_relaxed)) break;
      search_root(ctx_.roots[i]);
      publish();
    }
    publish();
    ctx_.steps.fetch_add(steps_, std::memory_order_relaxed);
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  void refresh() {
    best_ = std::max(best_, ctx_.best.size());
    if (best_ >= ctx_.ceiling) ctx_.stop.store(true, std::memory_order_relaxed);
  }

  void publish() {
    if (!clique_.empty() && clique_.size() > ctx_.best.size()) ctx_.best.offer(clique_);
  }

  bool deadline_passed() {
    if (ctx_.deadline && Clock::now() >= *ctx_.deadline) {
      ctx_.timed_out.store(true, std::memory_order_relaxed);
      ctx_.stop.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  void search_root(VertexId root) {
    const Graph& g = ctx_.graph;
    if (g.degree_unchecked(root) < best_) return;

    candidates_.clear();
    const std::uint32_t root_pos = ctx_.position[root];
    for (VertexId w : g.neighbors(root)) {
      if (ctx_.position[w] > root_pos) candidates_.push_back(w);
    }
    if (candidates_.size() + 1 <= best_) return;

    const std::size_t k = candidates_.size();
    const std::size_t kw = detail::words_for(k);
    for (std::size_t i = 0; i < k; ++i) local_index_[candidates_[i]] = static_cast<std::uint32_t>(i);

    // Neighborhood adjacency over the forward candidates.
    scratch_rows_.assign(k * kw, 0);
    local_degree_.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      Word* row = scratch_rows_.data() + i * kw;
      for (VertexId u : g.neighbors(candidates_[i])) {
        std::uint32_t j = local_index_[u];
        if (j != kNone) {
          detail::set_bit(row, j);
          ++local_degree_[i];
        }
      }
    }
    for (VertexId w : candidates_) local_index_[w] = kNone;

    // A vertex in a clique of size best_ + 1 through the root has at least
    // best_ - 1 neighbors inside the root's neighborhood.
    const std::uint32_t need = best_ > 0 ? best_ - 1 : 0;
    alive_.assign(k, 1);
    queue_.clear();
    for (std::size_t i = 0; i < k; ++i) {
      if (local_degree_[i] < need) {
        alive_[i] = 0;
        queue_.push_back(static_cast<std::uint32_t>(i));
      }
    }
    while (!queue_.empty()) {
      std::uint32_t i = queue_.back();
      queue_.pop_back();
      detail::for_each_bit(scratch_rows_.data() + i * kw, kw, [&](std::size_t j) {
        if (alive_[j] && --local_degree_[j] < need) {
          alive_[j] = 0;
          queue_.push_back(static_cast<std::uint32_t>(j));
        }
      });
    }
    order_.clear();
    for (std::size_t i = 0; i < k; ++i) {
      if (alive_[i]) order_.push_back(static_cast<std::uint32_t>(i));
    }
    if (order_.size() + 1 <= best_) return;

    // Reindex survivors by descending neighborhood degree, ties to lower id.
    // Candidates are id-sorted, so local index order is id order.
    std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
      return local_degree_[a] > local_degree_[b];
    });
    const std::size_t s = order_.size();
    words_ = detail::words_for(s);
    remap_.assign(k, kNone);
    vertex_of_.resize(s);
    for (std::size_t i = 0; i < s; ++i) {
      remap_[order_[i]] = static_cast<std::uint32_t>(i);
      vertex_of_[i] = candidates_[order_[i]];
    }
    rows_.assign(s * words_, 0);
    for (std::size_t i = 0; i < s; ++i) {
      Word* row = rows_.data() + i * words_;
      detail::for_each_bit(scratch_rows_.data() + order_[i] * kw, kw, [&](std::size_t j) {
        if (remap_[j] != kNone) detail::set_bit(row, remap_[j]);
      });
    }

    levels_.assign((s + 2) * words_, 0);
    Word* top = levels_.data();
    for (std::size_t i = 0; i < s; ++i) detail::set_bit(top, i);
    stack_.assign(1, root);
    expand(top);
  }

  // `candidates` holds common neighbors of every vertex on stack_.
  void expand(Word* candidates) {
    ++steps_;
    if ((steps_ & ctx_.sync_mask) == 0) refresh();
    if ((steps_ & kDeadlineCheckMask) == 0) deadline_passed();
    if (ctx_.stop.load(std::memory_order_relaxed)) return;

    const std::uint32_t depth = static_cast<std::uint32_t>(stack_.size());
    if (depth > best_) {
      best_ = depth;
      clique_ = stack_;
      if ((ctx_.ub && depth >= *ctx_.ub) || depth >= ctx_.ceiling) {
        publish();
        ctx_.stop.store(true, std::memory_order_relaxed);
        return;
      }
    }

    std::size_t remaining = detail::popcount(candidates, words_);
    if (depth + remaining <= best_) return;
    Word* next = candidates + words_;
    for (std::size_t w = 0; w < words_; ++w) {
      while (candidates[w]) {
        std::size_t i = w * detail::kWordBits + static_cast<std::size_t>(std::countr_zero(candidates[w]));
        candidates[w] &= candidates[w] - 1;
        --remaining;
        const Word* adj = rows_.data() + i * words_;
        for (std::size_t x = 0; x < words_; ++x) next[x] = candidates[x] & adj[x];
        stack_.push_back(vertex_of_[i]);
        expand(next);
        stack_.pop_back();
        if (ctx_.stop.load(std::memory_order_relaxed)) return;
        if (depth + remaining <= best_) return;
      }
    }
  }

  SearchContext& ctx_;
  std::uint32_t best_ = 0;
  std::vector<VertexId> clique_;
  std::uint64_t steps_ = 0;

  std::vector<std::uint32_t> local_index_;
  std::vector<VertexId> candidates_;
  std::vector<Word> scratch_rows_;
  std::vector<std::uint32_t> local_degree_;
  std::vector<char> alive_;
  std::vector<std::uint32_t> queue_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> remap_;
  std::vector<VertexId> vertex_of_;
  std::vector<Word> rows_;
  std::vector<Word> levels_;
  std::vector<VertexId> stack_;
  std::size_t words_ = 0;
};

}  // namespace

void SearchBounds::validate() const {
  if (ub && lb > *ub) {
    throw std::invalid_argument("lower bound " + std::to_string(lb) + " exceeds upper bound " +
                                std::to_string(*ub));
  }
  if (time_limit && !(*time_limit >= 0.0)) throw std::invalid_argument("time limit must be non-negative");
}

SharedBest::SharedBest(std::uint32_t initial_size, std::vector<VertexId> initial, bool record_trace)
    : size_(initial_size), clique_(std::move(initial)), record_trace_(record_trace) {
  if (!clique_.empty() && clique_.size() != initial_size) {
    throw std::invalid_argument("SharedBest: witness size does not match initial size");
  }
  if (record_trace_) trace_.push_back(initial_size);
}

bool SharedBest::offer(std::span<const VertexId> clique) {
  if (clique.size() <= size_.load(std::memory_order_acquire)) return false;
  std::lock_guard lock(mutex_);
  if (clique.size() <= size_.load(std::memory_order_relaxed)) return false;
  clique_.assign(clique.begin(), clique.end());
  size_.store(static_cast<std::uint32_t>(clique.size()), std::memory_order_release);
  if (record_trace_) trace_.push_back(static_cast<std::uint32_t>(clique.size()));
  return true;
}

std::vector<VertexId> SharedBest::clique() const {
  std::lock_guard lock(mutex_);
  return clique_;
}

std::vector<std::uint32_t> SharedBest::trace() const {
  std::lock_guard lock(mutex_);
  return trace_;
}

CliqueResult max_clique_exact(const Graph& g, const SearchBounds& bounds, unsigned threads) {
  SearchOptions options;
  options.bounds = bounds;
  options.threads = threads;
  return max_clique_exact(g, options);
}

CliqueResult max_clique_exact(const Graph& g, const SearchOptions& options) {
  const auto start = Clock::now();
  const SearchBounds& bounds = options.bounds;
  bounds.validate();
  if (options.sync_interval == 0 || !std::has_single_bit(options.sync_interval)) {
    throw std::invalid_argument("sync_interval must be a power of two");
  }

  CliqueResult result;
  result.size = bounds.lb;
  result.exact = true;
  if (bounds.ub && *bounds.ub == 0) {
    result.ub_reached = true;
    result.wall_time = seconds_since(start);
    return result;
  }
  if (g.num_vertices() == 0) {
    result.wall_time = seconds_since(start);
    return result;
  }

  std::uint32_t seed_size = bounds.lb;
  std::vector<VertexId> seed;
  if (options.warm_start) {
    auto heuristic = max_clique_heuristic(g, options.threads);
    result.heuristic_size = heuristic.size;
    result.heuristic_time = heuristic.wall_time;
    if (bounds.ub && heuristic.size >= *bounds.ub) {
      // Any ub vertices of a clique form a clique.
      heuristic.vertices.resize(*bounds.ub);
      result.vertices = std::move(heuristic.vertices);
      result.size = *bounds.ub;
      result.ub_reached = true;
      result.wall_time = seconds_since(start);
      return result;
    }
    if (heuristic.size > seed_size) {
      seed_size = heuristic.size;
      seed = std::move(heuristic.vertices);
    }
  }

  SharedBest shared(seed_size, seed);
  SearchContext ctx(g, shared);
  CoreDecomposition cores = core_decomposition(g);
  ctx.ceiling = cores.degeneracy + 1;
  ctx.ub = bounds.ub;
  ctx.sync_mask = options.sync_interval - 1;
  if (bounds.time_limit) {
    ctx.deadline = start + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(*bounds.time_limit));
  }

  if (seed_size < ctx.ceiling) {
    const std::size_t n = g.num_vertices();
    ctx.position.resize(n);
    for (std::size_t i = 0; i < n; ++i) ctx.position[cores.order[i]] = static_cast<std::uint32_t>(i);
    ctx.roots.assign(cores.order.rbegin(), cores.order.rend());

    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
      Worker(ctx).run();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&ctx] { Worker(ctx).run(); });
      }
      for (auto& th : pool) th.join();
    }
  }

  result.size = shared.size();
  result.vertices = shared.clique();
  std::sort(result.vertices.begin(), result.vertices.end());
  result.steps = ctx.steps.load();
  result.time_limited = ctx.timed_out.load();
  result.exact = !result.time_limited;
  result.ub_reached = bounds.ub && result.vertices.size() == *bounds.ub;
  result.wall_time = seconds_since(start);
  return result;
}

bool verify_clique(const Graph& g, std::span<const VertexId> vertices) {
  const std::size_t n = g.num_vertices();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= n) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

}  // namespace gcq
