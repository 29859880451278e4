#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

#include "gcq/clique.hpp"

namespace gcq {

namespace {

struct Candidate {
  std::vector<VertexId> clique;
  std::size_t start_rank = 0;
};

class GreedyWorker {
 public:
  GreedyWorker(const Graph& g, const std::vector<VertexId>& order, std::atomic<std::size_t>& next,
               std::atomic<std::uint32_t>& global_best)
      : g_(g), order_(order), next_(next), global_best_(global_best) {}

  void run() {
    while (true) {
      std::size_t rank = next_.fetch_add(1, std::memory_order_relaxed);
      if (rank >= order_.size()) break;
      std::uint32_t bound = std::max(static_cast<std::uint32_t>(best_.clique.size()),
                                     global_best_.load(std::memory_order_relaxed));
      VertexId v = order_[rank];
      // Start vertices come in descending degree order: nothing later can win.
      if (g_.degree_unchecked(v) + 1 <= bound) break;
      grow(v, bound);
      if (clique_.size() > bound) {
        best_.clique = clique_;
        best_.start_rank = rank;
        std::uint32_t size = static_cast<std::uint32_t>(clique_.size());
        std::uint32_t seen = global_best_.load(std::memory_order_relaxed);
        while (seen < size && !global_best_.compare_exchange_weak(seen, size)) {
        }
      }
    }
  }

  const Candidate& best() const { return best_; }
  std::uint64_t steps() const { return steps_; }

 private:
  void grow(VertexId v, std::uint32_t bound) {
    clique_.assign(1, v);
    cand_.clear();
    for (VertexId w : g_.neighbors(v)) {
      if (g_.degree_unchecked(w) + 1 > bound) cand_.push_back(w);
    }
    while (!cand_.empty()) {
      if (clique_.size() + cand_.size() <= bound) {
        clique_.clear();
        return;
      }
      VertexId pick = cand_.front();
      for (VertexId w : cand_) {
        if (g_.degree_unchecked(w) > g_.degree_unchecked(pick)) pick = w;
      }
      clique_.push_back(pick);
      ++steps_;
      auto nbrs = g_.neighbors(pick);
      next_cand_.clear();
      std::set_intersection(cand_.begin(), cand_.end(), nbrs.begin(), nbrs.end(),
                            std::back_inserter(next_cand_));
      cand_.swap(next_cand_);
    }
  }

  const Graph& g_;
  const std::vector<VertexId>& order_;
  std::atomic<std::size_t>& next_;
  std::atomic<std::uint32_t>& global_best_;
  Candidate best_;
  std::vector<VertexId> clique_;
  std::vector<VertexId> cand_;
  std::vector<VertexId> next_cand_;
  std::uint64_t steps_ = 0;
};

}  // namespace

CliqueResult max_clique_heuristic(const Graph& g, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  CliqueResult result;
  const std::size_t n = g.num_vertices();
  if (n > 0) {
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      return g.degree_unchecked(a) > g.degree_unchecked(b);
    });
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint32_t> global_best{0};
    threads = std::max(1u, threads);
    std::vector<GreedyWorker> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(g, order, next, global_best);
    if (threads == 1) {
      workers[0].run();
    } else {
      std::vector<std::thread> pool;
      for (auto& w : workers) pool.emplace_back([&w] { w.run(); });
      for (auto& th : pool) th.join();
    }
    // Largest clique; ties go to the earliest start vertex.
    const Candidate* best = nullptr;
    for (const auto& w : workers) {
      result.steps += w.steps();
      const Candidate& c = w.best();
      if (c.clique.empty()) continue;
      if (!best || c.clique.size() > best->clique.size() ||
          (c.clique.size() == best->clique.size() && c.start_rank < best->start_rank)) {
        best = &c;
      }
    }
    if (best) result.vertices = best->clique;
    std::sort(result.vertices.begin(), result.vertices.end());
  }
  result.size = static_cast<std::uint32_t>(result.vertices.size());
  result.heuristic_size = result.size;
  result.exact = false;
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.heuristic_time = result.wall_time;
  return result;
}

}  // namespace gcq
