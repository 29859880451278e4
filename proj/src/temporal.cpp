#include "gcq/temporal.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "bitset.hpp"
#include "gcq/error.hpp"
#include "text.hpp"

namespace gcq {

namespace {

bool parse_time(std::string_view token, double& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size() && std::isfinite(out);
}

}  // namespace

std::vector<TemporalEdge> TemporalGraph::arcs() const {
  if (directed) return edges;
  std::vector<TemporalEdge> out;
  out.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    out.push_back(e);
    out.push_back({e.target, e.source, e.time});
  }
  return out;
}

TemporalGraph parse_temporal_edge_list(std::istream& in, bool directed) {
  TemporalGraph tg;
  tg.directed = directed;
  std::unordered_map<std::string, VertexId> index;
  auto intern = [&](std::string_view label) {
    auto [it, inserted] = index.try_emplace(std::string(label), static_cast<VertexId>(tg.labels.size()));
    if (inserted) tg.labels.emplace_back(label);
    return it->second;
  };
  std::string line;
  std::vector<std::string_view> tokens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_comment_or_blank(line)) continue;
    detail::split_tokens(line, tokens);
    if (tokens.size() < 3) {
      throw ParseError(line_no, "expected 3 tokens (source target time), found " + std::to_string(tokens.size()));
    }
    double t = 0.0;
    if (!parse_time(tokens[2], t)) {
      throw ParseError(line_no, "timestamp '" + std::string(tokens[2]) + "' is not a number");
    }
    if (t < 0.0) throw ParseError(line_no, "negative timestamp");
    VertexId u = intern(tokens[0]);
    VertexId v = intern(tokens[1]);
    if (u == v) continue;
    tg.edges.push_back({u, v, t});
  }
  if (in.bad()) throw IoError("read error");
  std::stable_sort(tg.edges.begin(), tg.edges.end(),
                   [](const TemporalEdge& a, const TemporalEdge& b) { return a.time < b.time; });
  return tg;
}

TemporalGraph parse_temporal_edge_list(std::string_view text, bool directed) {
  std::istringstream in{std::string(text)};
  return parse_temporal_edge_list(in, directed);
}

TemporalGraph read_temporal_edge_list(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_temporal_edge_list(in, directed);
}

ReachabilityGraph::ReachabilityGraph(std::size_t n)
    : n_(n), words_(detail::words_for(n)), bits_(n * detail::words_for(n), 0) {}

bool ReachabilityGraph::reaches(VertexId from, VertexId to) const noexcept {
  if (from >= n_ || to >= n_) return false;
  return detail::test_bit(bits_.data() + static_cast<std::size_t>(from) * words_, to);
}

std::vector<VertexId> ReachabilityGraph::reach_set(VertexId v) const {
  std::vector<VertexId> out;
  auto r = row(v);
  detail::for_each_bit(r.data(), words_, [&](std::size_t w) { out.push_back(static_cast<VertexId>(w)); });
  return out;
}

std::uint64_t ReachabilityGraph::num_arcs() const noexcept {
  return detail::popcount(bits_.data(), bits_.size());
}

std::uint64_t reach_memory_bytes(std::size_t n) {
  return static_cast<std::uint64_t>(n) * detail::words_for(n) * sizeof(detail::Word);
}

ReachabilityGraph reach(const TemporalGraph& tg) {
  const std::size_t n = tg.num_vertices();
  ReachabilityGraph r(n);
  const std::size_t words = r.words_per_row();
  for (VertexId v = 0; v < n; ++v) detail::set_bit(r.row(v).data(), v);

  std::vector<TemporalEdge> arcs = tg.arcs();
  std::stable_sort(arcs.begin(), arcs.end(),
                   [](const TemporalEdge& a, const TemporalEdge& b) { return a.time < b.time; });

  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> slot(n, kNone);
  std::vector<VertexId> batch_sources;
  std::vector<detail::Word> pending;

  std::size_t hi = arcs.size();
  while (hi > 0) {
    std::size_t lo = hi - 1;
    while (lo > 0 && arcs[lo - 1].time == arcs[hi - 1].time) --lo;
    if (hi - lo == 1) {
      const auto& e = arcs[lo];
      auto dst = r.row(e.source);
      auto src = r.row(e.target);
      for (std::size_t w = 0; w < words; ++w) dst[w] |= src[w];
    } else {
      // Same timestamp: accumulate into copies so that no arc sees another
      // arc's update from this batch.
      batch_sources.clear();
      for (std::size_t i = lo; i < hi; ++i) {
        VertexId s = arcs[i].source;
        if (slot[s] == kNone) {
          slot[s] = static_cast<std::uint32_t>(batch_sources.size());
          batch_sources.push_back(s);
        }
      }
      pending.assign(batch_sources.size() * words, 0);
      for (std::size_t i = lo; i < hi; ++i) {
        detail::Word* acc = pending.data() + static_cast<std::size_t>(slot[arcs[i].source]) * words;
        auto src = r.row(arcs[i].target);
        for (std::size_t w = 0; w < words; ++w) acc[w] |= src[w];
      }
      for (std::size_t k = 0; k < batch_sources.size(); ++k) {
        VertexId s = batch_sources[k];
        auto dst = r.row(s);
        const detail::Word* acc = pending.data() + k * words;
        for (std::size_t w = 0; w < words; ++w) dst[w] |= acc[w];
        slot[s] = kNone;
      }
    }
    hi = lo;
  }
  for (VertexId v = 0; v < n; ++v) detail::clear_bit(r.row(v).data(), v);
  return r;
}

Graph strong_reachability(const ReachabilityGraph& r, std::vector<std::string> labels) {
  const std::size_t n = r.num_vertices();
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    auto row = r.row(u);
    detail::for_each_bit(row.data(), row.size(), [&](std::size_t w) {
      if (w > u && r.reaches(static_cast<VertexId>(w), u)) edges.emplace_back(u, static_cast<VertexId>(w));
    });
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

TsccResult max_tscc(const TemporalGraph& tg, const SearchBounds& bounds, unsigned threads) {
  SearchOptions options;
  options.bounds = bounds;
  options.threads = threads;
  return max_tscc(tg, options);
}

TsccResult max_tscc(const TemporalGraph& tg, const SearchOptions& options) {
  options.bounds.validate();
  TsccResult out;
  const auto start = std::chrono::steady_clock::now();
  out.reach_graph = strong_reachability(reach(tg), tg.labels);
  out.reach_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  out.clique = max_clique_exact(out.reach_graph, options);
  if (out.clique.time_limited && !options.warm_start) {
    auto h = max_clique_heuristic(out.reach_graph, options.threads);
    if (h.size > out.clique.size || (h.size == out.clique.size && out.clique.vertices.empty())) {
      out.clique.vertices = std::move(h.vertices);
      out.clique.size = h.size;
      out.clique.heuristic_size = h.size;
      out.clique.heuristic_time = h.wall_time;
    }
  }
  out.vertices = out.clique.vertices;
  out.size = out.clique.size;
  out.exact = out.clique.exact;
  out.reach_stats = stats(out.reach_graph, out.clique, options.threads);
  return out;
}

}  // namespace gcq
