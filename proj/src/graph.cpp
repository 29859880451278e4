#include "gcq/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "gcq/error.hpp"
#include "text.hpp"

namespace gcq {

namespace {

class LabelInterner {
 public:
  VertexId intern(std::string_view label) {
    auto [it, inserted] = index_.try_emplace(std::string(label), static_cast<VertexId>(labels_.size()));
    if (inserted) labels_.emplace_back(label);
    return it->second;
  }
  std::vector<std::string> release() { return std::move(labels_); }

 private:
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::string> labels_;
};

std::optional<long long> as_integer(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in, EdgeListDialect dialect, bool directed) {
  EdgeList out;
  out.directed = directed;
  LabelInterner interner;
  std::string line;
  std::vector<std::string_view> tokens;
  std::size_t line_no = 0;
  bool skip_size_line = dialect == EdgeListDialect::kMatrixMarket;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && dialect == EdgeListDialect::kAuto && line.starts_with("%%MatrixMarket")) {
      skip_size_line = true;
    }
    if (detail::is_comment_or_blank(line)) continue;
    if (skip_size_line) {
      skip_size_line = false;
      continue;
    }
    detail::split_tokens(line, tokens);
    if (tokens.size() < 2) {
      throw ParseError(line_no, "expected at least 2 tokens (source target), found " +
                                    std::to_string(tokens.size()));
    }
    // Third and later columns (weights, timestamps) are ignored.
    VertexId u = interner.intern(tokens[0]);
    VertexId v = interner.intern(tokens[1]);
    out.edges.emplace_back(u, v);
  }
  if (in.bad()) throw IoError("read error");
  out.labels = interner.release();
  return out;
}

EdgeList parse_edge_list(std::string_view text, EdgeListDialect dialect, bool directed) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, dialect, directed);
}

EdgeList read_edge_list(const std::string& path, EdgeListDialect dialect, bool directed) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_edge_list(in, dialect, directed);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  Graph g;
  std::vector<std::size_t> deg(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) continue;
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
  std::vector<VertexId> raw(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }
  // Sort and deduplicate each list, then compact.
  std::vector<std::size_t> offsets(n + 1, 0);
  std::size_t write = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    offsets[v] = write;
    for (auto it = first; it != last; ++it) raw[write++] = *it;
  }
  offsets[n] = write;
  raw.resize(write);
  raw.shrink_to_fit();
  g.offsets_ = std::move(offsets);
  g.adjacency_ = std::move(raw);
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  }
  g.labels_ = std::move(labels);
  return g;
}

std::size_t Graph::degree(VertexId v) const {
  if (v >= num_vertices()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n = " +
                            std::to_string(num_vertices()) + ")");
  }
  return degree_unchecked(v);
}

bool Graph::has_edge(VertexId u, VertexId v) const noexcept {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  if (degree_unchecked(u) > degree_unchecked(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < num_vertices(); ++v) best = std::max(best, degree_unchecked(static_cast<VertexId>(v)));
  return best;
}

std::size_t Graph::min_degree() const noexcept {
  if (num_vertices() == 0) return 0;
  std::size_t best = degree_unchecked(0);
  for (std::size_t v = 1; v < num_vertices(); ++v) best = std::min(best, degree_unchecked(static_cast<VertexId>(v)));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(const EdgeList& list, bool reciprocal_only) {
  const std::size_t n = list.labels.size();
  if (!(reciprocal_only && list.directed)) {
    return Graph::from_edges(n, list.edges, list.labels);
  }
  std::vector<Edge> arcs;
  arcs.reserve(list.edges.size());
  for (auto [u, v] : list.edges) {
    if (u != v) arcs.emplace_back(u, v);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  std::vector<Edge> kept;
  for (auto [u, v] : arcs) {
    if (u < v && std::binary_search(arcs.begin(), arcs.end(), Edge{v, u})) kept.emplace_back(u, v);
  }
  return Graph::from_edges(n, kept, list.labels);
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  constexpr VertexId kAbsent = ~VertexId{0};
  std::vector<VertexId> remap(g.num_vertices(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.num_vertices()) throw std::out_of_range("induced_subgraph: vertex out of range");
    remap[keep[i]] = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (VertexId u : keep) {
    labels.push_back(g.label(u));
    for (VertexId v : g.neighbors(u)) {
      if (u < v && remap[v] != kAbsent) edges.emplace_back(remap[u], remap[v]);
    }
  }
  return Graph::from_edges(keep.size(), edges, std::move(labels));
}

std::vector<VertexId> connected_components(const Graph& g, std::size_t* count) {
  const std::size_t n = g.num_vertices();
  constexpr VertexId kUnseen = ~VertexId{0};
  std::vector<VertexId> comp(n, kUnseen);
  std::vector<VertexId> stack;
  VertexId next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != kUnseen) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId v : g.neighbors(u)) {
        if (comp[v] == kUnseen) {
          comp[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

Graph largest_component(const Graph& g) {
  if (g.num_vertices() == 0) return g;
  std::size_t count = 0;
  auto comp = connected_components(g, &count);
  std::vector<std::size_t> size(count, 0);
  std::vector<VertexId> min_label_vertex(count, 0);
  std::vector<bool> seen(count, false);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto c = comp[v];
    ++size[c];
    if (!seen[c] || label_less(g.label(v), g.label(min_label_vertex[c]))) {
      min_label_vertex[c] = v;
      seen[c] = true;
    }
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < count; ++c) {
    if (size[c] > size[best] ||
        (size[c] == size[best] &&
         label_less(g.label(min_label_vertex[c]), g.label(min_label_vertex[best])))) {
      best = c;
    }
  }
  if (size[best] == g.num_vertices()) return g;
  std::vector<VertexId> members;
  members.reserve(size[best]);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (comp[v] == best) members.push_back(v);
  }
  return induced_subgraph(g, members);
}

std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }

bool label_less(std::string_view a, std::string_view b) {
  auto ia = as_integer(a);
  auto ib = as_integer(b);
  if (ia && ib) return *ia < *ib;
  if (ia != std::nullopt || ib != std::nullopt) return ia.has_value();
  return a < b;
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

}  // namespace gcq
