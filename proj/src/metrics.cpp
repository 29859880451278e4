#include "gcq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "gcq/clique.hpp"

namespace gcq {

namespace {

// Forward adjacency under the (degree, id) total order, each list id-sorted.
struct Oriented {
  std::vector<std::size_t> offsets;
  std::vector<VertexId> targets;
};

Oriented orient(const Graph& g) {
  const std::size_t n = g.num_vertices();
  auto before = [&](VertexId a, VertexId b) {
    auto da = g.degree_unchecked(a), db = g.degree_unchecked(b);
    return da < db || (da == db && a < b);
  };
  Oriented o;
  o.offsets.assign(n + 1, 0);
  o.targets.reserve(g.num_edges());
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (before(u, v)) o.targets.push_back(v);
    }
    o.offsets[u + 1] = o.targets.size();
  }
  return o;
}

void count_range(const Oriented& o, std::size_t begin, std::size_t end, std::size_t stride,
                 std::vector<std::uint64_t>& t) {
  for (std::size_t u = begin; u < end; u += stride) {
    const VertexId* ub = o.targets.data() + o.offsets[u];
    const VertexId* ue = o.targets.data() + o.offsets[u + 1];
    for (const VertexId* pv = ub; pv != ue; ++pv) {
      VertexId v = *pv;
      const VertexId* a = ub;
      const VertexId* b = o.targets.data() + o.offsets[v];
      const VertexId* be = o.targets.data() + o.offsets[v + 1];
      while (a != ue && b != be) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++t[u];
          ++t[v];
          ++t[*a];
          ++a;
          ++b;
        }
      }
    }
  }
}

}  // namespace

TriangleCounts triangle_counts(const Graph& g, unsigned threads) {
  const std::size_t n = g.num_vertices();
  TriangleCounts out;
  out.per_vertex.assign(n, 0);
  if (n == 0) return out;
  Oriented o = orient(g);
  threads = std::max(1u, threads);
  if (threads == 1) {
    count_range(o, 0, n, 1, out.per_vertex);
  } else {
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(n, 0));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] { count_range(o, t, n, threads, partial[t]); });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : partial) {
      for (std::size_t v = 0; v < n; ++v) out.per_vertex[v] += p[v];
    }
  }
  std::uint64_t sum = 0;
  for (auto t : out.per_vertex) {
    sum += t;
    out.max = std::max(out.max, t);
  }
  out.total = sum / 3;
  out.average = static_cast<double>(sum) / static_cast<double>(n);
  return out;
}

Clustering clustering(const Graph& g) { return clustering(g, triangle_counts(g)); }

Clustering clustering(const Graph& g, const TriangleCounts& tri) {
  Clustering c;
  const std::size_t n = g.num_vertices();
  if (n == 0) return c;
  double sum = 0.0;
  double wedges = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    double d = static_cast<double>(g.degree_unchecked(v));
    double pairs = d * (d - 1.0) / 2.0;
    wedges += pairs;
    if (pairs > 0.0) sum += static_cast<double>(tri.per_vertex[v]) / pairs;
  }
  c.mean = sum / static_cast<double>(n);
  c.global = wedges > 0.0 ? 3.0 * static_cast<double>(tri.total) / wedges : 0.0;
  return c;
}

CoreDecomposition core_decomposition(const Graph& g) {
  const std::size_t n = g.num_vertices();
  CoreDecomposition out;
  out.core_number.assign(n, 0);
  if (n == 0) return out;

  std::vector<std::uint32_t> deg(n);
  std::uint32_t max_deg = 0;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree_unchecked(v));
    max_deg = std::max(max_deg, deg[v]);
  }
  // vert: vertices sorted by current degree; pos: index into vert;
  // bin[d]: first index of degree d.
  std::vector<std::size_t> bin(max_deg + 2, 0);
  for (auto d : deg) ++bin[d + 1];
  for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];
  std::vector<VertexId> vert(n);
  std::vector<std::size_t> pos(n);
  {
    std::vector<std::size_t> next(bin.begin(), bin.end() - 1);
    for (VertexId v = 0; v < n; ++v) {
      pos[v] = next[deg[v]]++;
      vert[pos[v]] = v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    VertexId v = vert[i];
    for (VertexId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        // Move u to the front of its bin, then shrink the bin by one.
        std::uint32_t du = deg[u];
        std::size_t pu = pos[u];
        std::size_t pw = bin[du];
        VertexId w = vert[pw];
        if (u != w) {
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
          pos[u] = pw;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  out.core_number = std::move(deg);
  out.order = std::move(vert);
  out.degeneracy = *std::max_element(out.core_number.begin(), out.core_number.end());
  for (VertexId v = 0; v < n; ++v) {
    if (out.core_number[v] == out.degeneracy) out.max_core_vertices.push_back(v);
  }
  return out;
}

CliqueBounds clique_bounds(const Graph& g) {
  return clique_bounds(g, core_decomposition(g), triangle_counts(g));
}

CliqueBounds clique_bounds(const Graph& g, const CoreDecomposition& cores, const TriangleCounts& tri) {
  CliqueBounds b;
  if (g.num_vertices() == 0) return b;
  b.lower_delta = static_cast<std::uint32_t>(g.min_degree());
  b.kcore_ub = cores.degeneracy + 1;
  b.degree_ub = static_cast<std::uint32_t>(g.max_degree()) + 1;
  if (tri.max > 0) {
    b.triangle_ub = static_cast<std::uint32_t>(std::floor(std::sqrt(2.0 * static_cast<double>(tri.max))));
  } else {
    b.triangle_ub = g.num_edges() > 0 ? 2 : 1;
  }
  b.best_ub = std::min(b.kcore_ub, b.degree_ub);
  return b;
}

double kcore_recall(const Graph& g, std::span<const VertexId> clique) {
  return kcore_recall(g, clique, core_decomposition(g));
}

double kcore_recall(const Graph& g, std::span<const VertexId> clique, const CoreDecomposition& cores) {
  if (!verify_clique(g, clique)) throw std::invalid_argument("kcore_recall: vertex set is not a clique");
  if (clique.empty()) return 0.0;
  std::size_t inside = 0;
  for (VertexId v : clique) {
    if (cores.core_number[v] == cores.degeneracy) ++inside;
  }
  return static_cast<double>(inside) / static_cast<double>(clique.size());
}

}  // namespace gcq
