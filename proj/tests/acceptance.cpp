// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.
//
//   gcq_acceptance --group synthetic   criteria 1, 5, 7, 8, 9, 10, 11
//   gcq_acceptance --group chain       criterion 2
//   gcq_acceptance --group datasets    criteria 3, 4, 6 (public files under --data-dir)
//   gcq_acceptance --group all

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gcq/clique.hpp"
#include "gcq/graph.hpp"
#include "gcq/metrics.hpp"
#include "gcq/stats.hpp"
#include "gcq/temporal.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace gcq;

namespace {

// Pinned tolerances and budgets.
constexpr int kOracleGraphs = 240;            // C1: at least 200
constexpr double kOracleBudget = 60.0;        // C1 seconds
constexpr int kTemporalGraphs = 120;          // C5: at least 100
constexpr double kTemporalBudget = 30.0;      // C5 seconds
constexpr double kTable1Budget = 5.0;         // C3 seconds per dataset
constexpr double kDavgTolerance = 0.05;       // C4 yeast d_avg
constexpr double kCcTolerance = 0.01;         // C4 celegans mean cc
constexpr double kGammaTolerance = 0.005;     // C4 yeast gamma_K printed as 1.00
constexpr double kTsccBudget = 60.0;          // C6 seconds per dataset
constexpr double kHeuristicFlagRatio = 0.75;  // C9 reported, not asserted
constexpr double kFig5MaxRatio = 0.5;         // C11

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Instance {
  std::string name;
  Graph g;
  std::uint32_t omega;
};

// Random G(n <= 40, p) across densities 0.1 .. 0.9, solved by Bron-Kerbosch.
std::vector<Instance> oracle_instances(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    const std::size_t n = 2 + rng() % 39;
    const double p = 0.1 + 0.1 * (i % 9);
    auto edges = oracle::random_graph(n, p, rng);
    auto omega = static_cast<std::uint32_t>(oracle::clique_number(oracle::adjacency(n, edges)));
    out.push_back({"G(" + std::to_string(n) + "," + fmt("%.1f", p) + ")#" + std::to_string(i),
                   support::make_graph(n, edges), omega});
  }
  return out;
}

Outcome c1_oracle_equivalence() {
  auto start = Clock::now();
  auto instances = oracle_instances(kOracleGraphs, 1);
  int mismatches = 0;
  for (const auto& inst : instances) {
    auto r = max_clique_exact(inst.g);
    if (r.size != inst.omega || !r.exact || !verify_clique(inst.g, r.vertices)) ++mismatches;
  }
  double t = since(start);
  return {mismatches == 0 && t < kOracleBudget,
          std::to_string(instances.size()) + " graphs n<=40 p=0.1..0.9, " + std::to_string(mismatches) +
              " mismatches, " + fmt("%.2f", t) + " s (limit " + fmt("%.0f", kOracleBudget) + " s)"};
}

Outcome c2_bound_chain() {
  std::mt19937_64 rng(2);
  int graphs = 0, lower_violations = 0, upper_violations = 0;
  std::string example;
  auto check = [&](const std::string& name, const Graph& g, std::uint32_t omega) {
    ++graphs;
    auto b = clique_bounds(g);
    const std::uint32_t K = b.kcore_ub - 1, Delta = b.degree_ub - 1;
    if (!(omega - 1 <= K && K <= Delta)) ++upper_violations;
    if (!(b.lower_delta <= omega - 1)) {
      if (lower_violations++ == 0) {
        example = name + " has delta=" + std::to_string(b.lower_delta) + ", omega-1=" + std::to_string(omega - 1);
      }
    }
  };
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng() % 39;
    auto edges = oracle::random_connected_graph(n, 0.05 + 0.05 * (i % 18), rng);
    check("random connected G(" + std::to_string(n) + ")", support::make_graph(n, edges),
          static_cast<std::uint32_t>(oracle::clique_number(oracle::adjacency(n, edges))));
  }
  for (const auto& g : support::fixture_suite()) {
    auto lcc = largest_component(g);
    if (lcc.num_vertices() == 0) continue;
    check("fixture", lcc, max_clique_exact(lcc).size);
  }
  check("C4", support::make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 2);
  std::string detail = std::to_string(graphs) + " connected graphs; omega-1 <= K <= Delta violated " +
                       std::to_string(upper_violations) + "x; delta <= omega-1 violated " +
                       std::to_string(lower_violations) + "x";
  if (!example.empty()) detail += " (e.g. " + example + ")";
  return {upper_violations == 0 && lower_violations == 0, detail};
}

Outcome c5_temporal_oracle() {
  auto start = Clock::now();
  std::mt19937_64 rng(5);
  int graphs = 0, wrong = 0, dup_cases = 0;
  for (int i = 0; i < kTemporalGraphs; ++i) {
    const std::size_t n = 2 + rng() % 49;
    const std::size_t m = 1 + rng() % 200;
    const std::size_t times = i % 2 == 0 ? 4 : 1000000;
    auto contacts = oracle::random_contacts(n, m, times, rng);
    const bool directed = i % 3 != 0;
    auto expected = oracle::temporal_reach(n, contacts, directed);
    auto r = reach(support::make_temporal(n, contacts, directed));
    ++graphs;
    dup_cases += times == 4;
    for (VertexId s = 0; s < n; ++s)
      for (VertexId w = 0; w < n; ++w)
        if (s != w && r.reaches(s, w) != expected[s][w]) ++wrong;
  }
  // Constructed same-time chains: a->b and b->c at one instant never chain.
  for (double t : {0.0, 1.0, 7.5}) {
    std::vector<oracle::Contact> chain{{0, 1, t}, {1, 2, t}, {2, 3, t + 1}};
    auto r = reach(support::make_temporal(4, chain, true));
    auto expected = oracle::temporal_reach(4, chain, true);
    ++graphs;
    ++dup_cases;
    if (r.reaches(0, 2) || expected[0][2]) ++wrong;
    if (!r.reaches(1, 3) || !expected[1][3]) ++wrong;
  }
  double t = since(start);
  return {wrong == 0 && t < kTemporalBudget,
          std::to_string(graphs) + " temporal graphs n<=50 |E_T|<=200 (" + std::to_string(dup_cases) +
              " with repeated timestamps), " + std::to_string(wrong) + " membership mismatches, " +
              fmt("%.2f", t) + " s (limit " + fmt("%.0f", kTemporalBudget) + " s)"};
}

Outcome c7_ub_truncation() {
  auto instances = oracle_instances(60, 7);
  int runs = 0, wrong = 0;
  for (const auto& inst : instances) {
    for (std::uint32_t ub = 1; ub <= inst.omega + 2; ++ub) {
      SearchBounds b;
      b.ub = ub;
      auto r = max_clique_exact(inst.g, b);
      ++runs;
      const std::uint32_t want = std::min(ub, inst.omega);
      if (r.size != want || r.vertices.size() != want || !verify_clique(inst.g, r.vertices)) ++wrong;
    }
  }
  return {wrong == 0, std::to_string(runs) + " runs over ub = 1..omega+2 on " + std::to_string(instances.size()) +
                          " oracle-solved graphs, " + std::to_string(wrong) + " wrong sizes"};
}

Outcome c8_lb_soundness() {
  auto instances = oracle_instances(60, 8);
  int runs = 0, wrong = 0;
  for (const auto& inst : instances) {
    const std::uint32_t h = max_clique_heuristic(inst.g).size;
    for (std::uint32_t lb : {0u, h, inst.omega - 1, inst.omega, inst.omega + 3}) {
      for (bool warm : {true, false}) {
        SearchOptions o;
        o.bounds.lb = lb;
        o.warm_start = warm;
        auto r = max_clique_exact(inst.g, o);
        ++runs;
        bool ok = r.exact;
        if (lb < inst.omega) {
          ok = ok && r.size == inst.omega && verify_clique(inst.g, r.vertices) && r.vertices.size() == inst.omega;
        } else {
          ok = ok && r.size == lb && r.vertices.empty();
        }
        wrong += !ok;
      }
    }
  }
  return {wrong == 0, std::to_string(runs) + " runs, lb in {0, heuristic, omega-1, omega, omega+3}, " +
                          std::to_string(wrong) + " incorrect"};
}

// Sparse background with a large planted clique, at the size of ca-hepph
// (12008 vertices, 118521 edges, clique number 239).
Graph hepph_like() {
  std::mt19937_64 rng(9);
  const std::size_t n = 12008;
  const std::size_t k = 239;
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
  std::vector<Edge> edges;
  while (edges.size() < 118521 - k * (k - 1) / 2) edges.emplace_back(pick(rng), pick(rng));
  std::vector<std::uint32_t> ids(n);
  for (std::uint32_t i = 0; i < n; ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) edges.emplace_back(ids[i], ids[j]);
  return Graph::from_edges(n, edges);
}

Outcome c9_heuristic() {
  int instances = 0, bad = 0;
  auto check = [&](const Graph& g, std::uint32_t exact) {
    ++instances;
    auto h = max_clique_heuristic(g);
    if (!verify_clique(g, h.vertices) || h.size > exact || h.size != h.vertices.size()) ++bad;
  };
  for (const auto& inst : oracle_instances(100, 9)) check(inst.g, inst.omega);
  for (const auto& g : support::fixture_suite()) check(g, max_clique_exact(g).size);

  auto g = hepph_like();
  auto t0 = Clock::now();
  auto h = max_clique_heuristic(g);
  double th = since(t0);
  SearchOptions o;
  o.warm_start = false;
  auto e = max_clique_exact(g, o);
  ++instances;
  if (!verify_clique(g, h.vertices) || h.size > e.size) ++bad;
  const double ratio = static_cast<double>(h.size) / static_cast<double>(e.size);
  std::string detail = std::to_string(instances) + " instances, " + std::to_string(bad) +
                       " invalid or above exact; ca-hepph-scale fixture: heuristic " + std::to_string(h.size) +
                       " (" + fmt("%.3f", th) + " s) / exact " + std::to_string(e.size) + " (" +
                       fmt("%.3f", e.wall_time) + " s) = " + fmt("%.3f", ratio);
  if (ratio < kHeuristicFlagRatio) detail += " [flag: ratio below 0.75]";
  return {bad == 0, detail};
}

Outcome c10_thread_determinism() {
  int runs = 0, size_mismatch = 0, invalid = 0;
  std::vector<Graph> suite = support::fixture_suite();
  for (auto& inst : oracle_instances(40, 10)) suite.push_back(std::move(inst.g));
  for (const auto& g : suite) {
    std::optional<std::uint32_t> base;
    for (unsigned threads : {1u, 2u, 4u, 8u}) {
      SearchOptions o;
      o.threads = threads;
      o.sync_interval = 256;
      auto r = max_clique_exact(g, o);
      ++runs;
      if (!base) base = r.size;
      size_mismatch += r.size != *base;
      invalid += !verify_clique(g, r.vertices) || r.vertices.size() != r.size;
    }
  }
  return {size_mismatch == 0 && invalid == 0,
          std::to_string(suite.size()) + " graphs x threads {1,2,4,8}: " + std::to_string(size_mismatch) +
              " size mismatches, " + std::to_string(invalid) + " invalid witnesses"};
}

Outcome c11_fig5() {
  std::mt19937_64 rng(11);
  const std::size_t n = 200;
  auto g = support::make_graph(n, oracle::random_graph(n, 0.6, rng));
  const std::uint32_t omega = max_clique_exact(g).size;
  const auto ub90 = static_cast<std::uint32_t>(std::ceil(0.9 * omega));
  auto timed = [&](std::uint32_t ub) {
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      SearchBounds b;
      b.ub = ub;
      best = std::min(best, max_clique_exact(g, b).wall_time);
    }
    return best;
  };
  const double t_full = timed(omega);
  const double t_90 = timed(ub90);
  const double ratio = t_90 / t_full;
  return {ratio < kFig5MaxRatio, "dense G(200,0.6), omega=" + std::to_string(omega) + ": t(ub=" +
                                     std::to_string(ub90) + ")=" + fmt("%.4f", t_90) + " s, t(ub=omega)=" +
                                     fmt("%.4f", t_full) + " s, ratio " + fmt("%.3f", ratio) + " (limit " +
                                     fmt("%.2f", kFig5MaxRatio) + ")"};
}

// ---- datasets ---------------------------------------------------------------

std::optional<fs::path> find_dataset(const fs::path& dir, const std::vector<std::string>& stems) {
  for (const auto& stem : stems)
    for (const char* ext : {".txt", ".edges", ".mtx", ".csv", ".tsv", ""}) {
      fs::path p = dir / (stem + ext);
      if (fs::is_regular_file(p)) return p;
    }
  return std::nullopt;
}

struct StaticDataset {
  const char* name;
  std::vector<std::string> stems;
  bool directed;
  std::uint32_t omega;
};

const std::vector<StaticDataset>& table1() {
  static const std::vector<StaticDataset> sets{
      {"yeast", {"yeast", "bio-yeast"}, false, 6},
      {"celegans", {"celegans", "bio-celegans", "celegansneural"}, false, 9},
      {"polblogs", {"polblogs", "web-polblogs"}, true, 9},
      {"retweet-pol", {"retweet-pol", "rt-pol", "retweet_pol"}, false, 4},
      {"routers-rf", {"routers-rf", "tech-routers-rf"}, false, 16},
  };
  return sets;
}

std::optional<Graph> load_static(const fs::path& dir, const StaticDataset& d, std::string& why) {
  auto path = find_dataset(dir, d.stems);
  if (!path) {
    why = std::string(d.name) + ": no file under " + dir.string();
    return std::nullopt;
  }
  return largest_component(build_graph(read_edge_list(path->string(), EdgeListDialect::kAuto, d.directed), true));
}

Outcome c3_table1(const fs::path& dir) {
  Outcome o;
  std::vector<std::string> parts;
  for (const auto& d : table1()) {
    std::string why;
    auto g = load_static(dir, d, why);
    if (!g) {
      o.pass = false;
      parts.push_back(why);
      continue;
    }
    auto r = max_clique_exact(*g);
    auto b = clique_bounds(*g);
    bool chain = r.size - 1 <= b.kcore_ub - 1 && b.kcore_ub <= b.degree_ub;
    bool ok = r.size == d.omega && r.exact && r.wall_time < kTable1Budget && chain;
    o.pass = o.pass && ok;
    parts.push_back(std::string(d.name) + " omega=" + std::to_string(r.size) + " (want " +
                    std::to_string(d.omega) + ", " + fmt("%.3f", r.wall_time) + " s)");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) o.detail += (i ? "; " : "") + parts[i];
  return o;
}

Outcome c4_appendix(const fs::path& dir) {
  Outcome o;
  std::string why;
  auto yeast = load_static(dir, table1()[0], why);
  if (!yeast) {
    o.pass = false;
    o.detail = why;
  } else {
    auto s = stats(*yeast, true);
    bool ok = s.d_max == 56 && std::abs(s.d_avg - 2.7) <= kDavgTolerance && s.T == 18 && s.K == 5 && s.gamma_K &&
              std::abs(*s.gamma_K - 1.0) <= kGammaTolerance;
    o.pass = ok;
    o.detail = "yeast " + stats_csv_row("yeast", s);
  }
  auto celegans = load_static(dir, table1()[1], why);
  if (!celegans) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + why;
  } else {
    auto s = stats(*celegans, false);
    bool ok = s.K == 10 && s.T == 870 && std::abs(s.mean_cc - 0.65) <= kCcTolerance;
    o.pass = o.pass && ok;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("celegans ") + stats_csv_row("celegans", s);
  }
  return o;
}

Outcome c6_tscc(const fs::path& dir) {
  Outcome o;
  struct Want {
    const char* name;
    std::vector<std::string> stems;
    std::optional<std::size_t> n, edges_t, rs_edges;
    std::uint32_t size;
    std::optional<std::uint32_t> K;
  };
  const std::vector<Want> wants{
      {"infect-hyper", {"infect-hyper", "ia-infect-hyper"}, 113, 20818, 6222, 106, 105},
      {"infect-dublin", {"infect-dublin", "ia-infect-dublin"}, std::nullopt, std::nullopt, std::nullopt, 84,
       std::nullopt},
  };
  for (const auto& w : wants) {
    auto path = find_dataset(dir, w.stems);
    if (!o.detail.empty()) o.detail += "; ";
    if (!path) {
      o.pass = false;
      o.detail += std::string(w.name) + ": no file under " + dir.string();
      continue;
    }
    auto start = Clock::now();
    auto tg = read_temporal_edge_list(path->string(), false);
    auto res = max_tscc(tg);
    double t = since(start);
    bool ok = res.size == w.size && res.exact && t < kTsccBudget;
    if (w.n) ok = ok && tg.num_vertices() == *w.n && res.reach_stats.n == *w.n;
    if (w.edges_t) ok = ok && tg.edges.size() == *w.edges_t;
    if (w.rs_edges) ok = ok && res.reach_stats.m == *w.rs_edges;
    if (w.K) ok = ok && res.reach_stats.K == *w.K;
    o.pass = o.pass && ok;
    o.detail += std::string(w.name) + " n=" + std::to_string(tg.num_vertices()) +
                " |E_T|=" + std::to_string(tg.edges.size()) + " R_s |E|=" + std::to_string(res.reach_stats.m) +
                " K=" + std::to_string(res.reach_stats.K) + " tSCC=" + std::to_string(res.size) + " (" +
                fmt("%.2f", t) + " s)";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gcq acceptance criteria"};
  std::string group = "all";
  std::string data_dir;
  app.add_option("--group", group)->check(CLI::IsMember({"synthetic", "chain", "datasets", "all"}));
  app.add_option("--data-dir", data_dir, "Directory with the public datasets (or GCQ_DATA_DIR)");
  CLI11_PARSE(app, argc, argv);
  if (const char* env = std::getenv("GCQ_DATA_DIR"); env && *env) data_dir = env;
  if (data_dir.empty()) data_dir = "data";

  struct Criterion {
    const char* id;
    const char* group;
    const char* title;
    std::function<Outcome()> run;
  };
  const fs::path dir(data_dir);
  const std::vector<Criterion> criteria{
      {"C1", "synthetic", "oracle equivalence of the exact solver", c1_oracle_equivalence},
      {"C2", "chain", "bound chain delta <= omega-1 <= K <= Delta", c2_bound_chain},
      {"C3", "datasets", "Table 1 clique numbers", [&] { return c3_table1(dir); }},
      {"C4", "datasets", "Appendix statistics (yeast, celegans)", [&] { return c4_appendix(dir); }},
      {"C5", "synthetic", "temporal reach vs temporal BFS", c5_temporal_oracle},
      {"C6", "datasets", "largest tSCC (infect-hyper, infect-dublin)", [&] { return c6_tscc(dir); }},
      {"C7", "synthetic", "ub truncation", c7_ub_truncation},
      {"C8", "synthetic", "lb warm-start soundness", c8_lb_soundness},
      {"C9", "synthetic", "heuristic contract", c9_heuristic},
      {"C10", "synthetic", "size identical across thread counts", c10_thread_determinism},
      {"C11", "synthetic", "runtime at ub=ceil(0.9 omega) vs ub=omega", c11_fig5},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (group != "all" && group != c.group) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << ' ' << c.title << " | " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
