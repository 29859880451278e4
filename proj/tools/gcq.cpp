// gcq command-line driver. Talks to the library only through gcq.h.
//
// Exit codes: 0 exact, 1 bad flags, 2 unreadable or malformed input,
// 3 stopped by the time limit, 4 stopped at --ub.

#include <gcq/gcq.h>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

enum Exit : int { kExact = 0, kBadFlags = 1, kBadInput = 2, kTimeLimit = 3, kUbReached = 4 };

struct Config {
  std::string input;
  std::string format = "edges";
  bool directed = false;
  bool reciprocal = false;
  bool all_components = false;
  std::optional<std::uint32_t> lb;
  std::optional<std::uint32_t> ub;
  unsigned threads = 1;
  double time_limit = 3600.0;
  bool heuristic = false;
  bool no_warm_start = false;
  bool skip_clique = false;
  bool pretty = false;
  std::string out;
  std::string emit_reach;
  std::vector<std::uint32_t> ubs;
  double reach_cap_mb = 1024.0;
  std::optional<long long> seed;
};

// Thrown for failures that map to an exit code; the message goes to stderr.
struct Failure {
  int code;
  std::string message;
};

void check(gcq_status s) {
  if (s == GCQ_OK) return;
  const bool bad_flags = s == GCQ_ERR_INVALID_ARGUMENT || s == GCQ_ERR_OUT_OF_RANGE;
  throw Failure{bad_flags ? kBadFlags : kBadInput, std::string(gcq_status_string(s)) + ": " + gcq_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<gcq_graph, Deleter<gcq_graph, gcq_graph_free>>;
using TemporalPtr = std::unique_ptr<gcq_temporal, Deleter<gcq_temporal, gcq_temporal_free>>;
using CliquePtr = std::unique_ptr<gcq_clique, Deleter<gcq_clique, gcq_clique_free>>;
using TsccPtr = std::unique_ptr<gcq_tscc, Deleter<gcq_tscc, gcq_tscc_free>>;

// Ordered key/value block; `key=value` lines, or an aligned table with --pretty.
class Report {
 public:
  template <typename T>
  void add(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    rows_.emplace_back(key, s.str());
  }
  void add_time(const std::string& key, double seconds) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", seconds);
    rows_.emplace_back(key, buf);
  }
  void print(std::ostream& os, bool pretty) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) {
      if (pretty) {
        os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
      } else {
        os << k << '=' << v << '\n';
      }
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string graph_name(const std::string& path) { return std::filesystem::path(path).stem().string(); }

gcq_search_options search_options(const Config& c) {
  gcq_search_options o;
  gcq_search_options_init(&o);
  o.lb = c.lb.value_or(0);
  o.has_ub = c.ub.has_value();
  o.ub = c.ub.value_or(0);
  o.time_limit = c.time_limit > 0 ? c.time_limit : -1.0;
  o.threads = c.threads;
  o.warm_start = c.no_warm_start ? 0 : 1;
  return o;
}

void warn_reach_memory(const gcq_temporal* t, const Config& c) {
  const double mb = static_cast<double>(gcq_temporal_reach_bytes(t)) / (1024.0 * 1024.0);
  if (mb > c.reach_cap_mb) {
    std::cerr << "warning: reach matrix needs " << mb << " MiB, above the " << c.reach_cap_mb
              << " MiB cap (--reach-cap-mb)\n";
  }
}

TemporalPtr load_temporal(const Config& c) {
  if (!c.directed) {
    std::cerr << "note: treating contacts as undirected; pass --directed for one-way contacts\n";
  }
  gcq_temporal* t = nullptr;
  check(gcq_temporal_read(c.input.c_str(), c.directed ? 1 : 0, &t));
  TemporalPtr owned(t);
  warn_reach_memory(t, c);
  return owned;
}

// Static graph for clique/stats/kcore/sweep: an edge list, or the strong
// reachability graph of a temporal edge list with --format temporal.
GraphPtr load_static(const Config& c) {
  gcq_graph* g = nullptr;
  if (c.format == "temporal") {
    auto t = load_temporal(c);
    check(gcq_temporal_strong_reachability(t.get(), &g));
    return GraphPtr(g);
  }
  gcq_load_options opts{c.directed ? 1 : 0, c.reciprocal ? 1 : 0, c.all_components ? 0 : 1};
  check(gcq_graph_read(c.input.c_str(), &opts, &g));
  return GraphPtr(g);
}

void write_lines(const Config& c, const std::vector<std::string>& lines, std::ostream& fallback,
                 const char* header) {
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) throw Failure{kBadInput, "cannot open '" + c.out + "' for writing"};
    for (const auto& l : lines) f << l << '\n';
    return;
  }
  if (header) fallback << header << '\n';
  for (const auto& l : lines) fallback << l << '\n';
}

int clique_exit(const gcq_clique_info& info) {
  if (info.time_limited) return kTimeLimit;
  if (info.ub_reached) return kUbReached;
  return kExact;
}

void add_clique_fields(Report& r, const gcq_clique_info& info, bool heuristic_only) {
  r.add("size", info.size);
  r.add("exact", info.exact);
  r.add("ub_reached", info.ub_reached);
  r.add("time_limited", info.time_limited);
  r.add("steps", info.steps);
  if (heuristic_only) {
    r.add("heuristic_size", info.size);
    r.add_time("heuristic_time", info.wall_time);
    r.add_time("exact_time", 0.0);
  } else {
    r.add("heuristic_size", info.heuristic_size);
    r.add_time("heuristic_time", info.heuristic_time);
    r.add_time("exact_time", info.wall_time - info.heuristic_time);
  }
  r.add_time("wall_time", info.wall_time);
}

std::vector<std::string> witness_labels(const gcq_clique* cl, const gcq_clique_info& info,
                                        const char* (*label)(const void*, std::uint32_t), const void* owner) {
  std::vector<std::string> out;
  const std::uint32_t* v = gcq_clique_vertices(cl);
  for (std::size_t i = 0; i < info.witness_size; ++i) out.emplace_back(label(owner, v[i]));
  return out;
}

const char* static_label(const void* g, std::uint32_t v) {
  return gcq_graph_label(static_cast<const gcq_graph*>(g), v);
}

const char* temporal_label(const void* t, std::uint32_t v) {
  return gcq_temporal_label(static_cast<const gcq_temporal*>(t), v);
}

int run_clique(const Config& c) {
  auto g = load_static(c);
  gcq_clique* raw = nullptr;
  if (c.heuristic) {
    check(gcq_max_clique_heuristic(g.get(), c.threads, &raw));
  } else {
    auto opts = search_options(c);
    check(gcq_max_clique(g.get(), &opts, &raw));
  }
  CliquePtr cl(raw);
  gcq_clique_info info;
  gcq_clique_get_info(cl.get(), &info);

  Report r;
  r.add("graph", graph_name(c.input));
  r.add("n", gcq_graph_num_vertices(g.get()));
  r.add("m", gcq_graph_num_edges(g.get()));
  if (c.seed) r.add("seed", *c.seed);
  add_clique_fields(r, info, c.heuristic);
  r.print(std::cout, c.pretty);
  write_lines(c, witness_labels(cl.get(), info, static_label, g.get()), std::cout, "witness");
  return c.heuristic ? kExact : clique_exit(info);
}

int run_tscc(const Config& c) {
  auto t = load_temporal(c);
  auto opts = search_options(c);
  gcq_tscc* raw = nullptr;
  check(gcq_max_tscc(t.get(), &opts, &raw));
  TsccPtr res(raw);
  const gcq_clique* cl = gcq_tscc_clique(res.get());
  const gcq_graph* rs = gcq_tscc_reach_graph(res.get());
  gcq_clique_info info;
  gcq_clique_get_info(cl, &info);
  gcq_stats st;
  gcq_tscc_reach_stats(res.get(), &st);

  if (!c.emit_reach.empty()) check(gcq_graph_write_edges(rs, c.emit_reach.c_str()));

  Report r;
  r.add("graph", graph_name(c.input));
  r.add("n", gcq_temporal_num_vertices(t.get()));
  r.add("temporal_edges", gcq_temporal_num_edges(t.get()));
  r.add("directed", c.directed);
  r.add("reach_n", st.n);
  r.add("reach_m", st.m);
  r.add("reach_K", st.K);
  r.add_time("reach_time", gcq_tscc_reach_time(res.get()));
  add_clique_fields(r, info, false);
  r.print(std::cout, c.pretty);
  write_lines(c, witness_labels(cl, info, temporal_label, t.get()), std::cout, "witness");
  return clique_exit(info);
}

void print_stats_pretty(std::ostream& os, const std::string& header, const std::string& row) {
  std::vector<std::string> keys, values;
  std::string field;
  for (std::istringstream hs(header); std::getline(hs, field, ',');) keys.push_back(field);
  std::istringstream rs(row);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::getline(rs, field, ',');
    values.push_back(rs ? field : "");
    if (!rs) rs.clear();
  }
  Report r;
  for (std::size_t i = 0; i < keys.size(); ++i) r.add(keys[i], values[i].empty() ? "-" : values[i]);
  r.print(os, true);
}

int run_stats(const Config& c) {
  auto g = load_static(c);
  auto opts = search_options(c);
  gcq_stats st;
  check(gcq_graph_stats(g.get(), c.skip_clique ? 0 : 1, &opts, &st));
  const std::string name = graph_name(c.input);
  std::string row(gcq_stats_csv_row(name.c_str(), &st, nullptr, 0), '\0');
  gcq_stats_csv_row(name.c_str(), &st, row.data(), row.size() + 1);
  if (c.pretty) {
    print_stats_pretty(std::cout, gcq_stats_csv_header(), row);
  } else {
    std::cout << gcq_stats_csv_header() << '\n' << row << '\n';
  }
  if (st.has_omega && st.omega_is_lower_bound) {
    std::cerr << "warning: omega is a lower bound (time limit reached)\n";
    return kTimeLimit;
  }
  return kExact;
}

int run_kcore(const Config& c) {
  auto g = load_static(c);
  const std::size_t n = gcq_graph_num_vertices(g.get());
  std::vector<std::uint32_t> cores(n);
  std::uint32_t degeneracy = 0;
  check(gcq_graph_core_numbers(g.get(), cores.data(), &degeneracy));
  gcq_clique_bounds b;
  check(gcq_graph_clique_bounds(g.get(), &b));

  Report r;
  r.add("graph", graph_name(c.input));
  r.add("n", n);
  r.add("m", gcq_graph_num_edges(g.get()));
  r.add("K", degeneracy);
  r.add("min_degree", b.lower_delta);
  r.add("kcore_ub", b.kcore_ub);
  r.add("degree_ub", b.degree_ub);
  r.add("triangle_ub", b.triangle_ub);
  r.add("best_ub", b.best_ub);
  r.print(std::cout, c.pretty);

  std::vector<std::string> lines;
  lines.reserve(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    lines.push_back(std::string(gcq_graph_label(g.get(), v)) + ',' + std::to_string(cores[v]));
  }
  write_lines(c, lines, std::cout, "vertex,core");
  return kExact;
}

int run_sweep(const Config& c) {
  auto g = load_static(c);
  std::vector<std::uint32_t> ubs = c.ubs;
  if (ubs.empty()) {
    // Default: ceil(f * omega) for f = 0.1, 0.2, ..., 1.0.
    auto opts = search_options(c);
    gcq_clique* raw = nullptr;
    check(gcq_max_clique(g.get(), &opts, &raw));
    CliquePtr cl(raw);
    gcq_clique_info info;
    gcq_clique_get_info(cl.get(), &info);
    if (info.time_limited) throw Failure{kTimeLimit, "time limit reached while computing omega for the sweep"};
    for (int i = 1; i <= 10; ++i) {
      auto ub = static_cast<std::uint32_t>(std::ceil(info.size * i / 10.0));
      if (ub >= 1 && (ubs.empty() || ubs.back() != ub)) ubs.push_back(ub);
    }
  }
  std::vector<gcq_sweep_row> rows(ubs.size());
  check(gcq_ub_sweep(g.get(), ubs.data(), ubs.size(), c.threads, c.time_limit > 0 ? c.time_limit : -1.0,
                     rows.data()));
  std::ostringstream csv;
  char buf[128];
  if (c.pretty) {
    csv << "      ub    wall_time      size  exact  ub_reached  failed\n";
    for (const auto& row : rows) {
      std::snprintf(buf, sizeof buf, "%8u  %11.6f  %8u  %5d  %10d  %6d\n", row.ub, row.wall_time, row.size,
                    row.exact, row.ub_reached, row.failed);
      csv << buf;
    }
  } else {
    csv << "ub,wall_time,size,exact,ub_reached,failed\n";
    for (const auto& row : rows) {
      std::snprintf(buf, sizeof buf, "%u,%.6f,%u,%d,%d,%d\n", row.ub, row.wall_time, row.size, row.exact,
                    row.ub_reached, row.failed);
      csv << buf;
    }
  }
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) throw Failure{kBadInput, "cannot open '" + c.out + "' for writing"};
    f << csv.str();
  } else {
    std::cout << csv.str();
  }
  bool any_timeout = std::any_of(rows.begin(), rows.end(), [](const gcq_sweep_row& r) {
    return !r.failed && !r.exact;
  });
  return any_timeout ? kTimeLimit : kExact;
}

// GCQ_THREADS / GCQ_TIME_LIMIT apply when the flag is absent. CLI11 would
// silently skip a malformed variable, so they are parsed here instead.
template <typename T>
bool env_override(CLI::App* cmd, const std::string& flag, const char* var, T& target, T min, T max) {
  const CLI::Option* opt = cmd->get_option_no_throw(flag);
  const char* raw = std::getenv(var);
  if (!opt || opt->count() > 0 || !raw || !*raw) return true;
  const std::string text(raw);
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || !(value >= min && value <= max)) {
    std::cerr << "error: " << var << "='" << text << "' is not a valid value for " << flag << '\n';
    return false;
  }
  target = value;
  return true;
}

void add_input(CLI::App* cmd, Config& c) {
  cmd->add_option("file", c.input, "Input edge list")->required();
}

void add_format(CLI::App* cmd, Config& c) {
  cmd->add_option("--format", c.format, "Input format: edges, or temporal (use its strong reachability graph)")
      ->check(CLI::IsMember({"edges", "temporal"}))
      ->capture_default_str();
  cmd->add_flag("--directed", c.directed, "Treat input pairs as arcs");
  cmd->add_flag("--reciprocal", c.reciprocal, "With --directed, keep only reciprocated edges");
  cmd->add_flag("--all-components", c.all_components, "Keep every connected component (default: largest only)");
  cmd->add_option("--reach-cap-mb", c.reach_cap_mb, "Warn when the temporal reach matrix exceeds this size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_search(CLI::App* cmd, Config& c) {
  cmd->add_option("--lb", c.lb, "Lower bound on the clique number (initial incumbent)");
  cmd->add_option("--ub", c.ub, "Stop as soon as a clique of this size is found");
  cmd->add_option("--time-limit", c.time_limit, "Wall-clock budget in seconds; 0 disables")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_flag("--no-warm-start", c.no_warm_start, "Do not seed the search with the greedy clique");
}

void add_common(CLI::App* cmd, Config& c) {
  cmd->add_option("--threads", c.threads, "Worker threads")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  cmd->add_flag("--pretty", c.pretty, "Human-readable table instead of key=value/CSV");
  cmd->add_option("--out", c.out, "Write witness / per-row output to this file");
  cmd->add_option("--seed", c.seed, "Seed recorded in the report (for randomized fixtures)");
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Maximum cliques, k-cores and temporal strong components"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gcq_version()));

  auto* clique = app.add_subcommand("clique", "Maximum clique (exact unless --heuristic)");
  add_input(clique, c);
  add_format(clique, c);
  add_search(clique, c);
  add_common(clique, c);
  clique->add_flag("--heuristic", c.heuristic, "Greedy heuristic only");

  auto* tscc = app.add_subcommand("tscc", "Largest temporal strong component of a src dst time list");
  add_input(tscc, c);
  tscc->add_flag("--directed", c.directed, "Contacts are one-way");
  tscc->add_option("--reach-cap-mb", c.reach_cap_mb, "Warn when the reach matrix exceeds this size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tscc->add_option("--emit-reach", c.emit_reach, "Write the strong reachability graph as an edge list");
  add_search(tscc, c);
  add_common(tscc, c);

  auto* stats = app.add_subcommand("stats", "Network statistics as one CSV row");
  add_input(stats, c);
  add_format(stats, c);
  add_search(stats, c);
  add_common(stats, c);
  stats->add_flag("--skip-clique", c.skip_clique, "Leave omega and gamma_K empty");

  auto* kcore = app.add_subcommand("kcore", "Core numbers and clique-number bounds");
  add_input(kcore, c);
  add_format(kcore, c);
  add_common(kcore, c);

  auto* sweep = app.add_subcommand("ub-sweep", "One exact run per upper bound, as CSV");
  sweep->alias("reach-sweep");
  add_input(sweep, c);
  add_format(sweep, c);
  add_search(sweep, c);
  add_common(sweep, c);
  sweep->add_option("--ubs", c.ubs, "Upper bounds (default: ceil(f * omega) for f = 0.1 .. 1.0)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadFlags;
  }

  CLI::App* selected = app.get_subcommands().front();
  if (!env_override(selected, "--threads", "GCQ_THREADS", c.threads, 1u, 1024u) ||
      !env_override(selected, "--time-limit", "GCQ_TIME_LIMIT", c.time_limit, 0.0, 1e12)) {
    return kBadFlags;
  }
  if (c.lb && c.ub && *c.lb > *c.ub) {
    std::cerr << "error: --lb " << *c.lb << " exceeds --ub " << *c.ub << '\n';
    return kBadFlags;
  }
  if (c.ub && *c.ub == 0) {
    std::cerr << "error: --ub must be at least 1\n";
    return kBadFlags;
  }

  try {
    if (*clique) return run_clique(c);
    if (*tscc) return run_tscc(c);
    if (*stats) return run_stats(c);
    if (*kcore) return run_kcore(c);
    return run_sweep(c);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
}
