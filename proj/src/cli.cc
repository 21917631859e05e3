/* Copyright 2026 The gwin Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "gwin/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gwin/codec.hpp"
#include "gwin/dbindex.hpp"
#include "gwin/generators.hpp"
#include "gwin/graph_io.hpp"
#include "gwin/iindex.hpp"
#include "gwin/index_io.hpp"
#include "gwin/jaccard.hpp"
#include "gwin/nonindexed.hpp"
#include "gwin/parallel.hpp"
#include "gwin/result_io.hpp"
#include "gwin/traversal.hpp"

namespace gwin {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

template <class F>
double median_seconds(unsigned repeat, F&& f) {
  std::vector<double> times;
  for (unsigned i = 0; i < std::max(1u, repeat); ++i) {
    const auto start = Clock::now();
    f();
    times.push_back(seconds_since(start));
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

// ---- shared flag groups ----------------------------------------------------

struct GraphFlags {
  std::string path;
  bool directed = false;

  void add(CLI::App* app, bool required = true) {
    auto* opt = app->add_option("--graph", path, "Edge-list file");
    if (required) opt->required();
    app->add_flag("--directed", directed, "Treat the edge list as directed");
  }
  LoadedGraph load() const {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    return load_edge_list(in, directed ? Directedness::kDirected
                                       : Directedness::kUndirected);
  }
};

struct WindowFlags {
  std::string kind = "khop";
  unsigned k = 2;
  std::string direction;
  CLI::Option* kind_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* direction_opt = nullptr;

  void add(CLI::App* app) {
    kind_opt = app->add_option("--window", kind, "khop or topological")
                   ->check(CLI::IsMember({"khop", "topological"}));
    k_opt = app->add_option("--k", k, "Hop bound of a k-hop window")
                ->check(CLI::PositiveNumber);
    direction_opt = app->add_option("--direction", direction,
                                    "out, in or undirected (default: the graph's)")
                        ->check(CLI::IsMember({"out", "in", "undirected"}));
  }
  bool given() const {
    return kind_opt->count() + k_opt->count() + direction_opt->count() > 0;
  }
  WindowSpec resolve(const Graph& g) const {
    if (kind == "topological") {
      if (k_opt->count() || direction_opt->count()) {
        throw UsageError("--k and --direction apply to k-hop windows only");
      }
      return WindowSpec::topological();
    }
    Direction d = g.default_direction();
    if (direction == "out") d = Direction::kOut;
    if (direction == "in") d = Direction::kIn;
    if (direction == "undirected") d = Direction::kUndirected;
    const WindowSpec spec = WindowSpec::khop(k, d);
    if (!g.accepts(d)) {
      throw UsageError("direction " + std::string(to_string(d)) +
                       " does not fit a " + (g.directed() ? "directed" : "undirected") +
                       " graph");
    }
    return spec;
  }
};

struct AggregateFlags {
  std::string function = "sum";
  std::string attribute;
  std::string attributes_path;
  CLI::Option* function_opt = nullptr;

  void add(CLI::App* app) {
    function_opt = app->add_option("--aggregate", function, "sum, count, avg, min or max")
                       ->check(CLI::IsMember({"sum", "count", "avg", "min", "max"}));
    app->add_option("--attribute", attribute, "Attribute column to aggregate");
    app->add_option("--attributes", attributes_path, "Attribute CSV file");
  }
  AggregateSpec spec() const {
    AggregateSpec s{parse_aggregate_function(function), attribute};
    if (s.function != AggregateFunction::kCount && attribute.empty()) {
      throw UsageError(function + " needs --attribute");
    }
    return s;
  }
  AttributeTable load(const Graph& g, const AggregateSpec& s) const {
    if (attributes_path.empty()) {
      if (s.function != AggregateFunction::kCount) {
        throw UsageError(function + " needs --attributes");
      }
      return AttributeTable(g.vertex_count());
    }
    std::ifstream in(attributes_path);
    if (!in) throw DataError("cannot open " + attributes_path);
    return load_attributes(in, g).table;
  }
};

void check_fingerprint(std::uint64_t index_fp, const Graph& g) {
  if (index_fp != g.fingerprint()) {
    throw DataError("index was built for a different graph (fingerprint mismatch)");
  }
}

Json window_json(const WindowSpec& w) {
  Json j{{"kind", to_string(w.kind)}};
  if (w.kind == WindowKind::kKHop) {
    j["k"] = w.k;
    j["direction"] = to_string(w.direction);
  }
  return j;
}

Json mismatch_json(const Graph& g, const std::vector<ResultMismatch>& mismatches) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(mismatches.size(), 20); ++i) {
    const auto& m = mismatches[i];
    rows.push_back({{"vertex", g.label(m.vertex)},
                    {"expected", format_value(m.expected)},
                    {"actual", format_value(m.actual)}});
  }
  return rows;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---- ingest ----------------------------------------------------------------

struct IngestFlags {
  std::string input;
  bool directed = false;
  std::string generate;
  std::size_t n = 0;
  double degree = 0;
  std::uint64_t seed = 1;
  std::string output;
  std::string attributes_out;
  std::string attr_name = "value";
  std::int64_t attr_min = 0;
  std::int64_t attr_max = 100;
};

int cmd_ingest(const IngestFlags& f, std::ostream& out) {
  if (f.input.empty() == f.generate.empty()) {
    throw UsageError("ingest needs exactly one of --input and --generate");
  }
  Graph g;
  Json report;
  if (!f.input.empty()) {
    std::ifstream in(f.input);
    if (!in) throw DataError("cannot open " + f.input);
    auto loaded = load_edge_list(
        in, f.directed ? Directedness::kDirected : Directedness::kUndirected);
    report["duplicate_edges_dropped"] = loaded.duplicate_edges;
    report["self_loops_dropped"] = loaded.self_loops;
    g = std::move(loaded.graph);
  } else {
    if (f.n == 0) throw UsageError("--generate needs --n >= 1");
    if (f.generate == "er") {
      g = generate_random_graph(f.n, f.degree, f.seed,
                                f.directed ? Directedness::kDirected
                                           : Directedness::kUndirected);
    } else {
      g = generate_random_dag(f.n, f.degree, f.seed);
    }
    report["generator"] = f.generate;
    report["seed"] = f.seed;
  }
  report["vertices"] = g.vertex_count();
  report["edges"] = g.edge_count();
  report["directed"] = g.directed();
  report["fingerprint"] = g.fingerprint();

  std::ofstream graph_out(f.output);
  if (!graph_out) throw DataError("cannot write " + f.output);
  write_edge_list(graph_out, g);
  report["output"] = f.output;

  if (!f.attributes_out.empty()) {
    if (f.attr_min > f.attr_max) throw UsageError("--attr-min exceeds --attr-max");
    AttributeTable attrs(g.vertex_count());
    attrs.add_column(generate_integer_attribute(f.attr_name, g.vertex_count(),
                                                f.attr_min, f.attr_max, f.seed + 1));
    std::ofstream attr_out(f.attributes_out);
    if (!attr_out) throw DataError("cannot write " + f.attributes_out);
    write_attributes(attr_out, attrs, g);
    report["attributes"] = f.attributes_out;
  }
  emit(out, report);
  return kExitOk;
}

// ---- build -----------------------------------------------------------------

struct BuildFlags {
  GraphFlags graph;
  WindowFlags window;
  std::string strategy = "emc";
  std::uint32_t m = 4;
  std::uint64_t seed = 1;
  std::uint32_t max_cluster = 4096;
  std::uint32_t max_rounds = 8;
  std::uint32_t cluster_hops = 1;
  std::uint32_t cluster_m = 1;
  std::uint64_t staleness = 0;
  unsigned threads = default_thread_count();
  std::string output;
  std::string json_dump;
};

BuildParams build_params(const BuildFlags& f) {
  BuildParams p;
  p.strategy = f.strategy == "mc" ? BuildStrategy::kMC : BuildStrategy::kEMC;
  p.signature_size = f.m;
  p.seed = f.seed;
  p.max_cluster = f.max_cluster;
  p.max_rounds = f.max_rounds;
  p.cluster_hops = f.cluster_hops;
  p.cluster_signature_size = f.cluster_m;
  p.threads = f.threads;
  return p;
}

int cmd_build(const BuildFlags& f, std::ostream& out) {
  if (f.strategy == "iindex" && f.window.kind != "topological") {
    throw UsageError("the iindex strategy requires --window topological");
  }
  if (f.strategy == "emc" && (f.window.kind != "khop" || f.window.k < 2)) {
    throw UsageError("the emc strategy requires a k-hop window with k >= 2");
  }
  const Graph g = f.graph.load().graph;
  const WindowSpec window = f.window.resolve(g);
  Json report{{"strategy", f.strategy}, {"window", window_json(window)}};
  std::string bytes;
  std::string dump;
  if (f.strategy == "iindex") {
    IIndexBuildStats stats;
    const IIndex index = build_iindex(g, &stats);
    bytes = serialize(index);
    if (!f.json_dump.empty()) dump = to_json(index);
    const auto size = index_size_report(index, g);
    report["build_seconds"] = stats.seconds;
    report["peak_live_windows"] = stats.peak_live_windows;
    report["wd_entries"] = size.wd_entries;
  } else {
    BuildStats stats;
    DBIndex index = build_dbindex(g, window, build_params(f), &stats);
    index.update_log().staleness_threshold = f.staleness;
    bytes = serialize(index);
    if (!f.json_dump.empty()) dump = to_json(index);
    report["build_seconds"] = stats.total_seconds;
    report["phases"] = {{"traversal_seconds", stats.traversal_seconds},
                        {"signature_seconds", stats.signature_seconds},
                        {"clustering_seconds", stats.clustering_seconds},
                        {"dense_block_seconds", stats.dense_block_seconds}};
    report["clusters"] = stats.cluster_count;
    report["largest_cluster"] = stats.largest_cluster;
    report["peak_window_entries"] = stats.peak_window_entries;
    report["blocks"] = index.block_count();
    report["dense_blocks"] = index.dense_block_count();
    report["block_members"] = index.block_member_count();
    report["links"] = index.link_count();
    report["total_work"] = index.total_work();
  }
  const std::uint64_t graph_bytes = serialize_graph(g).size();
  report["index_bytes"] = bytes.size();
  report["graph_bytes"] = graph_bytes;
  report["index_ratio"] = static_cast<double>(bytes.size()) / static_cast<double>(graph_bytes);
  write_file(f.output, bytes);
  report["output"] = f.output;
  if (!f.json_dump.empty()) {
    write_file(f.json_dump, dump);
    report["json_dump"] = f.json_dump;
  }
  emit(out, report);
  return kExitOk;
}

// ---- query -----------------------------------------------------------------

struct QueryFlags {
  GraphFlags graph;
  WindowFlags window;
  AggregateFlags aggregate;
  std::string index;
  bool oracle = false;
  bool verify = false;
  std::string format = "csv";
  std::string output;
  unsigned repeat = 1;
  unsigned threads = default_thread_count();
};

int cmd_query(const QueryFlags& f, std::ostream& out, std::ostream& err) {
  if (f.index.empty() && !f.oracle) throw UsageError("query needs --index or --oracle");
  if (f.oracle && f.verify) throw UsageError("--oracle and --verify are exclusive");
  const Graph g = f.graph.load().graph;
  const AggregateSpec spec = f.aggregate.spec();
  const AttributeTable attrs = f.aggregate.load(g, spec);
  EvalOptions options{f.threads, nullptr};
  EvalStats stats;

  Json report{{"aggregate", to_string(spec.function)}};
  ResultTable results;
  std::optional<WindowSpec> window;
  std::string index_bytes;
  if (!f.index.empty()) {
    index_bytes = read_file(f.index);
    window = detect_index_format(index_bytes) == IndexFormat::kDBIndex
                 ? deserialize_dbindex(index_bytes).window_spec()
                 : WindowSpec::topological();
    if (f.window.given() && !(f.window.resolve(g) == *window)) {
      throw UsageError("window flags contradict the index (" + window->describe() + ")");
    }
  } else {
    window = f.window.resolve(g);
  }
  report["window"] = window_json(*window);

  auto run_oracle = [&] {
    EvalOptions o = options;
    o.stats = &stats;
    return evaluate_nonindexed(g, attrs, *window, spec, o);
  };
  if (f.oracle) {
    report["evaluator"] = "nonindexed";
    report["seconds"] = median_seconds(f.repeat, [&] { results = run_oracle(); });
  } else if (detect_index_format(index_bytes) == IndexFormat::kDBIndex) {
    const DBIndex index = deserialize_dbindex(index_bytes);
    check_fingerprint(index.graph_fingerprint(), g);
    report["evaluator"] = "dbindex";
    report["seconds"] = median_seconds(f.repeat, [&] {
      EvalOptions o = options;
      o.stats = &stats;
      results = evaluate(index, attrs, spec, o);
    });
  } else {
    const IIndex index = deserialize_iindex(index_bytes);
    check_fingerprint(index.graph_fingerprint(), g);
    report["evaluator"] = "iindex";
    report["seconds"] = median_seconds(f.repeat, [&] {
      EvalOptions o = options;
      o.stats = &stats;
      results = evaluate(index, attrs, spec, o);
    });
  }
  report["add_ops"] = stats.add_ops;

  std::size_t mismatches = 0;
  if (f.verify) {
    const ResultTable expected = run_oracle();
    const auto diff = compare_results(expected, results);
    mismatches = diff.size();
    report["mismatches"] = mismatches;
    if (!diff.empty()) report["first_mismatches"] = mismatch_json(g, diff);
  }

  std::ostringstream rendered;
  if (f.format == "json") {
    write_results_json(rendered, g, results);
  } else {
    write_results_csv(rendered, g, results);
  }
  if (f.output.empty()) {
    out << rendered.str();
    emit(err, report);
  } else {
    write_file(f.output, rendered.str());
    report["output"] = f.output;
    emit(out, report);
  }
  if (f.verify) err << mismatches << " mismatches\n";
  return mismatches == 0 ? kExitOk : kExitVerification;
}

// ---- bench -----------------------------------------------------------------

struct BenchFlags {
  std::vector<std::size_t> n{10000, 50000, 100000};
  std::vector<double> degree{10};
  std::vector<unsigned> k{1, 2};
  std::vector<std::string> strategies;
  std::string window = "khop";
  unsigned repeat = 5;
  std::uint64_t seed = 1;
  std::uint32_t m = 4;
  unsigned threads = default_thread_count();
  std::string output;
};

int cmd_bench(const BenchFlags& f, std::ostream& out, std::ostream& err) {
  const bool topo = f.window == "topological";
  std::vector<std::string> strategies = f.strategies;
  if (strategies.empty()) {
    strategies = topo ? std::vector<std::string>{"iindex", "mc"}
                      : std::vector<std::string>{"emc", "mc"};
  }
  std::ostringstream csv;
  csv << "strategy,n,degree,k,status,build_seconds,traversal_seconds,signature_seconds,"
         "index_bytes,graph_bytes,index_ratio,query_seconds,nonindexed_seconds,speedup,"
         "total_work,add_ops,nonindexed_add_ops\n";
  const std::vector<unsigned> ks = topo ? std::vector<unsigned>{0} : f.k;
  for (std::size_t n : f.n) {
    for (double d : f.degree) {
      const Graph g = topo ? generate_random_dag(n, d, f.seed)
                           : generate_random_graph(n, d, f.seed);
      AttributeTable attrs(n);
      attrs.add_column(generate_integer_attribute("value", n, 0, 100, f.seed + 1));
      const AggregateSpec spec{AggregateFunction::kSum, "value"};
      const std::uint64_t graph_bytes = serialize_graph(g).size();
      for (unsigned k : ks) {
        const WindowSpec window = topo ? WindowSpec::topological()
                                       : WindowSpec::khop(k, Direction::kUndirected);
        EvalStats base_stats;
        ResultTable expected;
        const double base = median_seconds(f.repeat, [&] {
          expected = evaluate_nonindexed(g, attrs, window, spec, {f.threads, &base_stats});
        });
        for (const auto& strategy : strategies) {
          csv << strategy << ',' << n << ',' << d << ',' << k << ',';
          const bool invalid = (strategy == "emc" && (topo || k < 2)) ||
                               (strategy == "iindex" && !topo);
          if (invalid) {
            csv << "skipped,,,,,," << graph_bytes << ",,," << base << ",,,,"
                << base_stats.add_ops << '\n';
            continue;
          }
          double build = 0, traversal = 0, signature = 0, query = 0;
          std::uint64_t bytes = 0, work = 0;
          EvalStats stats;
          ResultTable results;
          if (strategy == "iindex") {
            IIndexBuildStats bs;
            const IIndex index = build_iindex(g, &bs);
            build = bs.seconds;
            bytes = serialize(index).size();
            work = index.wd_entry_count() + n;
            query = median_seconds(f.repeat, [&] {
              results = evaluate(index, attrs, spec, {f.threads, &stats});
            });
          } else {
            BuildParams p;
            p.strategy = strategy == "mc" ? BuildStrategy::kMC : BuildStrategy::kEMC;
            p.signature_size = f.m;
            p.seed = f.seed;
            p.threads = f.threads;
            BuildStats bs;
            const DBIndex index = build_dbindex(g, window, p, &bs);
            build = bs.total_seconds;
            traversal = bs.traversal_seconds;
            signature = bs.signature_seconds;
            bytes = serialize(index).size();
            work = index.total_work();
            query = median_seconds(f.repeat, [&] {
              results = evaluate(index, attrs, spec, {f.threads, &stats});
            });
          }
          const bool ok = compare_results(expected, results).empty();
          csv << (ok ? "ok" : "mismatch") << ',' << build << ',' << traversal << ','
              << signature << ',' << bytes << ',' << graph_bytes << ','
              << static_cast<double>(bytes) / static_cast<double>(graph_bytes) << ','
              << query << ',' << base << ',' << base / std::max(query, 1e-9) << ','
              << work << ',' << stats.add_ops << ',' << base_stats.add_ops << '\n';
          if (!ok) err << strategy << " n=" << n << " k=" << k << ": results differ\n";
        }
      }
    }
  }
  if (f.output.empty()) {
    out << csv.str();
  } else {
    write_file(f.output, csv.str());
    emit(out, Json{{"output", f.output}});
  }
  return kExitOk;
}

// ---- diag ------------------------------------------------------------------

struct DiagFlags {
  GraphFlags graph;
  bool jaccard = false;
  unsigned kmax = 3;
  std::size_t pairs = 1000;
  std::uint64_t seed = 1;
  std::string direction;
  bool validate = false;
  bool size = false;
  std::string index;
};

int cmd_diag(const DiagFlags& f, std::ostream& out) {
  if (!f.jaccard && !f.validate && !f.size) {
    throw UsageError("diag needs at least one of --jaccard, --validate, --size");
  }
  if ((f.validate || f.size) && f.index.empty()) {
    throw UsageError("--validate and --size need --index");
  }
  const Graph g = f.graph.load().graph;
  Json report;
  bool failed = false;
  if (f.jaccard) {
    Direction d = g.default_direction();
    if (f.direction == "out") d = Direction::kOut;
    if (f.direction == "in") d = Direction::kIn;
    if (f.direction == "undirected") d = Direction::kUndirected;
    const auto profile = jaccard_profile(g, f.kmax, f.pairs, f.seed, d);
    Json rows = Json::array();
    for (const auto& r : profile.rows) {
      rows.push_back({{"k", r.k}, {"samples", r.samples}, {"median", r.median},
                      {"mean", r.mean}, {"min", r.min}, {"max", r.max}});
    }
    bool increasing = true;
    for (std::size_t i = 1; i < profile.rows.size(); ++i) {
      increasing = increasing && profile.rows[i].median >= profile.rows[i - 1].median;
    }
    report["jaccard"] = {{"rows", rows}, {"median_nondecreasing", increasing}};
  }
  if (f.validate || f.size) {
    const std::string bytes = read_file(f.index);
    const std::uint64_t graph_bytes = serialize_graph(g).size();
    if (detect_index_format(bytes) == IndexFormat::kDBIndex) {
      const DBIndex index = deserialize_dbindex(bytes);
      check_fingerprint(index.graph_fingerprint(), g);
      if (f.validate) {
        const auto r = gwin::validate(index, g, index.window_spec());
        Json violations = Json::array();
        for (const auto& v : r.violations) {
          violations.push_back(
              {{"kind", to_string(v.kind)},
               {"vertex", v.vertex == kNoVertex ? Json() : Json(g.label(v.vertex))},
               {"block", v.block},
               {"message", v.message}});
        }
        report["validate"] = {{"index", "dbindex"}, {"violations", violations}};
        failed = !r.ok();
      }
      if (f.size) {
        report["size"] = {{"index", "dbindex"},
                          {"blocks", index.block_count()},
                          {"block_members", index.block_member_count()},
                          {"links", index.link_count()},
                          {"index_bytes", bytes.size()},
                          {"graph_bytes", graph_bytes},
                          {"ratio", static_cast<double>(bytes.size()) /
                                        static_cast<double>(graph_bytes)}};
      }
    } else {
      const IIndex index = deserialize_iindex(bytes);
      check_fingerprint(index.graph_fingerprint(), g);
      if (f.validate) {
        require_acyclic(g);
        Json violations = Json::array();
        Traversal t(g);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          if (!(materialize_window(index, v) == VertexSet(t.reachable(v, Direction::kIn)))) {
            violations.push_back({{"kind", "window"}, {"vertex", g.label(v)}});
          }
        }
        failed = !violations.empty();
        report["validate"] = {{"index", "iindex"}, {"violations", violations}};
      }
      if (f.size) {
        const auto r = index_size_report(index, g);
        report["size"] = {{"index", "iindex"},
                          {"wd_entries", r.wd_entries},
                          {"index_bytes", r.index_bytes},
                          {"graph_bytes", r.graph_bytes},
                          {"ratio", r.ratio}};
      }
    }
  }
  emit(out, report);
  return failed ? kExitVerification : kExitOk;
}

// ---- update ----------------------------------------------------------------

struct UpdateFlags {
  GraphFlags graph;
  AggregateFlags aggregate;
  std::string index;
  std::string updates;
  std::string output_index;
  std::string output_graph;
  bool verify_each = false;
  unsigned threads = 1;
};

struct UpdateLine {
  std::size_t line;
  bool insert;
  std::uint64_t u;
  std::uint64_t v;
};

std::vector<UpdateLine> read_updates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::vector<UpdateLine> out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    std::istringstream s(line);
    std::string op;
    if (!(s >> op) || op.front() == '#') continue;
    UpdateLine u{no, op == "+", 0, 0};
    std::string rest;
    if ((op != "+" && op != "-") || !(s >> u.u >> u.v) || (s >> rest)) {
      throw ParseError(no, "expected '+ u v' or '- u v'");
    }
    out.push_back(u);
  }
  return out;
}

int cmd_update(const UpdateFlags& f, std::ostream& out, std::ostream& err) {
  Graph g = f.graph.load().graph;
  const std::string bytes = read_file(f.index);
  const bool is_db = detect_index_format(bytes) == IndexFormat::kDBIndex;
  std::optional<DBIndex> db;
  std::optional<IIndex> ii;
  if (is_db) {
    db = deserialize_dbindex(bytes);
    check_fingerprint(db->graph_fingerprint(), g);
  } else {
    ii = deserialize_iindex(bytes);
    check_fingerprint(ii->graph_fingerprint(), g);
  }
  const auto updates = read_updates(f.updates);

  AggregateSpec spec{AggregateFunction::kCount, ""};
  AttributeTable attrs(g.vertex_count());
  if (f.verify_each && (f.aggregate.function_opt->count() || !f.aggregate.attributes_path.empty())) {
    spec = f.aggregate.spec();
    attrs = f.aggregate.load(g, spec);
  }
  const WindowSpec window = is_db ? db->window_spec() : WindowSpec::topological();

  std::vector<double> latency;
  std::size_t inserts = 0, deletes = 0, reorganizations = 0, mismatches = 0;
  Json log = Json::array();
  for (const auto& u : updates) {
    const auto start = Clock::now();
    try {
      const auto a = g.find_label(u.u);
      const auto b = g.find_label(u.v);
      if (!a || !b) throw UsageError("unknown vertex label");
      const Edge e{*a, *b};
      if (is_db) {
        if (u.insert) {
          g = apply_edge_insertion(*db, g, e);
          if (db->update_log().stale()) {
            *db = reorganize(*db, g);
            ++reorganizations;
            log.push_back({{"line", u.line}, {"reorganize", "staleness threshold"}});
          }
        } else {
          g = g.without_edge(e.source, e.target);
          *db = reorganize(*db, g);
          ++reorganizations;
          log.push_back({{"line", u.line}, {"reorganize", "edge deletion"}});
        }
      } else {
        g = apply_edge_update(*ii, g, e, u.insert);
      }
    } catch (const Error& ex) {
      throw DataError("updates line " + std::to_string(u.line) + ": " + ex.what());
    }
    latency.push_back(seconds_since(start));
    (u.insert ? inserts : deletes)++;

    if (f.verify_each) {
      const ResultTable expected =
          evaluate_nonindexed(g, attrs, window, spec, {f.threads, nullptr});
      const ResultTable actual = is_db ? evaluate(*db, attrs, spec, {f.threads, nullptr})
                                       : evaluate(*ii, attrs, spec, {f.threads, nullptr});
      std::size_t bad = compare_results(expected, actual).size();
      if (is_db && !validate(*db, g, window).ok()) ++bad;
      if (bad != 0) {
        err << "updates line " << u.line << ": " << bad << " mismatches\n";
        mismatches += bad;
      }
    }
  }

  if (!f.output_index.empty()) {
    write_file(f.output_index, is_db ? serialize(*db) : serialize(*ii));
  }
  if (!f.output_graph.empty()) {
    std::ofstream go(f.output_graph);
    if (!go) throw DataError("cannot write " + f.output_graph);
    write_edge_list(go, g);
  }

  std::vector<double> sorted = latency;
  std::sort(sorted.begin(), sorted.end());
  Json report{{"index", is_db ? "dbindex" : "iindex"},
              {"updates", updates.size()},
              {"insertions", inserts},
              {"deletions", deletes},
              {"reorganizations", reorganizations},
              {"reorganize_log", log}};
  if (!sorted.empty()) {
    report["latency_seconds"] = {
        {"median", sorted[sorted.size() / 2]},
        {"mean", std::accumulate(sorted.begin(), sorted.end(), 0.0) /
                     static_cast<double>(sorted.size())},
        {"max", sorted.back()}};
  }
  if (f.verify_each) {
    report["verified_aggregate"] = to_string(spec.function);
    report["mismatches"] = mismatches;
  }
  emit(out, report);
  if (f.verify_each) err << mismatches << " mismatches\n";
  return mismatches == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph window aggregation with dense-block and inheritance indices", "gwin"};
  app.require_subcommand(1);

  IngestFlags ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Normalize or generate an edge list");
  ingest_cmd->add_option("--input", ingest.input, "SNAP-style edge list to normalize");
  ingest_cmd->add_flag("--directed", ingest.directed, "Directed input or generator output");
  ingest_cmd->add_option("--generate", ingest.generate, "er or dag")
      ->check(CLI::IsMember({"er", "dag"}));
  ingest_cmd->add_option("--n", ingest.n, "Vertex count for --generate");
  ingest_cmd->add_option("--degree", ingest.degree, "Average degree for --generate");
  ingest_cmd->add_option("--seed", ingest.seed, "Generator seed");
  ingest_cmd->add_option("--output", ingest.output, "Canonical edge list to write")
      ->required();
  ingest_cmd->add_option("--attributes-out", ingest.attributes_out,
                         "Also write a random integer attribute CSV");
  ingest_cmd->add_option("--attr-name", ingest.attr_name, "Generated attribute name");
  ingest_cmd->add_option("--attr-min", ingest.attr_min, "Smallest generated value");
  ingest_cmd->add_option("--attr-max", ingest.attr_max, "Largest generated value");

  BuildFlags build;
  auto* build_cmd = app.add_subcommand("build", "Build and persist an index");
  build.graph.add(build_cmd);
  build.window.add(build_cmd);
  build_cmd->add_option("--strategy", build.strategy, "mc, emc or iindex")
      ->check(CLI::IsMember({"mc", "emc", "iindex"}));
  build_cmd->add_option("--m", build.m, "Min-hash functions per signature")
      ->check(CLI::PositiveNumber);
  build_cmd->add_option("--seed", build.seed, "Hash seed");
  build_cmd->add_option("--max-cluster", build.max_cluster, "Largest cluster before splitting")
      ->check(CLI::PositiveNumber);
  build_cmd->add_option("--max-rounds", build.max_rounds, "Dense-block refinement rounds")
      ->check(CLI::PositiveNumber);
  build_cmd->add_option("--cluster-hops", build.cluster_hops, "EMC clustering hop count")
      ->check(CLI::PositiveNumber);
  build_cmd->add_option("--cluster-m", build.cluster_m,
                        "Min-hash functions compared in EMC clustering")
      ->check(CLI::PositiveNumber);
  build_cmd->add_option("--staleness", build.staleness,
                        "Insertions before update replays reorganize (0 = never)");
  build_cmd->add_option("--threads", build.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  build_cmd->add_option("--output", build.output, "Index file to write")->required();
  build_cmd->add_option("--json", build.json_dump, "Also write a JSON dump of the index");

  QueryFlags query;
  auto* query_cmd = app.add_subcommand("query", "Evaluate a window aggregate");
  query.graph.add(query_cmd);
  query.window.add(query_cmd);
  query.aggregate.add(query_cmd);
  query_cmd->add_option("--index", query.index, "Index file");
  query_cmd->add_flag("--oracle", query.oracle, "Evaluate without an index");
  query_cmd->add_flag("--verify", query.verify, "Also run the oracle and compare");
  query_cmd->add_option("--format", query.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  query_cmd->add_option("--output", query.output, "Result file (default: stdout)");
  query_cmd->add_option("--repeat", query.repeat, "Timed repetitions (median reported)")
      ->check(CLI::PositiveNumber);
  query_cmd->add_option("--threads", query.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Synthetic build/query benchmark sweep");
  bench_cmd->add_option("--n", bench.n, "Vertex counts")->delimiter(',');
  bench_cmd->add_option("--degree", bench.degree, "Average degrees")->delimiter(',');
  bench_cmd->add_option("--k", bench.k, "Hop bounds")->delimiter(',');
  bench_cmd->add_option("--strategy", bench.strategies, "mc, emc, iindex")
      ->delimiter(',')
      ->check(CLI::IsMember({"mc", "emc", "iindex"}));
  bench_cmd->add_option("--window", bench.window, "khop (ER graphs) or topological (DAGs)")
      ->check(CLI::IsMember({"khop", "topological"}));
  bench_cmd->add_option("--repeat", bench.repeat, "Timed repetitions (median reported)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Generator and hash seed");
  bench_cmd->add_option("--m", bench.m, "Min-hash functions per signature")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--threads", bench.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--output", bench.output, "CSV report file (default: stdout)");

  DiagFlags diag;
  auto* diag_cmd = app.add_subcommand("diag", "Jaccard profile, validation, index size");
  diag.graph.add(diag_cmd);
  diag_cmd->add_flag("--jaccard", diag.jaccard, "Per-hop Jaccard profile of adjacent pairs");
  diag_cmd->add_option("--kmax", diag.kmax, "Largest hop count profiled")
      ->check(CLI::PositiveNumber);
  diag_cmd->add_option("--pairs", diag.pairs, "Sampled adjacent pairs");
  diag_cmd->add_option("--seed", diag.seed, "Sampling seed");
  diag_cmd->add_option("--direction", diag.direction, "out, in or undirected")
      ->check(CLI::IsMember({"out", "in", "undirected"}));
  diag_cmd->add_flag("--validate", diag.validate, "Check the index against the graph");
  diag_cmd->add_flag("--size", diag.size, "Index size and ratio to the graph");
  diag_cmd->add_option("--index", diag.index, "Index file");

  UpdateFlags update;
  auto* update_cmd = app.add_subcommand("update", "Replay '+ u v' / '- u v' edge updates");
  update.graph.add(update_cmd);
  update.aggregate.add(update_cmd);
  update_cmd->add_option("--index", update.index, "Index file")->required();
  update_cmd->add_option("--updates", update.updates, "Update stream file")->required();
  update_cmd->add_option("--output-index", update.output_index, "Updated index file");
  update_cmd->add_option("--output-graph", update.output_graph, "Updated edge list");
  update_cmd->add_flag("--verify-each", update.verify_each,
                       "Compare with the oracle after every update");
  update_cmd->add_option("--threads", update.threads, "Worker threads for verification")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest_cmd) return cmd_ingest(ingest, out);
    if (*build_cmd) return cmd_build(build, out);
    if (*query_cmd) return cmd_query(query, out, err);
    if (*bench_cmd) return cmd_bench(bench, out, err);
    if (*diag_cmd) return cmd_diag(diag, out);
    if (*update_cmd) return cmd_update(update, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace gwin
