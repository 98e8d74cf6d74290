// Copyright 2026 The dyperm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dyperm/bench.hpp"
#include "dyperm/engine.hpp"
#include "dyperm/error.hpp"
#include "dyperm/evaluation.hpp"
#include "dyperm/io.hpp"
#include "dyperm/permanence.hpp"
#include "dyperm/static_init.hpp"
#include "dyperm/version.hpp"
#include "dyperm/workload.hpp"
#include "json.hpp"

namespace dyperm::cli {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

std::string Fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string Hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

// FNV-1a, 64 bit.
std::uint64_t ContentHash(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Graph plus partition from flat files. Community-file nodes missing from the
// edge list are added as isolated nodes; graph nodes without a label get
// singleton communities above the file's ids.
struct LoadedState {
  Graph graph;
  Partition partition;
};

LoadedState LoadState(Snapshot snapshot, const Labeling& labels) {
  for (const auto& [u, _] : labels) snapshot.nodes.insert(u);
  LoadedState s;
  s.graph = ToGraph(snapshot);
  s.partition = PartitionFromLabels(labels);
  CommunityId next = s.partition.MaxCommunityId().value_or(0) +
                     (s.partition.CommunityCount() > 0 ? 1 : 0);
  for (NodeId u : s.graph.Nodes()) {
    if (!s.partition.Contains(u)) s.partition.Assign(u, next++);
  }
  return s;
}

std::string PartitionText(const Partition& p) {
  std::ostringstream os;
  WriteCommunities(os, p);
  return os.str();
}

struct InitFlags {
  std::uint64_t seed = 0;
  std::size_t sweeps = 20;
  std::size_t restarts = 1;
  double min_gain = 1e-9;

  InitConfig Config() const {
    InitConfig cfg;
    cfg.seed = seed;
    cfg.max_sweeps = sweeps;
    cfg.restarts = restarts;
    cfg.min_gain = min_gain;
    return cfg;
  }

  void Register(CLI::App* app) {
    app->add_option("--seed", seed, "Seed for the static initializer");
    app->add_option("--sweeps", sweeps, "Maximum local-moving sweeps")
        ->check(CLI::PositiveNumber);
    app->add_option("--restarts", restarts,
                    "Independent starts; best graph permanence wins")
        ->check(CLI::PositiveNumber);
    app->add_option("--min-gain", min_gain,
                    "Minimum permanence gain for a move");
  }
};

// Shared by `run` and `bench`: base snapshot plus either a community file or
// the static initializer.
struct BaseFlags {
  std::string snapshot;
  std::string communities;
  bool static_init = false;
  InitFlags init;

  void Register(CLI::App* app) {
    app->add_option("--base-snapshot", snapshot, "Edge list of G0")
        ->required();
    auto* comm = app->add_option("--base-communities", communities,
                                 "Community file for G0");
    auto* flag = app->add_flag("--static-init", static_init,
                               "Derive C0 with the static maximizer");
    comm->excludes(flag);
    init.Register(app);
  }

  LoadedState Load() const {
    if (communities.empty() && !static_init) {
      throw Error(ErrorCode::kConfigInvalid,
                  "one of --base-communities or --static-init is required");
    }
    Snapshot snap = ReadEdgeList(snapshot);
    if (!communities.empty()) {
      return LoadState(std::move(snap), ReadCommunities(communities));
    }
    LoadedState s;
    s.graph = ToGraph(snap);
    s.partition = StaticMaximize(s.graph, init.Config());
    return s;
  }
};

// ---- init -----------------------------------------------------------------

struct InitCommand {
  std::string graph;
  std::string out;
  InitFlags init;

  void Register(CLI::App* app) {
    app->add_option("--graph", graph, "Edge list")->required();
    app->add_option("--out", out, "Community file to write")->required();
    init.Register(app);
  }

  int Execute(std::ostream& os) const {
    Graph g = ToGraph(ReadEdgeList(graph));
    Partition p = StaticMaximize(g, init.Config());
    WriteFile(out, PartitionText(p));
    os << "communities=" << p.CommunityCount()
       << " graph_perm=" << Fixed(GraphPermanence(g, p).graph_perm) << '\n';
    return kExitOk;
  }
};

// ---- perm -----------------------------------------------------------------

struct PermCommand {
  std::string graph;
  std::string communities;
  std::string per_vertex;

  void Register(CLI::App* app) {
    app->add_option("--graph", graph, "Edge list")->required();
    app->add_option("--communities", communities, "Community file")
        ->required();
    app->add_option("--per-vertex", per_vertex,
                    "Write per-vertex TSV: node I d e_max c_in perm");
  }

  int Execute(std::ostream& os) const {
    auto state = LoadState(ReadEdgeList(graph), ReadCommunities(communities));
    auto report = GraphPermanence(state.graph, state.partition);
    os << "graph_perm=" << Fixed(report.graph_perm) << '\n';
    if (!per_vertex.empty()) {
      std::ostringstream tsv;
      tsv << "node\tI\td\te_max\tc_in\tperm\n";
      for (const auto& [u, b] : report.per_vertex) {
        tsv << u << '\t' << b.internal_degree << '\t' << b.degree << '\t'
            << b.e_max << '\t' << Fixed(b.c_in) << '\t' << Fixed(b.perm)
            << '\n';
      }
      WriteFile(per_vertex, tsv.str());
    }
    return kExitOk;
  }
};

// ---- eval -----------------------------------------------------------------

struct EvalCommand {
  std::string detected;
  std::string truth;

  void Register(CLI::App* app) {
    app->add_option("--detected", detected, "Detected community file")
        ->required();
    app->add_option("--truth", truth, "Ground-truth community file")
        ->required();
  }

  int Execute(std::ostream& os) const {
    Partition a = PartitionFromLabels(ReadCommunities(detected));
    Partition b = PartitionFromLabels(ReadCommunities(truth));
    auto table = ContingencyTable::Build(a, b);
    os << "nmi=" << Fixed(Nmi(table)) << " ari=" << Fixed(Ari(table)) << '\n';
    return kExitOk;
  }
};

// ---- gen ------------------------------------------------------------------

struct GenCommand {
  GenConfig cfg;
  std::string out_dir;

  void Register(CLI::App* app) {
    app->add_option("--n", cfg.n, "Node count");
    app->add_option("--k", cfg.k, "Planted communities");
    app->add_option("--mu", cfg.mu, "Mixing ratio in [0,1)");
    app->add_option("--avg-degree", cfg.avg_degree, "Expected degree");
    app->add_option("--steps", cfg.steps, "Time steps after t0");
    app->add_option("--churn", cfg.churn, "Fraction of edges rewired per step");
    app->add_option("--seed", cfg.seed, "Generator seed");
    app->add_option("--out-dir", out_dir, "Output directory")->required();
  }

  int Execute(std::ostream& os) const {
    auto w = GenerateDynamic(cfg);
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    {
      std::ostringstream s;
      WriteEdgeList(s, w.initial);
      WriteFile((dir / "t0.edges").string(), s.str());
    }
    for (std::size_t t = 0; t < w.truth.size(); ++t) {
      std::ostringstream s;
      WriteCommunities(s, w.truth[t]);
      WriteFile((dir / ("t" + std::to_string(t) + ".comms")).string(), s.str());
    }
    {
      std::ostringstream s;
      WriteEvents(s, w.events);
      WriteFile((dir / "events.tsv").string(), s.str());
    }
    os << "nodes=" << w.initial.nodes.size()
       << " edges=" << w.initial.edges.size() << " events=" << w.events.size()
       << '\n';
    return kExitOk;
  }
};

// ---- diff -----------------------------------------------------------------

struct DiffCommand {
  std::string before;
  std::string after;
  std::uint64_t timestamp = 1;

  void Register(CLI::App* app) {
    app->add_option("before", before, "Edge list A")->required();
    app->add_option("after", after, "Edge list B")->required();
    app->add_option("--timestamp", timestamp, "Timestamp stamped on events");
  }

  int Execute(std::ostream& os) const {
    auto events =
        SnapshotDiff(ReadEdgeList(before), ReadEdgeList(after), timestamp);
    WriteEvents(os, events);
    return kExitOk;
  }
};

// ---- run ------------------------------------------------------------------

struct RunCommand {
  BaseFlags base;
  std::string events;
  std::string truth_dir;
  std::string metrics = "nmi,ari";
  std::string out;
  std::string out_communities;
  bool audit = false;
  bool no_timing = false;
  std::vector<std::string> argv_echo;

  void Register(CLI::App* app) {
    base.Register(app);
    app->add_option("--events", events, "Event stream")->required();
    app->add_option("--truth-dir", truth_dir,
                    "Directory with t<k>.comms ground truth per timestamp");
    app->add_option("--metrics", metrics,
                    "Comma-separated subset of nmi,ari (NMI normalized by the "
                    "arithmetic mean of the two entropies)");
    app->add_option("--out", out, "results.csv")->required();
    app->add_option("--out-communities", out_communities,
                    "Write the final partition");
    app->add_flag("--audit", audit,
                  "Reconcile permanence from scratch after every event");
    app->add_flag("--no-timing", no_timing,
                  "Write elapsed_us as 0 for byte-reproducible output");
  }

  int Execute(std::ostream& os, std::ostream& err) const {
    const auto wall_start = Clock::now();
    bool want_nmi = false, want_ari = false;
    std::stringstream list(metrics);
    for (std::string item; std::getline(list, item, ',');) {
      if (item == "nmi") {
        want_nmi = true;
      } else if (item == "ari") {
        want_ari = true;
      } else if (!item.empty()) {
        throw Error(ErrorCode::kConfigInvalid, "unknown metric '" + item + "'");
      }
    }
    const bool scoring = !truth_dir.empty() && (want_nmi || want_ari);

    auto start = Clock::now();
    LoadedState state = base.Load();
    auto stream = ReadEvents(events);
    Engine engine(std::move(state.graph), std::move(state.partition));
    double init_us = std::chrono::duration<double, std::micro>(
                         Clock::now() - start)
                         .count();

    std::ostringstream csv;
    csv << "timestamp,n_nodes,n_edges,n_communities,graph_perm";
    if (scoring && want_nmi) csv << ",nmi";
    if (scoring && want_ari) csv << ",ari";
    if (scoring) csv << ",skipped";
    csv << ",elapsed_us\n";

    auto emit = [&](std::uint64_t t, double elapsed_us) {
      csv << t << ',' << engine.graph().NodeCount() << ','
          << engine.graph().EdgeCount() << ','
          << engine.partition().CommunityCount() << ','
          << Fixed(engine.GraphPerm());
      if (scoring) {
        auto path = (fs::path(truth_dir) / ("t" + std::to_string(t) + ".comms"))
                        .string();
        auto record =
            EvaluateAgainstTruth(t, engine.partition(), ReadCommunities(path));
        if (want_nmi) csv << ',' << Fixed(record.nmi);
        if (want_ari) csv << ',' << Fixed(record.ari);
        csv << ',' << record.skipped;
      }
      csv << ',' << (no_timing ? 0 : static_cast<long long>(elapsed_us))
          << '\n';
    };

    if (audit) engine.Audit();
    emit(0, init_us);
    std::size_t i = 0;
    while (i < stream.size()) {
      const std::uint64_t t = stream[i].timestamp;
      auto group_start = Clock::now();
      double audit_us = 0.0;
      for (; i < stream.size() && stream[i].timestamp == t; ++i) {
        engine.Apply(stream[i]);
        if (audit) {
          auto audit_start = Clock::now();
          try {
            engine.Audit();
          } catch (const Error& e) {
            throw e.AtLine(stream[i].line);
          }
          audit_us += std::chrono::duration<double, std::micro>(
                          Clock::now() - audit_start)
                          .count();
        }
      }
      double elapsed = std::chrono::duration<double, std::micro>(
                           Clock::now() - group_start)
                           .count() -
                       audit_us;
      emit(t, elapsed);
    }

    const std::string results = csv.str();
    WriteFile(out, results);
    if (!out_communities.empty()) {
      WriteFile(out_communities, PartitionText(engine.partition()));
    }

    nlohmann::ordered_json manifest;
    manifest["tool"] = "dyperm";
    manifest["version"] = kToolVersion;
    manifest["format_version"] = kFormatVersion;
    manifest["command"] = argv_echo;
    manifest["config"] = {
        {"base_snapshot", base.snapshot},
        {"base_communities", base.communities},
        {"static_init", base.static_init},
        {"seed", base.init.seed},
        {"sweeps", base.init.sweeps},
        {"restarts", base.init.restarts},
        {"min_gain", base.init.min_gain},
        {"events", events},
        {"truth_dir", truth_dir},
        {"metrics", metrics},
        {"audit", audit},
        {"no_timing", no_timing},
    };
    nlohmann::ordered_json inputs;
    inputs[base.snapshot] = Hex64(ContentHash(ReadFile(base.snapshot)));
    if (!base.communities.empty()) {
      inputs[base.communities] = Hex64(ContentHash(ReadFile(base.communities)));
    }
    inputs[events] = Hex64(ContentHash(ReadFile(events)));
    manifest["input_hashes"] = inputs;
    manifest["results_hash"] = Hex64(ContentHash(results));
    manifest["events_processed"] = engine.stats().events;
    manifest["nodes_moved"] = engine.stats().nodes_moved;
    manifest["splits"] = engine.stats().splits;
    manifest["wall_clock_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - wall_start)
            .count();
    WriteFile(out + ".manifest.json", manifest.dump(2) + "\n");

    os << "events=" << engine.stats().events
       << " graph_perm=" << Fixed(engine.GraphPerm())
       << " communities=" << engine.partition().CommunityCount() << '\n';
    (void)err;
    return kExitOk;
  }
};

// ---- bench ----------------------------------------------------------------

struct BenchCommand {
  BaseFlags base;
  std::string events;
  std::string out;
  std::size_t max_events = 0;

  void Register(CLI::App* app) {
    base.Register(app);
    app->add_option("--events", events, "Event stream")->required();
    app->add_option("--max-events", max_events,
                    "Use only the first N events (0 = all)");
    app->add_option("--out", out, "Per-event timing CSV");
  }

  int Execute(std::ostream& os) const {
    LoadedState state = base.Load();
    auto stream = ReadEvents(events);
    if (max_events > 0 && stream.size() > max_events) stream.resize(max_events);
    BenchOptions options;
    options.init = base.init.Config();
    auto report =
        RunBenchmark(state.graph, state.partition, stream, options);
    if (!out.empty()) {
      std::ostringstream csv;
      csv << "index,kind,affected_edges,incremental_us,static_us\n";
      for (const auto& r : report.events) {
        csv << r.index << ',' << Opcode(r.kind) << ',' << r.affected_edges
            << ',' << Fixed(r.incremental_us) << ',' << Fixed(r.static_us)
            << '\n';
      }
      WriteFile(out, csv.str());
    }
    os << "events=" << report.events.size()
       << " incremental_total_us=" << Fixed(report.incremental_total_us)
       << " static_total_us=" << Fixed(report.static_total_us)
       << " speedup=" << Fixed(report.speedup)
       << " final_nmi=" << Fixed(report.final_nmi) << '\n';
    return kExitOk;
  }
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfigInvalid: return kExitUsage;
    case ErrorCode::kInvariantViolation: return kExitInvariant;
    default: return kExitInput;
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Incremental community detection by permanence maximization",
               "dyperm"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print tool and format version");

  InitCommand init_cmd;
  init_cmd.Register(
      app.add_subcommand("init", "Static permanence maximization of G0"));
  RunCommand run_cmd;
  run_cmd.Register(app.add_subcommand("run", "Replay an event stream"));
  PermCommand perm_cmd;
  perm_cmd.Register(app.add_subcommand("perm", "Score a partition"));
  EvalCommand eval_cmd;
  eval_cmd.Register(app.add_subcommand(
      "eval", "NMI (arithmetic-mean normalization) and ARI vs ground truth"));
  GenCommand gen_cmd;
  gen_cmd.Register(
      app.add_subcommand("gen", "Generate a planted-partition workload"));
  DiffCommand diff_cmd;
  diff_cmd.Register(
      app.add_subcommand("diff", "Event stream between two snapshots"));
  BenchCommand bench_cmd;
  bench_cmd.Register(app.add_subcommand(
      "bench", "Incremental vs. per-event static recomputation timing"));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dyperm: " << e.what() << '\n';
    return kExitUsage;
  }

  if (show_version) {
    out << "dyperm " << kToolVersion << " (format v" << kFormatVersion
        << ")\n";
    return kExitOk;
  }

  try {
    const auto& sub = app.get_subcommands();
    if (sub.empty()) {
      err << "dyperm: a subcommand is required (init, run, perm, eval, gen, "
             "diff, bench)\n";
      return kExitUsage;
    }
    const std::string name = sub.front()->get_name();
    if (name == "init") return init_cmd.Execute(out);
    if (name == "perm") return perm_cmd.Execute(out);
    if (name == "eval") return eval_cmd.Execute(out);
    if (name == "gen") return gen_cmd.Execute(out);
    if (name == "diff") return diff_cmd.Execute(out);
    if (name == "bench") return bench_cmd.Execute(out);
    if (name == "run") {
      run_cmd.argv_echo = args;
      return run_cmd.Execute(out, err);
    }
  } catch (const Error& e) {
    err << "dyperm: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "dyperm: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace dyperm::cli
