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

#include "dyperm/bench.hpp"

#include <chrono>
#include <set>

#include "dyperm/engine.hpp"
#include "dyperm/evaluation.hpp"

namespace dyperm {
namespace {

using Clock = std::chrono::steady_clock;

double MicrosSince(Clock::time_point start) {
  return std::chrono::duration<double, std::micro>(Clock::now() - start)
      .count();
}

}  // namespace

std::size_t AffectedEdges(const Graph& g, const Partition& p,
                          const AtomicEvent& e) {
  std::set<CommunityId> communities;
  if (auto c = p.FindCommunity(e.u)) communities.insert(*c);
  if (e.IsEdgeEvent()) {
    if (auto c = p.FindCommunity(e.v)) communities.insert(*c);
  }
  std::set<NodeId> members;
  for (CommunityId c : communities) {
    const auto& m = p.Members(c);
    members.insert(m.begin(), m.end());
  }
  std::size_t edges = 0;
  for (NodeId w : members) {
    for (NodeId x : g.Neighbors(w)) {
      if (!members.contains(x) || w < x) ++edges;
    }
  }
  return edges;
}

BenchReport RunBenchmark(const Graph& g0, const Partition& c0,
                         std::span<const AtomicEvent> events,
                         const BenchOptions& options) {
  BenchReport report;
  report.events.reserve(events.size());

  Engine engine(g0, c0);
  for (std::size_t i = 0; i < events.size(); ++i) {
    BenchEventRecord record;
    record.index = i;
    record.kind = events[i].kind;
    record.affected_edges =
        AffectedEdges(engine.graph(), engine.partition(), events[i]);
    auto start = Clock::now();
    engine.Apply(events[i]);
    record.incremental_us = MicrosSince(start);
    report.incremental_total_us += record.incremental_us;
    report.events.push_back(record);
  }

  if (options.incremental_only) return report;

  Graph g = g0;
  Partition last = c0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    ApplyToGraph(g, events[i]);
    if (g.Empty()) {
      last = Partition();
      continue;
    }
    auto start = Clock::now();
    last = StaticMaximize(g, options.init);
    report.events[i].static_us = MicrosSince(start);
    report.static_total_us += report.events[i].static_us;
  }

  if (report.incremental_total_us > 0.0) {
    report.speedup = report.static_total_us / report.incremental_total_us;
  }
  if (engine.partition().NodeCount() > 0) {
    report.final_nmi = Nmi(engine.partition(), last);
  } else {
    report.final_nmi = 1.0;
  }
  return report;
}

}  // namespace dyperm
