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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dyperm/event.hpp"
#include "dyperm/graph.hpp"
#include "dyperm/partition.hpp"
#include "dyperm/static_init.hpp"

namespace dyperm {

struct BenchEventRecord {
  std::size_t index = 0;
  EventKind kind = EventKind::kNewEdge;
  // Edges incident to the pre-event communities of the event's endpoints.
  std::size_t affected_edges = 0;
  double incremental_us = 0.0;
  double static_us = 0.0;
};

struct BenchReport {
  std::vector<BenchEventRecord> events;
  double incremental_total_us = 0.0;
  double static_total_us = 0.0;
  // static_total_us / incremental_total_us.
  double speedup = 0.0;
  // Agreement between the final partitions of the two arms.
  double final_nmi = 0.0;
};

struct BenchOptions {
  InitConfig init;
  // Skip the static arm (latency studies of the incremental arm only).
  bool incremental_only = false;
};

// Replays `events` twice from (g0, c0): once through the incremental engine,
// once by re-running StaticMaximize from scratch after every event.
BenchReport RunBenchmark(const Graph& g0, const Partition& c0,
                         std::span<const AtomicEvent> events,
                         const BenchOptions& options = {});

// Edges incident to members of the communities of u (and v, for edge events).
std::size_t AffectedEdges(const Graph& g, const Partition& p,
                          const AtomicEvent& e);

}  // namespace dyperm
