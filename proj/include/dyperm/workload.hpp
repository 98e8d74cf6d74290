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
#include <cstdint>
#include <vector>

#include "dyperm/event.hpp"
#include "dyperm/graph.hpp"
#include "dyperm/io.hpp"

namespace dyperm {

// Planted-partition dynamic network parameters. `mu` is the expected fraction
// of a node's edges that leave its planted community; `churn` the fraction of
// edges rewired per step. Each step also moves round(churn * n / 2) nodes to a
// different planted community and redraws their edges.
struct GenConfig {
  std::size_t n = 1000;
  std::size_t k = 20;
  double mu = 0.2;
  double avg_degree = 10.0;
  std::size_t steps = 20;
  double churn = 0.02;
  std::uint64_t seed = 1;
};

struct DynamicWorkload {
  Snapshot initial;
  // truth[t] for t = 0..steps, planted labels sorted by node.
  std::vector<Labeling> truth;
  // Events of step t carry timestamp t.
  std::vector<AtomicEvent> events;
  // Graph after the last step.
  Snapshot final;
};

// Throws kConfigInvalid for inconsistent parameters.
void Validate(const GenConfig& cfg);

DynamicWorkload GenerateDynamic(const GenConfig& cfg);

// Events turning `a` into `b`: node additions, edge additions, edge removals,
// node removals; ascending ids within each group.
std::vector<AtomicEvent> SnapshotDiff(const Snapshot& a, const Snapshot& b,
                                      std::uint64_t timestamp = 1);

// Random valid stream of `count` events of all four kinds against `start`,
// one timestamp per event starting at 1. Re-adds previously removed ids from
// time to time. Edge additions favor closing triangles.
std::vector<AtomicEvent> RandomEventStream(const Graph& start,
                                           std::size_t count,
                                           std::uint64_t seed);

// Planted-partition snapshot only (no dynamics); labels sorted by node.
struct PlantedGraph {
  Snapshot graph;
  Labeling labels;
};
PlantedGraph GeneratePlanted(const GenConfig& cfg);

}  // namespace dyperm
