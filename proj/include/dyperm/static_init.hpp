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

#include "dyperm/graph.hpp"
#include "dyperm/partition.hpp"

namespace dyperm {

struct InitConfig {
  std::size_t max_sweeps = 20;
  std::uint64_t seed = 0;
  double min_gain = 1e-9;
  // Independent starts with seeds seed, seed+1, ...; the partition with the
  // highest graph permanence wins (earliest on ties).
  std::size_t restarts = 1;
};

// Greedy local-moving permanence maximizer. Starts from singletons and sweeps
// the nodes in a seeded random order; each node joins the neighboring
// community that maximizes its own permanence when the gain exceeds
// `min_gain`. Stops after a sweep without moves or after `max_sweeps`.
//
// Community ids of the result are 0..k-1, numbered by smallest member.
// Throws kEmptyGraph, or kConfigInvalid for max_sweeps == 0 / restarts == 0.
Partition StaticMaximize(const Graph& g, const InitConfig& cfg = {});

}  // namespace dyperm
