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

#include <cstdint>
#include <utility>

namespace dyperm {

using NodeId = std::uint64_t;
using CommunityId = std::uint64_t;

// Undirected edge, stored with first < second.
struct Edge {
  NodeId first = 0;
  NodeId second = 0;

  static Edge Canonical(NodeId u, NodeId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Absolute tolerance for every permanence comparison.
inline constexpr double kPermEpsilon = 1e-12;

}  // namespace dyperm
