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
#include <map>

#include "dyperm/graph.hpp"
#include "dyperm/partition.hpp"
#include "dyperm/types.hpp"

namespace dyperm {

// Ingredients and value of a vertex's permanence:
//
//   perm = I / (e_max * d) - (1 - c_in)        when e_max > 0
//   perm = I / d                               when e_max == 0, d > 0
//   perm = 0                                   when d == 0
//
// with c_in = e_neig / C(I, 2) for I >= 2 and 0 otherwise.
struct VertexPermanence {
  std::size_t internal_degree = 0;
  std::size_t degree = 0;
  std::size_t e_max = 0;
  std::size_t e_neig = 0;
  double c_in = 0.0;
  double perm = 0.0;

  friend bool operator==(const VertexPermanence&,
                         const VertexPermanence&) = default;
};

struct PermanenceReport {
  std::map<NodeId, VertexPermanence> per_vertex;
  double graph_perm = 0.0;
};

// Internal clustering ratio; 0 when fewer than two internal neighbors.
double InternalClustering(std::size_t internal_degree, std::size_t e_neig);

// Evaluates the formula above from raw counts.
double PermanenceValue(std::size_t internal_degree, std::size_t degree,
                       std::size_t e_max, std::size_t e_neig);

VertexPermanence VertexBreakdown(const Graph& g, const Partition& p, NodeId u);

// Breakdown of `u` as if it were a member of `c`, all other labels unchanged.
// The partition is not modified.
VertexPermanence VertexBreakdownIn(const Graph& g, const Partition& p,
                                   NodeId u, CommunityId c);

inline double VertexPerm(const Graph& g, const Partition& p, NodeId u) {
  return VertexBreakdown(g, p, u).perm;
}

// Largest number of u's neighbors inside any single community other than u's.
std::size_t ExternalPull(const Graph& g, const Partition& p, NodeId u);

// Sum of member permanences; members visited in ascending id order.
double CommunityPermSum(const Graph& g, const Partition& p, CommunityId c);

// Mean vertex permanence plus every breakdown. Throws kEmptyGraph.
PermanenceReport GraphPermanence(const Graph& g, const Partition& p);

}  // namespace dyperm
