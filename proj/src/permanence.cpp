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

#include "dyperm/permanence.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "dyperm/error.hpp"

namespace dyperm {
namespace {

// |a ∩ b| for ascending ranges.
std::size_t SortedIntersectionSize(std::span<const NodeId> a,
                                   std::span<const NodeId> b) {
  std::size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

double InternalClustering(std::size_t internal_degree, std::size_t e_neig) {
  if (internal_degree < 2) return 0.0;
  double pairs = 0.5 * static_cast<double>(internal_degree) *
                 static_cast<double>(internal_degree - 1);
  return static_cast<double>(e_neig) / pairs;
}

double PermanenceValue(std::size_t internal_degree, std::size_t degree,
                       std::size_t e_max, std::size_t e_neig) {
  if (degree == 0) return 0.0;
  double internal = static_cast<double>(internal_degree);
  double d = static_cast<double>(degree);
  if (e_max == 0) return internal / d;
  double pull = internal / (static_cast<double>(e_max) * d);
  return pull - (1.0 - InternalClustering(internal_degree, e_neig));
}

VertexPermanence VertexBreakdownIn(const Graph& g, const Partition& p,
                                   NodeId u, CommunityId c) {
  auto neighbors = g.Neighbors(u);
  std::vector<NodeId> internal;
  std::vector<CommunityId> external;
  internal.reserve(neighbors.size());
  external.reserve(neighbors.size());
  for (NodeId w : neighbors) {
    CommunityId cw = p.CommunityOf(w);
    if (cw == c) {
      internal.push_back(w);
    } else {
      external.push_back(cw);
    }
  }

  VertexPermanence b;
  b.degree = neighbors.size();
  b.internal_degree = internal.size();

  std::sort(external.begin(), external.end());
  for (std::size_t i = 0; i < external.size();) {
    std::size_t j = i;
    while (j < external.size() && external[j] == external[i]) ++j;
    b.e_max = std::max(b.e_max, j - i);
    i = j;
  }

  if (internal.size() >= 2) {
    std::size_t twice = 0;
    for (NodeId a : internal) {
      twice += SortedIntersectionSize(g.Neighbors(a), internal);
    }
    b.e_neig = twice / 2;
  }
  b.c_in = InternalClustering(b.internal_degree, b.e_neig);
  b.perm = PermanenceValue(b.internal_degree, b.degree, b.e_max, b.e_neig);
  return b;
}

VertexPermanence VertexBreakdown(const Graph& g, const Partition& p,
                                 NodeId u) {
  if (!g.HasNode(u)) {
    throw Error(ErrorCode::kMissingNode, "node " + std::to_string(u));
  }
  return VertexBreakdownIn(g, p, u, p.CommunityOf(u));
}

std::size_t ExternalPull(const Graph& g, const Partition& p, NodeId u) {
  return VertexBreakdown(g, p, u).e_max;
}

double CommunityPermSum(const Graph& g, const Partition& p, CommunityId c) {
  double sum = 0.0;
  for (NodeId u : p.Members(c)) sum += VertexBreakdownIn(g, p, u, c).perm;
  return sum;
}

PermanenceReport GraphPermanence(const Graph& g, const Partition& p) {
  if (g.Empty()) throw Error(ErrorCode::kEmptyGraph, "graph has no nodes");
  PermanenceReport report;
  double sum = 0.0;
  for (NodeId u : g.Nodes()) {
    auto b = VertexBreakdown(g, p, u);
    sum += b.perm;
    report.per_vertex.emplace(u, b);
  }
  report.graph_perm = sum / static_cast<double>(g.NodeCount());
  return report;
}

}  // namespace dyperm
