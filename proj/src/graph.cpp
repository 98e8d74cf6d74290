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

#include "dyperm/graph.hpp"

#include <algorithm>
#include <string>

#include "dyperm/error.hpp"

namespace dyperm {
namespace {

std::string EdgeName(NodeId u, NodeId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

void Graph::AddNode(NodeId u) {
  auto [it, inserted] = adjacency_.try_emplace(u);
  if (!inserted) {
    throw Error(ErrorCode::kDuplicateNode, "node " + std::to_string(u));
  }
}

std::vector<Edge> Graph::RemoveNode(NodeId u) {
  auto it = adjacency_.find(u);
  if (it == adjacency_.end()) {
    throw Error(ErrorCode::kMissingNode, "node " + std::to_string(u));
  }
  std::vector<Edge> removed;
  removed.reserve(it->second.size());
  for (NodeId v : it->second) {
    auto& back = adjacency_.at(v);
    back.erase(std::lower_bound(back.begin(), back.end(), u));
    removed.push_back(Edge::Canonical(u, v));
  }
  edge_count_ -= it->second.size();
  adjacency_.erase(it);
  std::sort(removed.begin(), removed.end());
  return removed;
}

void Graph::AddEdge(NodeId u, NodeId v) {
  if (u == v) throw Error(ErrorCode::kSelfLoop, EdgeName(u, v));
  auto iu = adjacency_.find(u);
  auto iv = adjacency_.find(v);
  if (iu == adjacency_.end()) {
    throw Error(ErrorCode::kMissingNode, "node " + std::to_string(u));
  }
  if (iv == adjacency_.end()) {
    throw Error(ErrorCode::kMissingNode, "node " + std::to_string(v));
  }
  auto& lu = iu->second;
  auto pos = std::lower_bound(lu.begin(), lu.end(), v);
  if (pos != lu.end() && *pos == v) {
    throw Error(ErrorCode::kDuplicateEdge, EdgeName(u, v));
  }
  lu.insert(pos, v);
  auto& lv = iv->second;
  lv.insert(std::lower_bound(lv.begin(), lv.end(), u), u);
  ++edge_count_;
}

void Graph::RemoveEdge(NodeId u, NodeId v) {
  auto iu = adjacency_.find(u);
  auto iv = adjacency_.find(v);
  if (iu == adjacency_.end()) {
    throw Error(ErrorCode::kMissingNode, "node " + std::to_string(u));
  }
  if (iv == adjacency_.end()) {
    throw Error(ErrorCode::kMissingNode, "node " + std::to_string(v));
  }
  auto& lu = iu->second;
  auto pos = std::lower_bound(lu.begin(), lu.end(), v);
  if (pos == lu.end() || *pos != v) {
    throw Error(ErrorCode::kMissingEdge, EdgeName(u, v));
  }
  lu.erase(pos);
  auto& lv = iv->second;
  lv.erase(std::lower_bound(lv.begin(), lv.end(), u));
  --edge_count_;
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  auto it = adjacency_.find(u);
  if (it == adjacency_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), v);
}

const std::vector<NodeId>& Graph::ListOf(NodeId u) const {
  auto it = adjacency_.find(u);
  if (it == adjacency_.end()) {
    throw Error(ErrorCode::kMissingNode, "node " + std::to_string(u));
  }
  return it->second;
}

std::span<const NodeId> Graph::Neighbors(NodeId u) const {
  return ListOf(u);
}

std::vector<NodeId> Graph::Nodes() const {
  std::vector<NodeId> out;
  out.reserve(adjacency_.size());
  for (const auto& [u, _] : adjacency_) out.push_back(u);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [u, list] : adjacency_) {
    for (NodeId v : list) {
      if (u < v) out.push_back({u, v});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Graph::Audit() const {
  std::size_t half_edges = 0;
  for (const auto& [u, list] : adjacency_) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      NodeId v = list[i];
      if (v == u) {
        throw Error(ErrorCode::kInvariantViolation,
                    "self-loop at " + std::to_string(u));
      }
      if (i > 0 && list[i - 1] >= v) {
        throw Error(ErrorCode::kInvariantViolation,
                    "adjacency of " + std::to_string(u) +
                        " unsorted or duplicated");
      }
      if (!HasEdge(v, u)) {
        throw Error(ErrorCode::kInvariantViolation,
                    "asymmetric edge " + EdgeName(u, v));
      }
    }
    half_edges += list.size();
  }
  if (half_edges != 2 * edge_count_) {
    throw Error(ErrorCode::kInvariantViolation, "edge counter out of sync");
  }
}

}  // namespace dyperm
