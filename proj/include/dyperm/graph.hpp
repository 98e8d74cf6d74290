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
#include <unordered_map>
#include <vector>

#include "dyperm/types.hpp"

namespace dyperm {

// Dynamic undirected simple graph. Adjacency lists are kept sorted so that
// iteration order never depends on insertion history.
class Graph {
 public:
  Graph() = default;

  void AddNode(NodeId u);
  // Removes `u` and every incident edge; returns the removed edges in
  // ascending order.
  std::vector<Edge> RemoveNode(NodeId u);
  void AddEdge(NodeId u, NodeId v);
  void RemoveEdge(NodeId u, NodeId v);

  bool HasNode(NodeId u) const { return adjacency_.contains(u); }
  bool HasEdge(NodeId u, NodeId v) const;
  std::size_t Degree(NodeId u) const { return Neighbors(u).size(); }
  std::span<const NodeId> Neighbors(NodeId u) const;

  std::size_t NodeCount() const { return adjacency_.size(); }
  std::size_t EdgeCount() const { return edge_count_; }
  bool Empty() const { return adjacency_.empty(); }

  // Ascending node ids.
  std::vector<NodeId> Nodes() const;
  // Ascending canonical edges.
  std::vector<Edge> Edges() const;

  // Walks the whole structure and throws kInvariantViolation if adjacency is
  // asymmetric, unsorted, contains a self-loop or a duplicate, or the edge
  // counter disagrees with the lists.
  void Audit() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edge_count_ == b.edge_count_ && a.adjacency_ == b.adjacency_;
  }

 private:
  const std::vector<NodeId>& ListOf(NodeId u) const;

  std::unordered_map<NodeId, std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

}  // namespace dyperm
