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
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dyperm/event.hpp"
#include "dyperm/graph.hpp"
#include "dyperm/partition.hpp"
#include "dyperm/types.hpp"

namespace dyperm {

struct NodeMove {
  NodeId node = 0;
  CommunityId from = 0;
  CommunityId to = 0;

  friend bool operator==(const NodeMove&, const NodeMove&) = default;
};

// What one handler call did to the partition, in application order.
struct ChangeSummary {
  std::vector<NodeMove> moves;
  std::vector<CommunityId> created;
  std::vector<CommunityId> removed;

  bool Empty() const {
    return moves.empty() && created.empty() && removed.empty();
  }
  void Append(const ChangeSummary& other);
};

// A candidate reassignment produced by propagating `moves[0].node` into
// `target`. Both sums range over the same pair {source, target}.
struct MoveProposal {
  std::vector<NodeMove> moves;
  CommunityId source = 0;
  CommunityId target = 0;
  double perm_before = 0.0;
  double perm_after = 0.0;

  bool Improves(double epsilon) const {
    return perm_after > perm_before + epsilon;
  }
};

struct EngineStats {
  std::uint64_t events = 0;
  std::uint64_t nodes_moved = 0;
  std::uint64_t communities_created = 0;
  std::uint64_t splits = 0;
  std::uint64_t proposals_evaluated = 0;
  std::uint64_t proposals_accepted = 0;
};

struct EngineOptions {
  double epsilon = kPermEpsilon;
  // Called for every evaluated proposal with the acceptance decision.
  std::function<void(const MoveProposal&, bool accepted)> on_proposal;
};

// Incremental permanence maximizer. Owns one (graph, partition) pair and
// updates it event by event, touching only the communities of the endpoints.
// The engine keeps a running sum of vertex permanences, refreshed for exactly
// the vertices whose permanence inputs changed.
//
// Not thread-safe; one writer per instance.
class Engine {
 public:
  Engine() = default;
  // `partition` must cover exactly the nodes of `graph`. Fresh community ids
  // start above the largest id already in use.
  Engine(Graph graph, Partition partition, EngineOptions options = {});

  // Dispatches one atomic event. Errors carry the event's stream line.
  ChangeSummary Apply(const AtomicEvent& e);

  // Inserts `u` as a fresh singleton, then replays its edges in the given
  // order as edge additions.
  ChangeSummary HandleNodeAddition(NodeId u,
                                   std::span<const NodeId> neighbors = {});
  // Deletes u's edges one at a time (ascending neighbor id, or `edge_order`),
  // then removes the node.
  ChangeSummary HandleNodeDeletion(NodeId u);
  ChangeSummary HandleNodeDeletion(NodeId u,
                                   std::span<const NodeId> edge_order);
  ChangeSummary HandleEdgeAddition(NodeId u, NodeId v);
  ChangeSummary HandleEdgeDeletion(NodeId u, NodeId v);

  // Moves `mover` into `target` and lets its former internal neighbors follow
  // breadth-first while each one's own permanence strictly rises. The state is
  // rolled back before returning.
  MoveProposal ProposeMove(NodeId mover, CommunityId target);

  // After the intra-community edge (u, v) of `c` has been removed: if u and v
  // are no longer connected inside `c`, the part not containing u is split off
  // into a fresh community unless that lowers the community permanence sum.
  ChangeSummary IntraSplitTest(CommunityId c, NodeId u, NodeId v);

  const Graph& graph() const { return graph_; }
  const Partition& partition() const { return partition_; }
  const EngineStats& stats() const { return stats_; }

  // Maintained mean vertex permanence; 0 for an empty graph.
  double GraphPerm() const;
  double PermSum() const { return perm_sum_; }
  CommunityId NextCommunityId() const { return next_community_; }

  // Full structural audit plus a from-scratch permanence reconciliation.
  // Throws Error(kInvariantViolation) on any mismatch beyond `tolerance`.
  void Audit(double tolerance = 1e-9) const;

 private:
  CommunityId AllocateCommunity();
  void MoveTracked(NodeId u, CommunityId to, ChangeSummary& summary);
  void Isolate(NodeId u, ChangeSummary& summary);
  double PairSum(CommunityId a, CommunityId b) const;
  void Rollback(const std::vector<NodeMove>& journal);

  void MarkNode(NodeId u) { dirty_.push_back(u); }
  void MarkNeighborhood(NodeId u);
  void MarkEdge(NodeId u, NodeId v);
  void Refresh();

  Graph graph_;
  Partition partition_;
  EngineOptions options_;
  EngineStats stats_;
  CommunityId next_community_ = 0;

  std::unordered_map<NodeId, double> perm_cache_;
  double perm_sum_ = 0.0;
  std::vector<NodeId> dirty_;
};

}  // namespace dyperm
