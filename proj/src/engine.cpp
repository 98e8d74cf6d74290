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

#include "dyperm/engine.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

#include "dyperm/error.hpp"
#include "dyperm/permanence.hpp"

namespace dyperm {

void ChangeSummary::Append(const ChangeSummary& other) {
  moves.insert(moves.end(), other.moves.begin(), other.moves.end());
  created.insert(created.end(), other.created.begin(), other.created.end());
  removed.insert(removed.end(), other.removed.begin(), other.removed.end());
}

Engine::Engine(Graph graph, Partition partition, EngineOptions options)
    : graph_(std::move(graph)),
      partition_(std::move(partition)),
      options_(std::move(options)) {
  graph_.Audit();
  partition_.Audit(&graph_);
  if (auto max_id = partition_.MaxCommunityId()) next_community_ = *max_id + 1;
  for (NodeId u : graph_.Nodes()) {
    double perm = VertexPerm(graph_, partition_, u);
    perm_cache_.emplace(u, perm);
    perm_sum_ += perm;
  }
}

double Engine::GraphPerm() const {
  if (graph_.Empty()) return 0.0;
  return perm_sum_ / static_cast<double>(graph_.NodeCount());
}

CommunityId Engine::AllocateCommunity() {
  ++stats_.communities_created;
  return next_community_++;
}

void Engine::MarkNeighborhood(NodeId u) {
  dirty_.push_back(u);
  for (NodeId w : graph_.Neighbors(u)) dirty_.push_back(w);
}

// An edge changes the inputs of both endpoints and of every common neighbor
// (whose internal-neighbor clustering may include the edge).
void Engine::MarkEdge(NodeId u, NodeId v) {
  dirty_.push_back(u);
  dirty_.push_back(v);
  auto a = graph_.Neighbors(u);
  auto b = graph_.Neighbors(v);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(dirty_));
}

void Engine::Refresh() {
  std::sort(dirty_.begin(), dirty_.end());
  dirty_.erase(std::unique(dirty_.begin(), dirty_.end()), dirty_.end());
  for (NodeId u : dirty_) {
    auto cached = perm_cache_.find(u);
    if (!graph_.HasNode(u)) {
      if (cached != perm_cache_.end()) {
        perm_sum_ -= cached->second;
        perm_cache_.erase(cached);
      }
      continue;
    }
    double perm = VertexPerm(graph_, partition_, u);
    if (cached == perm_cache_.end()) {
      perm_cache_.emplace(u, perm);
      perm_sum_ += perm;
    } else {
      perm_sum_ += perm - cached->second;
      cached->second = perm;
    }
  }
  dirty_.clear();
}

void Engine::MoveTracked(NodeId u, CommunityId to, ChangeSummary& summary) {
  CommunityId from = partition_.CommunityOf(u);
  if (from == to) return;
  if (!partition_.HasCommunity(to)) summary.created.push_back(to);
  if (partition_.Move(u, to)) summary.removed.push_back(from);
  summary.moves.push_back({u, from, to});
  ++stats_.nodes_moved;
  MarkNeighborhood(u);
}

void Engine::Isolate(NodeId u, ChangeSummary& summary) {
  MoveTracked(u, AllocateCommunity(), summary);
}

double Engine::PairSum(CommunityId a, CommunityId b) const {
  double sum = 0.0;
  if (partition_.HasCommunity(a)) sum += CommunityPermSum(graph_, partition_, a);
  if (partition_.HasCommunity(b)) sum += CommunityPermSum(graph_, partition_, b);
  return sum;
}

void Engine::Rollback(const std::vector<NodeMove>& journal) {
  for (auto it = journal.rbegin(); it != journal.rend(); ++it) {
    partition_.Move(it->node, it->from);
  }
}

ChangeSummary Engine::Apply(const AtomicEvent& e) {
  try {
    ChangeSummary summary;
    switch (e.kind) {
      case EventKind::kNewNode: summary = HandleNodeAddition(e.u); break;
      case EventKind::kRemoveNode: summary = HandleNodeDeletion(e.u); break;
      case EventKind::kNewEdge: summary = HandleEdgeAddition(e.u, e.v); break;
      case EventKind::kRemoveEdge:
        summary = HandleEdgeDeletion(e.u, e.v);
        break;
    }
    ++stats_.events;
    return summary;
  } catch (const Error& err) {
    if (e.line > 0) throw err.AtLine(e.line);
    throw;
  }
}

ChangeSummary Engine::HandleNodeAddition(NodeId u,
                                         std::span<const NodeId> neighbors) {
  if (graph_.HasNode(u)) {
    throw Error(ErrorCode::kDuplicateNode, "node " + std::to_string(u));
  }
  std::set<NodeId> distinct;
  for (NodeId v : neighbors) {
    if (v == u) throw Error(ErrorCode::kSelfLoop, "node " + std::to_string(u));
    if (!graph_.HasNode(v)) {
      throw Error(ErrorCode::kMissingNode, "node " + std::to_string(v));
    }
    if (!distinct.insert(v).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
  }

  ChangeSummary summary;
  CommunityId c = AllocateCommunity();
  graph_.AddNode(u);
  partition_.Assign(u, c);
  summary.created.push_back(c);
  MarkNode(u);
  Refresh();
  for (NodeId v : neighbors) summary.Append(HandleEdgeAddition(u, v));
  return summary;
}

ChangeSummary Engine::HandleNodeDeletion(NodeId u) {
  if (!graph_.HasNode(u)) {
    throw Error(ErrorCode::kMissingNode, "node " + std::to_string(u));
  }
  auto span = graph_.Neighbors(u);
  std::vector<NodeId> order(span.begin(), span.end());
  return HandleNodeDeletion(u, order);
}

ChangeSummary Engine::HandleNodeDeletion(NodeId u,
                                         std::span<const NodeId> edge_order) {
  if (!graph_.HasNode(u)) {
    throw Error(ErrorCode::kMissingNode, "node " + std::to_string(u));
  }
  std::vector<NodeId> sorted(edge_order.begin(), edge_order.end());
  std::sort(sorted.begin(), sorted.end());
  auto current = graph_.Neighbors(u);
  if (!std::equal(sorted.begin(), sorted.end(), current.begin(),
                  current.end())) {
    throw Error(ErrorCode::kConfigInvalid,
                "edge order is not a permutation of the incident edges of " +
                    std::to_string(u));
  }

  ChangeSummary summary;
  for (NodeId v : edge_order) summary.Append(HandleEdgeDeletion(u, v));

  CommunityId c = partition_.CommunityOf(u);
  graph_.RemoveNode(u);
  if (partition_.Unassign(u)) summary.removed.push_back(c);
  MarkNode(u);
  Refresh();
  return summary;
}

ChangeSummary Engine::HandleEdgeAddition(NodeId u, NodeId v) {
  graph_.AddEdge(u, v);
  const CommunityId cu = partition_.CommunityOf(u);
  const CommunityId cv = partition_.CommunityOf(v);
  MarkEdge(u, v);

  ChangeSummary summary;
  if (cu == cv) {
    Refresh();
    return summary;
  }

  MoveProposal forward = ProposeMove(u, cv);
  MoveProposal backward = ProposeMove(v, cu);
  const double eps = options_.epsilon;
  bool fwd_ok = forward.Improves(eps);
  bool bwd_ok = backward.Improves(eps);

  const MoveProposal* chosen = nullptr;
  if (fwd_ok && bwd_ok) {
    double gap = forward.perm_after - backward.perm_after;
    if (gap > eps) {
      chosen = &forward;
    } else if (gap < -eps) {
      chosen = &backward;
    }
  } else if (fwd_ok) {
    chosen = &forward;
  } else if (bwd_ok) {
    chosen = &backward;
  }

  if (options_.on_proposal) {
    options_.on_proposal(forward, chosen == &forward);
    options_.on_proposal(backward, chosen == &backward);
  }
  if (chosen != nullptr) {
    ++stats_.proposals_accepted;
    for (const NodeMove& m : chosen->moves) MoveTracked(m.node, m.to, summary);
  }
  Refresh();
  return summary;
}

MoveProposal Engine::ProposeMove(NodeId mover, CommunityId target) {
  if (!partition_.HasCommunity(target)) {
    throw Error(ErrorCode::kMissingCommunity,
                "community " + std::to_string(target));
  }
  const CommunityId source = partition_.CommunityOf(mover);
  if (source == target) {
    throw Error(ErrorCode::kConfigInvalid,
                "node " + std::to_string(mover) + " already in community " +
                    std::to_string(target));
  }
  ++stats_.proposals_evaluated;

  MoveProposal proposal;
  proposal.source = source;
  proposal.target = target;
  proposal.perm_before = PairSum(source, target);

  std::vector<NodeMove>& journal = proposal.moves;
  std::unordered_set<NodeId> visited{mover};
  std::deque<NodeId> frontier;
  auto enqueue_internal = [&](NodeId x) {
    for (NodeId w : graph_.Neighbors(x)) {
      if (!visited.contains(w) && partition_.CommunityOf(w) == source) {
        frontier.push_back(w);
      }
    }
  };

  enqueue_internal(mover);
  partition_.Move(mover, target);
  journal.push_back({mover, source, target});

  while (!frontier.empty()) {
    NodeId x = frontier.front();
    frontier.pop_front();
    if (!visited.insert(x).second) continue;
    double stay = VertexBreakdownIn(graph_, partition_, x, source).perm;
    double leave = VertexBreakdownIn(graph_, partition_, x, target).perm;
    if (leave > stay + options_.epsilon) {
      enqueue_internal(x);
      partition_.Move(x, target);
      journal.push_back({x, source, target});
    }
  }

  proposal.perm_after = PairSum(source, target);
  Rollback(journal);
  return proposal;
}

ChangeSummary Engine::HandleEdgeDeletion(NodeId u, NodeId v) {
  if (!graph_.HasEdge(u, v)) {
    graph_.RemoveEdge(u, v);  // throws the precise error
  }
  const std::size_t du = graph_.Degree(u);
  const std::size_t dv = graph_.Degree(v);
  const CommunityId cu = partition_.CommunityOf(u);
  const CommunityId cv = partition_.CommunityOf(v);

  graph_.RemoveEdge(u, v);
  MarkEdge(u, v);

  ChangeSummary summary;
  if (du == 1 && dv == 1) {
    Isolate(u, summary);
    Isolate(v, summary);
  } else if (du == 1) {
    Isolate(u, summary);
  } else if (dv == 1) {
    Isolate(v, summary);
  } else if (cu == cv) {
    summary.Append(IntraSplitTest(cu, u, v));
  }
  Refresh();
  return summary;
}

ChangeSummary Engine::IntraSplitTest(CommunityId c, NodeId u, NodeId v) {
  const auto& members = partition_.Members(c);
  if (!members.contains(u) || !members.contains(v)) {
    throw Error(ErrorCode::kConfigInvalid,
                "split endpoints must both belong to community " +
                    std::to_string(c));
  }

  std::unordered_set<NodeId> reached{u};
  std::deque<NodeId> queue{u};
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    for (NodeId w : graph_.Neighbors(x)) {
      if (partition_.CommunityOf(w) == c && reached.insert(w).second) {
        queue.push_back(w);
      }
    }
  }
  ChangeSummary summary;
  if (reached.contains(v)) return summary;

  std::vector<NodeId> detached;
  for (NodeId x : members) {
    if (!reached.contains(x)) detached.push_back(x);
  }

  const double unsplit = CommunityPermSum(graph_, partition_, c);
  const CommunityId fresh = next_community_;
  std::vector<NodeMove> journal;
  for (NodeId x : detached) {
    partition_.Move(x, fresh);
    journal.push_back({x, c, fresh});
  }
  const double split = PairSum(c, fresh);
  Rollback(journal);

  // Disconnected parts do not interact in any member's permanence, so the two
  // sums agree up to rounding; a tie splits.
  if (split >= unsplit - options_.epsilon) {
    CommunityId id = AllocateCommunity();
    for (NodeId x : detached) MoveTracked(x, id, summary);
    ++stats_.splits;
    Refresh();
  }
  return summary;
}

void Engine::Audit(double tolerance) const {
  graph_.Audit();
  partition_.Audit(&graph_);
  if (perm_cache_.size() != graph_.NodeCount()) {
    throw Error(ErrorCode::kInvariantViolation,
                "permanence cache size " + std::to_string(perm_cache_.size()) +
                    " != node count " + std::to_string(graph_.NodeCount()));
  }
  if (graph_.Empty()) return;
  double scratch = GraphPermanence(graph_, partition_).graph_perm;
  double maintained = GraphPerm();
  if (!(std::abs(scratch - maintained) <= tolerance)) {
    throw Error(ErrorCode::kInvariantViolation,
                "maintained graph permanence " + std::to_string(maintained) +
                    " differs from recomputation " + std::to_string(scratch));
  }
}

}  // namespace dyperm
