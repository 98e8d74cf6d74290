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

#include "dyperm/partition.hpp"

#include <algorithm>
#include <string>

#include "dyperm/error.hpp"
#include "dyperm/graph.hpp"

namespace dyperm {

void Partition::Assign(NodeId u, CommunityId c) {
  auto [it, inserted] = assignment_.try_emplace(u, c);
  if (!inserted) {
    throw Error(ErrorCode::kDuplicateNode,
                "node " + std::to_string(u) + " already assigned");
  }
  members_[c].insert(u);
}

bool Partition::Unassign(NodeId u) {
  auto it = assignment_.find(u);
  if (it == assignment_.end()) {
    throw Error(ErrorCode::kMissingNode, "node " + std::to_string(u));
  }
  auto members = members_.find(it->second);
  members->second.erase(u);
  assignment_.erase(it);
  if (members->second.empty()) {
    members_.erase(members);
    return true;
  }
  return false;
}

bool Partition::Move(NodeId u, CommunityId c) {
  auto it = assignment_.find(u);
  if (it == assignment_.end()) {
    throw Error(ErrorCode::kMissingNode, "node " + std::to_string(u));
  }
  if (it->second == c) return false;
  auto source = members_.find(it->second);
  source->second.erase(u);
  bool emptied = source->second.empty();
  if (emptied) members_.erase(source);
  members_[c].insert(u);
  it->second = c;
  return emptied;
}

CommunityId Partition::CommunityOf(NodeId u) const {
  auto it = assignment_.find(u);
  if (it == assignment_.end()) {
    throw Error(ErrorCode::kMissingNode, "node " + std::to_string(u));
  }
  return it->second;
}

std::optional<CommunityId> Partition::FindCommunity(NodeId u) const {
  auto it = assignment_.find(u);
  if (it == assignment_.end()) return std::nullopt;
  return it->second;
}

const std::set<NodeId>& Partition::Members(CommunityId c) const {
  auto it = members_.find(c);
  if (it == members_.end()) {
    throw Error(ErrorCode::kMissingCommunity, "community " + std::to_string(c));
  }
  return it->second;
}

std::size_t Partition::CommunitySize(CommunityId c) const {
  auto it = members_.find(c);
  return it == members_.end() ? 0 : it->second.size();
}

std::vector<CommunityId> Partition::Communities() const {
  std::vector<CommunityId> out;
  out.reserve(members_.size());
  for (const auto& [c, _] : members_) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> Partition::Nodes() const {
  std::vector<NodeId> out;
  out.reserve(assignment_.size());
  for (const auto& [u, _] : assignment_) out.push_back(u);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CommunityId> Partition::MaxCommunityId() const {
  std::optional<CommunityId> best;
  for (const auto& [c, _] : members_) {
    if (!best || c > *best) best = c;
  }
  return best;
}

void Partition::Audit(const Graph* graph) const {
  std::size_t listed = 0;
  for (const auto& [c, nodes] : members_) {
    if (nodes.empty()) {
      throw Error(ErrorCode::kInvariantViolation,
                  "empty community " + std::to_string(c));
    }
    for (NodeId u : nodes) {
      auto it = assignment_.find(u);
      if (it == assignment_.end() || it->second != c) {
        throw Error(ErrorCode::kInvariantViolation,
                    "node " + std::to_string(u) + " listed under community " +
                        std::to_string(c) + " but assigned elsewhere");
      }
    }
    listed += nodes.size();
  }
  if (listed != assignment_.size()) {
    throw Error(ErrorCode::kInvariantViolation,
                "assignment and member lists disagree");
  }
  if (graph != nullptr) {
    if (graph->NodeCount() != assignment_.size()) {
      throw Error(ErrorCode::kInvariantViolation,
                  "partition does not cover the graph");
    }
    for (const auto& [u, _] : assignment_) {
      if (!graph->HasNode(u)) {
        throw Error(ErrorCode::kInvariantViolation,
                    "assigned node " + std::to_string(u) + " not in graph");
      }
    }
  }
}

}  // namespace dyperm
