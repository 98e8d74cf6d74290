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
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "dyperm/types.hpp"

namespace dyperm {

class Graph;

// Bidirectional node <-> community assignment. Communities exist exactly while
// they have members; emptied communities are erased immediately.
class Partition {
 public:
  Partition() = default;

  // Assigns a currently unassigned node.
  void Assign(NodeId u, CommunityId c);
  // Drops `u`; returns true if its community became empty and was erased.
  bool Unassign(NodeId u);
  // Moves an assigned node to `c`, creating `c` if needed. Moving a node to its
  // own community is a no-op. Returns true if the source community emptied.
  bool Move(NodeId u, CommunityId c);

  bool Contains(NodeId u) const { return assignment_.contains(u); }
  bool HasCommunity(CommunityId c) const { return members_.contains(c); }
  CommunityId CommunityOf(NodeId u) const;
  std::optional<CommunityId> FindCommunity(NodeId u) const;
  const std::set<NodeId>& Members(CommunityId c) const;
  std::size_t CommunitySize(CommunityId c) const;

  std::size_t NodeCount() const { return assignment_.size(); }
  std::size_t CommunityCount() const { return members_.size(); }
  std::vector<CommunityId> Communities() const;
  std::vector<NodeId> Nodes() const;
  std::optional<CommunityId> MaxCommunityId() const;

  // Throws kInvariantViolation unless assignment/members are exact inverses,
  // no community is empty, and (when `graph` is given) the assigned node set
  // equals the graph's node set.
  void Audit(const Graph* graph = nullptr) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.assignment_ == b.assignment_ && a.members_ == b.members_;
  }

 private:
  std::unordered_map<NodeId, CommunityId> assignment_;
  std::unordered_map<CommunityId, std::set<NodeId>> members_;
};

}  // namespace dyperm
