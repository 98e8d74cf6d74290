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
#include <filesystem>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dyperm/graph.hpp"
#include "dyperm/partition.hpp"
#include "dyperm/random.hpp"
#include "support/oracle.hpp"

namespace fixtures {

using dyperm::CommunityId;
using dyperm::Graph;
using dyperm::NodeId;
using dyperm::Partition;

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

Graph MakeGraph(const EdgeList& edges, const std::vector<NodeId>& isolated = {});

// Community i of `groups` gets id i.
Partition MakePartition(const std::vector<std::vector<NodeId>>& groups);

oracle::Adjacency ToAdjacency(const Graph& g);
oracle::Labels ToLabels(const Partition& p);

// G(n, p) over nodes 0..n-1.
Graph RandomGraph(std::size_t n, double p, dyperm::Rng& rng);
// Uniform labels in [0, k).
Partition RandomPartition(const Graph& g, std::size_t k, dyperm::Rng& rng);

// Two triangles {0,1,2} and {3,4,5}, optionally bridged by (2,3).
Graph TwoTriangles(bool bridged);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string File(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace fixtures
