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

#include "support/fixtures.hpp"

#include <atomic>
#include <unistd.h>

namespace fixtures {

Graph MakeGraph(const EdgeList& edges, const std::vector<NodeId>& isolated) {
  Graph g;
  auto ensure = [&g](NodeId u) {
    if (!g.HasNode(u)) g.AddNode(u);
  };
  for (NodeId u : isolated) ensure(u);
  for (auto [u, v] : edges) {
    ensure(u);
    ensure(v);
    g.AddEdge(u, v);
  }
  return g;
}

Partition MakePartition(const std::vector<std::vector<NodeId>>& groups) {
  Partition p;
  for (std::size_t c = 0; c < groups.size(); ++c) {
    for (NodeId u : groups[c]) p.Assign(u, c);
  }
  return p;
}

oracle::Adjacency ToAdjacency(const Graph& g) {
  oracle::Adjacency adj;
  for (NodeId u : g.Nodes()) {
    auto& row = adj[u];
    for (NodeId w : g.Neighbors(u)) row.insert(w);
  }
  return adj;
}

oracle::Labels ToLabels(const Partition& p) {
  oracle::Labels labels;
  for (NodeId u : p.Nodes()) labels[u] = p.CommunityOf(u);
  return labels;
}

Graph RandomGraph(std::size_t n, double p, dyperm::Rng& rng) {
  Graph g;
  for (NodeId u = 0; u < n; ++u) g.AddNode(u);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(p)) g.AddEdge(u, v);
    }
  }
  return g;
}

Partition RandomPartition(const Graph& g, std::size_t k, dyperm::Rng& rng) {
  Partition p;
  for (NodeId u : g.Nodes()) p.Assign(u, rng.UniformIndex(k));
  return p;
}

Graph TwoTriangles(bool bridged) {
  EdgeList edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  if (bridged) edges.emplace_back(2, 3);
  return MakeGraph(edges);
}

TempDir::TempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("dyperm_" + tag + "_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace fixtures
