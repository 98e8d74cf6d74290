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

#include "dyperm/workload.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "dyperm/error.hpp"
#include "dyperm/random.hpp"

namespace dyperm {
namespace {

constexpr std::size_t kMaxDrawAttempts = 1000;

// Edge set with O(log E) lookup and O(1) uniform sampling.
class EdgePool {
 public:
  bool Contains(const Edge& e) const { return index_.contains(e); }
  std::size_t size() const { return edges_.size(); }

  void Insert(const Edge& e) {
    index_.emplace(e, edges_.size());
    edges_.push_back(e);
  }

  void Erase(const Edge& e) {
    auto it = index_.find(e);
    std::size_t slot = it->second;
    index_.erase(it);
    if (slot + 1 != edges_.size()) {
      edges_[slot] = edges_.back();
      index_[edges_[slot]] = slot;
    }
    edges_.pop_back();
  }

  const Edge& Sample(Rng& rng) const {
    return edges_[rng.UniformIndex(edges_.size())];
  }

 private:
  std::vector<Edge> edges_;
  std::map<Edge, std::size_t> index_;
};

class PlantedState {
 public:
  PlantedState(const GenConfig& cfg, Rng& rng) : cfg_(cfg), rng_(rng) {
    label_.resize(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i) label_[i] = i % cfg.k;
    rng_.Shuffle(label_);
    members_.assign(cfg.k, {});
    for (std::size_t i = 0; i < cfg.n; ++i) members_[label_[i]].push_back(i);
    for (std::size_t i = 0; i < cfg.n; ++i) graph_.AddNode(i);
  }

  void DrawInitialEdges() {
    const double size = static_cast<double>(cfg_.n) / cfg_.k;
    const double p_in =
        size > 1.0 ? (1.0 - cfg_.mu) * cfg_.avg_degree / (size - 1.0) : 0.0;
    const double outside = static_cast<double>(cfg_.n) - size;
    const double p_out =
        outside > 0.0 ? cfg_.mu * cfg_.avg_degree / outside : 0.0;
    for (NodeId u = 0; u < cfg_.n; ++u) {
      for (NodeId v = u + 1; v < cfg_.n; ++v) {
        double p = label_[u] == label_[v] ? p_in : p_out;
        if (rng_.Bernoulli(p)) Connect(u, v);
      }
    }
  }

  // Partner for a new edge at u: inside u's planted community with
  // probability 1 - mu, otherwise anywhere outside it.
  bool DrawPartner(NodeId u, NodeId& partner) {
    const bool inside = cfg_.k == 1 || !rng_.Bernoulli(cfg_.mu);
    for (std::size_t attempt = 0; attempt < kMaxDrawAttempts; ++attempt) {
      NodeId v;
      if (inside) {
        const auto& pool = members_[label_[u]];
        v = pool[rng_.UniformIndex(pool.size())];
      } else {
        v = rng_.UniformIndex(cfg_.n);
        if (label_[v] == label_[u]) continue;
      }
      if (v != u && !graph_.HasEdge(u, v)) {
        partner = v;
        return true;
      }
    }
    return false;
  }

  void Connect(NodeId u, NodeId v) {
    graph_.AddEdge(u, v);
    pool_.Insert(Edge::Canonical(u, v));
  }

  void Disconnect(NodeId u, NodeId v) {
    graph_.RemoveEdge(u, v);
    pool_.Erase(Edge::Canonical(u, v));
  }

  void Step(std::uint64_t t, std::vector<AtomicEvent>& out) {
    const auto switchers = static_cast<std::size_t>(
        std::llround(cfg_.churn * static_cast<double>(cfg_.n) / 2.0));
    if (cfg_.k > 1) {
      std::vector<NodeId> order(cfg_.n);
      for (NodeId i = 0; i < cfg_.n; ++i) order[i] = i;
      rng_.Shuffle(order);
      for (std::size_t s = 0; s < std::min(switchers, cfg_.n); ++s) {
        Relocate(order[s], t, out);
      }
    }

    const auto rewired = static_cast<std::size_t>(
        std::llround(cfg_.churn * static_cast<double>(pool_.size())));
    for (std::size_t i = 0; i < rewired && pool_.size() > 0; ++i) {
      Edge e = pool_.Sample(rng_);
      Disconnect(e.first, e.second);
      out.push_back(AtomicEvent::RemoveEdge(t, e.first, e.second));
    }
    for (std::size_t i = 0; i < rewired; ++i) {
      for (std::size_t attempt = 0; attempt < kMaxDrawAttempts; ++attempt) {
        NodeId u = rng_.UniformIndex(cfg_.n);
        NodeId v;
        if (DrawPartner(u, v)) {
          Connect(u, v);
          out.push_back(AtomicEvent::NewEdge(t, u, v));
          break;
        }
      }
    }
  }

  Labeling Labels() const {
    Labeling out;
    out.reserve(cfg_.n);
    for (NodeId u = 0; u < cfg_.n; ++u) out.emplace_back(u, label_[u]);
    return out;
  }

  const Graph& graph() const { return graph_; }

 private:
  // Moves u to another planted community and redraws its edges, keeping its
  // degree.
  void Relocate(NodeId u, std::uint64_t t, std::vector<AtomicEvent>& out) {
    std::size_t old_label = label_[u];
    std::size_t new_label = rng_.UniformIndex(cfg_.k - 1);
    if (new_label >= old_label) ++new_label;
    auto& old_members = members_[old_label];
    if (old_members.size() <= 1) return;
    old_members.erase(std::find(old_members.begin(), old_members.end(), u));
    members_[new_label].push_back(u);
    label_[u] = new_label;

    auto span = graph_.Neighbors(u);
    std::vector<NodeId> old_neighbors(span.begin(), span.end());
    for (NodeId v : old_neighbors) {
      Disconnect(u, v);
      out.push_back(AtomicEvent::RemoveEdge(t, u, v));
    }
    for (std::size_t i = 0; i < old_neighbors.size(); ++i) {
      NodeId v;
      if (!DrawPartner(u, v)) break;
      Connect(u, v);
      out.push_back(AtomicEvent::NewEdge(t, u, v));
    }
  }

  const GenConfig& cfg_;
  Rng& rng_;
  std::vector<std::size_t> label_;
  std::vector<std::vector<NodeId>> members_;
  Graph graph_;
  EdgePool pool_;
};

}  // namespace

void Validate(const GenConfig& cfg) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::kConfigInvalid, why);
  };
  if (cfg.k < 1) fail("k must be at least 1");
  if (cfg.n < cfg.k) fail("n must be at least k");
  if (!(cfg.mu >= 0.0 && cfg.mu < 1.0)) fail("mu must lie in [0, 1)");
  if (!(cfg.churn >= 0.0 && cfg.churn < 1.0)) fail("churn must lie in [0, 1)");
  if (!(cfg.avg_degree >= 0.0 && cfg.avg_degree < static_cast<double>(cfg.n))) {
    fail("avg_degree must lie in [0, n)");
  }
  const double size = static_cast<double>(cfg.n) / cfg.k;
  if ((1.0 - cfg.mu) * cfg.avg_degree > size - 1.0 + 1e-9) {
    fail("communities too small for the requested internal degree");
  }
  if (cfg.k == 1 && cfg.mu > 0.0) fail("mu must be 0 with a single community");
}

PlantedGraph GeneratePlanted(const GenConfig& cfg) {
  Validate(cfg);
  Rng rng(cfg.seed);
  PlantedState state(cfg, rng);
  state.DrawInitialEdges();
  return {ToSnapshot(state.graph()), state.Labels()};
}

DynamicWorkload GenerateDynamic(const GenConfig& cfg) {
  Validate(cfg);
  Rng rng(cfg.seed);
  PlantedState state(cfg, rng);
  state.DrawInitialEdges();

  DynamicWorkload w;
  w.initial = ToSnapshot(state.graph());
  w.truth.push_back(state.Labels());
  for (std::uint64_t t = 1; t <= cfg.steps; ++t) {
    state.Step(t, w.events);
    w.truth.push_back(state.Labels());
  }
  w.final = ToSnapshot(state.graph());
  return w;
}

std::vector<AtomicEvent> SnapshotDiff(const Snapshot& a, const Snapshot& b,
                                      std::uint64_t timestamp) {
  std::vector<AtomicEvent> out;
  for (NodeId u : b.nodes) {
    if (!a.nodes.contains(u)) out.push_back(AtomicEvent::NewNode(timestamp, u));
  }
  for (const Edge& e : b.edges) {
    if (!a.edges.contains(e)) {
      out.push_back(AtomicEvent::NewEdge(timestamp, e.first, e.second));
    }
  }
  for (const Edge& e : a.edges) {
    if (!b.edges.contains(e)) {
      out.push_back(AtomicEvent::RemoveEdge(timestamp, e.first, e.second));
    }
  }
  for (NodeId u : a.nodes) {
    if (!b.nodes.contains(u)) {
      out.push_back(AtomicEvent::RemoveNode(timestamp, u));
    }
  }
  return out;
}

std::vector<AtomicEvent> RandomEventStream(const Graph& start,
                                           std::size_t count,
                                           std::uint64_t seed) {
  Rng rng(seed);
  Graph g = start;
  std::vector<NodeId> retired;
  NodeId next_id = 0;
  for (NodeId u : g.Nodes()) next_id = std::max(next_id, u + 1);

  std::vector<AtomicEvent> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::uint64_t t = out.size() + 1;
    const double roll = rng.UniformReal();
    auto nodes = g.Nodes();

    if (roll < 0.10 || nodes.size() < 2) {
      NodeId u;
      if (!retired.empty() && rng.Bernoulli(0.5)) {
        std::size_t pick = rng.UniformIndex(retired.size());
        u = retired[pick];
        retired.erase(retired.begin() + static_cast<std::ptrdiff_t>(pick));
      } else {
        u = next_id++;
      }
      out.push_back(AtomicEvent::NewNode(t, u));
    } else if (roll < 0.18) {
      NodeId u = nodes[rng.UniformIndex(nodes.size())];
      retired.push_back(u);
      out.push_back(AtomicEvent::RemoveNode(t, u));
    } else if (roll < 0.58 || g.EdgeCount() == 0) {
      NodeId u = nodes[rng.UniformIndex(nodes.size())];
      NodeId v = u;
      auto nu = g.Neighbors(u);
      if (!nu.empty() && rng.Bernoulli(0.5)) {
        NodeId w = nu[rng.UniformIndex(nu.size())];
        auto nw = g.Neighbors(w);
        v = nw[rng.UniformIndex(nw.size())];
      }
      if (v == u || g.HasEdge(u, v)) {
        v = nodes[rng.UniformIndex(nodes.size())];
      }
      if (v == u || g.HasEdge(u, v)) continue;
      out.push_back(AtomicEvent::NewEdge(t, u, v));
    } else {
      auto edges = g.Edges();
      const Edge& e = edges[rng.UniformIndex(edges.size())];
      out.push_back(AtomicEvent::RemoveEdge(t, e.first, e.second));
    }
    ApplyToGraph(g, out.back());
  }
  return out;
}

}  // namespace dyperm
