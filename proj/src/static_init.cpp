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

#include "dyperm/static_init.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "dyperm/error.hpp"
#include "dyperm/permanence.hpp"
#include "dyperm/random.hpp"

namespace dyperm {
namespace {

// Compressed adjacency over dense indices; index order equals id order.
struct DenseGraph {
  std::vector<NodeId> ids;
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> targets;

  explicit DenseGraph(const Graph& g) : ids(g.Nodes()) {
    std::unordered_map<NodeId, std::uint32_t> index;
    index.reserve(ids.size());
    for (std::uint32_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);
    offsets.reserve(ids.size() + 1);
    offsets.push_back(0);
    targets.reserve(2 * g.EdgeCount());
    for (NodeId u : ids) {
      for (NodeId v : g.Neighbors(u)) targets.push_back(index.at(v));
      offsets.push_back(targets.size());
    }
  }

  std::size_t size() const { return ids.size(); }
  std::size_t degree(std::size_t i) const { return offsets[i + 1] - offsets[i]; }
  const std::uint32_t* begin(std::size_t i) const {
    return targets.data() + offsets[i];
  }
  const std::uint32_t* end(std::size_t i) const {
    return targets.data() + offsets[i + 1];
  }
};

class LocalMover {
 public:
  explicit LocalMover(const DenseGraph& g)
      : g_(g), count_(g.size(), 0), neig_(g.size(), 0), stamp_(g.size(), 0) {}

  std::vector<std::uint32_t> Run(const InitConfig& cfg, std::uint64_t seed) {
    const std::size_t n = g_.size();
    std::vector<std::uint32_t> label(n);
    std::iota(label.begin(), label.end(), 0u);
    std::vector<std::uint32_t> order(label);
    Rng rng(seed);
    rng.Shuffle(order);

    for (std::size_t sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
      bool moved = false;
      for (std::uint32_t x : order) {
        std::uint32_t best = BestCommunity(x, label, cfg.min_gain);
        if (best != label[x]) {
          label[x] = best;
          moved = true;
        }
      }
      if (!moved) break;
    }
    return label;
  }

  double PermSum(const std::vector<std::uint32_t>& label) {
    double sum = 0.0;
    for (std::uint32_t x = 0; x < g_.size(); ++x) {
      if (g_.degree(x) == 0) continue;
      Tally(x, label);
      sum += PermIn(x, label[x]);
      Clear();
    }
    return sum;
  }

 private:
  // Counts, per neighboring community, the neighbors of x and the edges among
  // them.
  void Tally(std::uint32_t x, const std::vector<std::uint32_t>& label) {
    ++generation_;
    for (const auto* a = g_.begin(x); a != g_.end(x); ++a) {
      stamp_[*a] = generation_;
      std::uint32_t c = label[*a];
      if (count_[c]++ == 0) touched_.push_back(c);
    }
    for (const auto* a = g_.begin(x); a != g_.end(x); ++a) {
      std::uint32_t c = label[*a];
      for (const auto* b = g_.begin(*a); b != g_.end(*a); ++b) {
        if (*b > *a && stamp_[*b] == generation_ && label[*b] == c) ++neig_[c];
      }
    }
    std::sort(touched_.begin(), touched_.end());
    top_label_ = second_count_ = top_count_ = 0;
    bool have_top = false;
    for (std::uint32_t c : touched_) {
      std::size_t k = count_[c];
      if (!have_top || k > top_count_) {
        second_count_ = have_top ? top_count_ : 0;
        top_count_ = k;
        top_label_ = c;
        have_top = true;
      } else if (k > second_count_) {
        second_count_ = k;
      }
    }
    degree_ = g_.degree(x);
  }

  double PermIn(std::uint32_t /*x*/, std::uint32_t c) const {
    std::size_t internal = count_[c];
    std::size_t e_max = (c == top_label_) ? second_count_ : top_count_;
    return PermanenceValue(internal, degree_, e_max, neig_[c]);
  }

  void Clear() {
    for (std::uint32_t c : touched_) count_[c] = neig_[c] = 0;
    touched_.clear();
  }

  std::uint32_t BestCommunity(std::uint32_t x,
                              const std::vector<std::uint32_t>& label,
                              double min_gain) {
    if (g_.degree(x) == 0) return label[x];
    Tally(x, label);
    const std::uint32_t current = label[x];
    const double stay = PermIn(x, current);
    std::uint32_t best = current;
    double best_perm = stay;
    for (std::uint32_t c : touched_) {
      if (c == current) continue;
      double p = PermIn(x, c);
      if (p > best_perm) {
        best_perm = p;
        best = c;
      }
    }
    Clear();
    return best_perm - stay > min_gain ? best : current;
  }

  const DenseGraph& g_;
  std::vector<std::size_t> count_;
  std::vector<std::size_t> neig_;
  std::vector<std::uint64_t> stamp_;
  std::vector<std::uint32_t> touched_;
  std::uint64_t generation_ = 0;
  std::size_t degree_ = 0;
  std::uint32_t top_label_ = 0;
  std::size_t top_count_ = 0;
  std::size_t second_count_ = 0;
};

}  // namespace

Partition StaticMaximize(const Graph& g, const InitConfig& cfg) {
  if (g.Empty()) throw Error(ErrorCode::kEmptyGraph, "graph has no nodes");
  if (cfg.max_sweeps == 0) {
    throw Error(ErrorCode::kConfigInvalid, "max_sweeps must be at least 1");
  }
  if (cfg.restarts == 0) {
    throw Error(ErrorCode::kConfigInvalid, "restarts must be at least 1");
  }

  DenseGraph dense(g);
  LocalMover mover(dense);
  std::vector<std::uint32_t> best;
  double best_sum = 0.0;
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    auto label = mover.Run(cfg, cfg.seed + r);
    double sum = cfg.restarts > 1 ? mover.PermSum(label) : 0.0;
    if (r == 0 || sum > best_sum) {
      best = std::move(label);
      best_sum = sum;
    }
  }

  // Renumber communities by their smallest member.
  std::vector<CommunityId> remap(dense.size(), CommunityId(-1));
  CommunityId next = 0;
  Partition p;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    auto& id = remap[best[i]];
    if (id == CommunityId(-1)) id = next++;
    p.Assign(dense.ids[i], id);
  }
  return p;
}

}  // namespace dyperm
