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

#include "support/oracle.hpp"

#include <cmath>

namespace oracle {

Adjacency MakeAdjacency(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges,
    const std::vector<std::uint64_t>& isolated) {
  Adjacency adj;
  for (auto u : isolated) adj[u];
  for (auto [u, v] : edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return adj;
}

VertexScore Score(const Adjacency& adj, const Labels& labels,
                  std::uint64_t u) {
  VertexScore s;
  const auto& nbrs = adj.at(u);
  const std::uint64_t own = labels.at(u);
  std::vector<std::uint64_t> internal;
  std::map<std::uint64_t, long> external;
  for (auto w : nbrs) {
    if (labels.at(w) == own) {
      internal.push_back(w);
    } else {
      ++external[labels.at(w)];
    }
  }
  s.degree = static_cast<long>(nbrs.size());
  s.internal = static_cast<long>(internal.size());
  for (const auto& [c, count] : external) {
    if (count > s.e_max) s.e_max = count;
  }
  for (std::size_t i = 0; i < internal.size(); ++i) {
    for (std::size_t j = i + 1; j < internal.size(); ++j) {
      if (adj.at(internal[i]).count(internal[j])) ++s.e_neig;
    }
  }
  if (s.internal >= 2) {
    s.c_in = static_cast<double>(s.e_neig) /
             (static_cast<double>(s.internal) * (s.internal - 1) / 2.0);
  }
  if (s.degree == 0) {
    s.perm = 0.0;
  } else if (s.e_max == 0) {
    s.perm = static_cast<double>(s.internal) / s.degree;
  } else {
    s.perm = static_cast<double>(s.internal) /
                 (static_cast<double>(s.e_max) * s.degree) -
             (1.0 - s.c_in);
  }
  return s;
}

double CommunitySum(const Adjacency& adj, const Labels& labels,
                    std::uint64_t community) {
  double sum = 0.0;
  for (const auto& [u, c] : labels) {
    if (c == community) sum += Score(adj, labels, u).perm;
  }
  return sum;
}

double MeanPerm(const Adjacency& adj, const Labels& labels) {
  double sum = 0.0;
  for (const auto& [u, _] : adj) sum += Score(adj, labels, u).perm;
  return sum / static_cast<double>(adj.size());
}

double Nmi(const std::vector<int>& a, const std::vector<int>& b) {
  const double n = static_cast<double>(a.size());
  std::map<int, double> ca, cb;
  std::map<std::pair<int, int>, double> joint;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca[a[i]] += 1;
    cb[b[i]] += 1;
    joint[{a[i], b[i]}] += 1;
  }
  auto entropy = [n](const std::map<int, double>& m) {
    double h = 0.0;
    for (const auto& [_, c] : m) h -= (c / n) * std::log(c / n);
    return h;
  };
  const double ha = entropy(ca), hb = entropy(cb);
  double mi = 0.0;
  for (const auto& [key, c] : joint) {
    mi += (c / n) * std::log((c * n) / (ca[key.first] * cb[key.second]));
  }
  if (ha == 0.0 && hb == 0.0) return 1.0;
  return 2.0 * mi / (ha + hb);
}

double AriByPairs(const std::vector<int>& a, const std::vector<int>& b) {
  // Pair-confusion counts: both same, same in a only, same in b only, neither.
  double ss = 0, sd = 0, ds = 0, dd = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const bool sa = a[i] == a[j], sb = b[i] == b[j];
      if (sa && sb) {
        ++ss;
      } else if (sa) {
        ++sd;
      } else if (sb) {
        ++ds;
      } else {
        ++dd;
      }
    }
  }
  const double num = 2.0 * (ss * dd - sd * ds);
  const double den = (ss + sd) * (sd + dd) + (ss + ds) * (ds + dd);
  if (den == 0.0) return 1.0;
  return num / den;
}

}  // namespace oracle
