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

#include "dyperm/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dyperm/error.hpp"

namespace dyperm {
namespace {

// Sums in ascending order so the result does not depend on which partition
// came first.
double OrderedSum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

double Entropy(const std::map<CommunityId, std::size_t>& sizes, double n) {
  std::vector<double> terms;
  terms.reserve(sizes.size());
  for (const auto& [_, size] : sizes) {
    double s = static_cast<double>(size);
    terms.push_back(s / n * std::log(n / s));
  }
  return OrderedSum(std::move(terms));
}

double Pairs(std::size_t k) {
  return 0.5 * static_cast<double>(k) * static_cast<double>(k - (k > 0));
}

}  // namespace

ContingencyTable ContingencyTable::Build(const Partition& a,
                                         const Partition& b) {
  if (a.NodeCount() != b.NodeCount()) {
    throw Error(ErrorCode::kNodeSetMismatch,
                std::to_string(a.NodeCount()) + " vs " +
                    std::to_string(b.NodeCount()) + " nodes");
  }
  ContingencyTable t;
  for (NodeId u : a.Nodes()) {
    auto cb = b.FindCommunity(u);
    if (!cb) {
      throw Error(ErrorCode::kNodeSetMismatch,
                  "node " + std::to_string(u) + " missing from second partition");
    }
    CommunityId ca = a.CommunityOf(u);
    ++t.counts[{ca, *cb}];
    ++t.rows[ca];
    ++t.cols[*cb];
    ++t.n;
  }
  return t;
}

double Nmi(const ContingencyTable& t) {
  if (t.n == 0) return 1.0;
  const double n = static_cast<double>(t.n);
  const double ha = Entropy(t.rows, n);
  const double hb = Entropy(t.cols, n);
  const bool a_single = t.rows.size() <= 1;
  const bool b_single = t.cols.size() <= 1;
  if (a_single && b_single) return 1.0;
  if (a_single || b_single) return 0.0;

  std::vector<double> terms;
  terms.reserve(t.counts.size());
  for (const auto& [key, count] : t.counts) {
    double nij = static_cast<double>(count);
    double ai = static_cast<double>(t.rows.at(key.first));
    double bj = static_cast<double>(t.cols.at(key.second));
    terms.push_back(nij / n * std::log(n * nij / (ai * bj)));
  }
  double mi = OrderedSum(std::move(terms));
  double nmi = 2.0 * mi / (ha + hb);
  return std::clamp(nmi, 0.0, 1.0);
}

double Nmi(const Partition& a, const Partition& b) {
  return Nmi(ContingencyTable::Build(a, b));
}

double Ari(const ContingencyTable& t) {
  double index = 0.0, sum_a = 0.0, sum_b = 0.0;
  for (const auto& [_, count] : t.counts) index += Pairs(count);
  for (const auto& [_, size] : t.rows) sum_a += Pairs(size);
  for (const auto& [_, size] : t.cols) sum_b += Pairs(size);
  const double total = Pairs(t.n);
  if (total == 0.0) return 1.0;
  const double expected = sum_a * sum_b / total;
  const double maximum = 0.5 * (sum_a + sum_b);
  if (maximum == expected) return 1.0;
  return (index - expected) / (maximum - expected);
}

double Ari(const Partition& a, const Partition& b) {
  return Ari(ContingencyTable::Build(a, b));
}

EvalRecord EvaluateAgainstTruth(std::uint64_t timestamp,
                                const Partition& detected,
                                const Labeling& truth) {
  EvalRecord record;
  record.timestamp = timestamp;
  Labeling truth_kept;
  Partition detected_kept;
  std::size_t i = 0;
  for (NodeId u : detected.Nodes()) {
    while (i < truth.size() && truth[i].first < u) ++i;
    if (i < truth.size() && truth[i].first == u) {
      truth_kept.push_back(truth[i]);
      detected_kept.Assign(u, detected.CommunityOf(u));
    } else {
      ++record.skipped;
    }
  }
  record.scored = truth_kept.size();
  Partition truth_partition = PartitionFromLabels(truth_kept);
  auto table = ContingencyTable::Build(detected_kept, truth_partition);
  record.nmi = Nmi(table);
  record.ari = Ari(table);
  return record;
}

}  // namespace dyperm
