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
#include <map>
#include <utility>

#include "dyperm/io.hpp"
#include "dyperm/partition.hpp"

namespace dyperm {

// Joint label counts of two partitions over the same node set.
struct ContingencyTable {
  std::map<std::pair<CommunityId, CommunityId>, std::size_t> counts;
  std::map<CommunityId, std::size_t> rows;  // first partition
  std::map<CommunityId, std::size_t> cols;  // second partition
  std::size_t n = 0;

  // Throws kNodeSetMismatch unless both partitions cover the same nodes.
  static ContingencyTable Build(const Partition& a, const Partition& b);
};

// Normalized mutual information, 2 I(A;B) / (H(A) + H(B)), natural logs.
// Both single-cluster: 1. Exactly one single-cluster: 0.
double Nmi(const Partition& a, const Partition& b);
double Nmi(const ContingencyTable& t);

// Hubert-Arabie adjusted Rand index from pair counts. Defined as 1 when the
// expected index equals the maximum index (including n < 2).
double Ari(const Partition& a, const Partition& b);
double Ari(const ContingencyTable& t);

struct EvalRecord {
  std::uint64_t timestamp = 0;
  double nmi = 0.0;
  double ari = 0.0;
  // Detected nodes missing from the truth labels, left out of scoring.
  std::size_t skipped = 0;
  // Nodes scored.
  std::size_t scored = 0;
};

// Scores `detected` against raw truth labels on the nodes present in both.
// Truth nodes absent from `detected` are ignored.
EvalRecord EvaluateAgainstTruth(std::uint64_t timestamp,
                                const Partition& detected,
                                const Labeling& truth);

}  // namespace dyperm
