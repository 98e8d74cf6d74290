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
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dyperm/event.hpp"
#include "dyperm/graph.hpp"
#include "dyperm/partition.hpp"
#include "dyperm/types.hpp"

// Flat-file formats. All three share the same lexical rules: whitespace
// separated non-negative integers, blank lines and lines starting with '#'
// ignored. Parse failures throw Error(kParseError) carrying the line number.
//
//   edge list    `u v` per line; a line holding a single id declares an
//                isolated node
//   communities  `node community` per line
//   events       `t AN u` | `t RN u` | `t AE u v` | `t RE u v`

namespace dyperm {

struct Snapshot {
  std::set<NodeId> nodes;
  std::set<Edge> edges;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

// Node -> raw community label, sorted by node.
using Labeling = std::vector<std::pair<NodeId, std::uint64_t>>;

Snapshot ParseEdgeList(std::istream& in);
Snapshot ReadEdgeList(const std::string& path);
void WriteEdgeList(std::ostream& out, const Snapshot& s);

Graph ToGraph(const Snapshot& s);
Snapshot ToSnapshot(const Graph& g);

Labeling ParseCommunities(std::istream& in);
Labeling ReadCommunities(const std::string& path);
void WriteCommunities(std::ostream& out, const Partition& p);
void WriteCommunities(std::ostream& out, const Labeling& labels);

// Builds a partition whose community ids are `first_id`, `first_id + 1`, ...
// assigned in ascending order of the raw labels, so the result does not
// depend on file line order.
Partition PartitionFromLabels(const Labeling& labels, CommunityId first_id = 0);
Labeling LabelsOf(const Partition& p);

std::vector<AtomicEvent> ParseEvents(std::istream& in);
std::vector<AtomicEvent> ReadEvents(const std::string& path);
void WriteEvents(std::ostream& out, const std::vector<AtomicEvent>& events);

// Whole-file helpers; throw kMissingFile when the file cannot be opened.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& content);

}  // namespace dyperm
