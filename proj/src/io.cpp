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

#include "dyperm/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>

#include "dyperm/error.hpp"

namespace dyperm {
namespace {

// Splits one line into whitespace-separated tokens. Returns false for blank
// and comment lines.
bool Tokenize(std::string_view line, std::vector<std::string_view>& tokens) {
  tokens.clear();
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  if (i == line.size() || line[i] == '#' || line[i] == '\r') return false;
  while (i < line.size()) {
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j + 1;
  }
  return !tokens.empty();
}

std::uint64_t ParseId(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParseError,
                "expected a non-negative integer, got '" + std::string(token) +
                    "'",
                line);
  }
  return value;
}

template <typename LineFn>
void ForEachLine(std::istream& in, LineFn&& fn) {
  std::string line;
  std::vector<std::string_view> tokens;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (Tokenize(line, tokens)) fn(tokens, number);
  }
}

std::ifstream OpenForRead(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kMissingFile, path);
  return in;
}

}  // namespace

Snapshot ParseEdgeList(std::istream& in) {
  Snapshot s;
  ForEachLine(in, [&](const std::vector<std::string_view>& tok,
                      std::size_t line) {
    if (tok.size() == 1) {
      s.nodes.insert(ParseId(tok[0], line));
      return;
    }
    if (tok.size() != 2) {
      throw Error(ErrorCode::kParseError, "expected 'u v'", line);
    }
    NodeId u = ParseId(tok[0], line);
    NodeId v = ParseId(tok[1], line);
    if (u == v) {
      throw Error(ErrorCode::kParseError,
                  "self-loop on node " + std::to_string(u), line);
    }
    if (!s.edges.insert(Edge::Canonical(u, v)).second) {
      throw Error(ErrorCode::kParseError,
                  "duplicate edge " + std::to_string(u) + " " +
                      std::to_string(v),
                  line);
    }
    s.nodes.insert(u);
    s.nodes.insert(v);
  });
  return s;
}

Snapshot ReadEdgeList(const std::string& path) {
  auto in = OpenForRead(path);
  return ParseEdgeList(in);
}

void WriteEdgeList(std::ostream& out, const Snapshot& s) {
  std::set<NodeId> touched;
  for (const Edge& e : s.edges) {
    touched.insert(e.first);
    touched.insert(e.second);
  }
  for (NodeId u : s.nodes) {
    if (!touched.contains(u)) out << u << '\n';
  }
  for (const Edge& e : s.edges) out << e.first << ' ' << e.second << '\n';
}

Graph ToGraph(const Snapshot& s) {
  Graph g;
  for (NodeId u : s.nodes) g.AddNode(u);
  for (const Edge& e : s.edges) {
    if (!g.HasNode(e.first)) g.AddNode(e.first);
    if (!g.HasNode(e.second)) g.AddNode(e.second);
    g.AddEdge(e.first, e.second);
  }
  return g;
}

Snapshot ToSnapshot(const Graph& g) {
  Snapshot s;
  for (NodeId u : g.Nodes()) s.nodes.insert(u);
  for (const Edge& e : g.Edges()) s.edges.insert(e);
  return s;
}

Labeling ParseCommunities(std::istream& in) {
  std::map<NodeId, std::pair<std::uint64_t, std::size_t>> seen;
  ForEachLine(in, [&](const std::vector<std::string_view>& tok,
                      std::size_t line) {
    if (tok.size() != 2) {
      throw Error(ErrorCode::kParseError, "expected 'node community'", line);
    }
    NodeId u = ParseId(tok[0], line);
    std::uint64_t c = ParseId(tok[1], line);
    auto [it, inserted] = seen.try_emplace(u, c, line);
    if (!inserted) {
      throw Error(ErrorCode::kParseError,
                  "node " + std::to_string(u) + " listed twice (first on line " +
                      std::to_string(it->second.second) + ")",
                  line);
    }
  });
  Labeling out;
  out.reserve(seen.size());
  for (const auto& [u, entry] : seen) out.emplace_back(u, entry.first);
  return out;
}

Labeling ReadCommunities(const std::string& path) {
  auto in = OpenForRead(path);
  return ParseCommunities(in);
}

void WriteCommunities(std::ostream& out, const Labeling& labels) {
  for (const auto& [u, c] : labels) out << u << ' ' << c << '\n';
}

void WriteCommunities(std::ostream& out, const Partition& p) {
  WriteCommunities(out, LabelsOf(p));
}

Partition PartitionFromLabels(const Labeling& labels, CommunityId first_id) {
  std::map<std::uint64_t, CommunityId> remap;
  for (const auto& [_, c] : labels) remap.emplace(c, 0);
  CommunityId next = first_id;
  for (auto& [_, id] : remap) id = next++;
  Partition p;
  for (const auto& [u, c] : labels) p.Assign(u, remap.at(c));
  return p;
}

Labeling LabelsOf(const Partition& p) {
  Labeling out;
  out.reserve(p.NodeCount());
  for (NodeId u : p.Nodes()) out.emplace_back(u, p.CommunityOf(u));
  return out;
}

std::vector<AtomicEvent> ParseEvents(std::istream& in) {
  std::vector<AtomicEvent> events;
  ForEachLine(in, [&](const std::vector<std::string_view>& tok,
                      std::size_t line) {
    if (tok.size() < 3) {
      throw Error(ErrorCode::kParseError, "expected 't OP u [v]'", line);
    }
    AtomicEvent e;
    e.timestamp = ParseId(tok[0], line);
    e.line = line;
    std::string_view op = tok[1];
    std::size_t arity = 1;
    if (op == "AN") {
      e.kind = EventKind::kNewNode;
    } else if (op == "RN") {
      e.kind = EventKind::kRemoveNode;
    } else if (op == "AE") {
      e.kind = EventKind::kNewEdge;
      arity = 2;
    } else if (op == "RE") {
      e.kind = EventKind::kRemoveEdge;
      arity = 2;
    } else {
      throw Error(ErrorCode::kParseError,
                  "unknown opcode '" + std::string(op) + "'", line);
    }
    if (tok.size() != 2 + arity) {
      throw Error(ErrorCode::kParseError,
                  "wrong argument count for " + std::string(op), line);
    }
    e.u = ParseId(tok[2], line);
    if (arity == 2) {
      e.v = ParseId(tok[3], line);
      if (e.u == e.v) {
        throw Error(ErrorCode::kParseError,
                    "self-loop on node " + std::to_string(e.u), line);
      }
    }
    if (!events.empty() && e.timestamp < events.back().timestamp) {
      throw Error(ErrorCode::kParseError, "timestamps must not decrease",
                  line);
    }
    events.push_back(e);
  });
  return events;
}

std::vector<AtomicEvent> ReadEvents(const std::string& path) {
  auto in = OpenForRead(path);
  return ParseEvents(in);
}

void WriteEvents(std::ostream& out, const std::vector<AtomicEvent>& events) {
  for (const auto& e : events) out << FormatEvent(e) << '\n';
}

std::string ReadFile(const std::string& path) {
  auto in = OpenForRead(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kMissingFile, "cannot write " + path);
  out << content;
}

}  // namespace dyperm
