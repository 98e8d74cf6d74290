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
#include <string>

#include "dyperm/types.hpp"

namespace dyperm {

class Graph;

enum class EventKind : std::uint8_t { kNewNode, kRemoveNode, kNewEdge, kRemoveEdge };

// One atomic change to the dynamic network. `v` is unused for node events.
// `line` records the stream line the event was parsed from (0 if synthetic).
struct AtomicEvent {
  std::uint64_t timestamp = 0;
  EventKind kind = EventKind::kNewNode;
  NodeId u = 0;
  NodeId v = 0;
  std::size_t line = 0;

  static AtomicEvent NewNode(std::uint64_t t, NodeId u) {
    return {t, EventKind::kNewNode, u, 0, 0};
  }
  static AtomicEvent RemoveNode(std::uint64_t t, NodeId u) {
    return {t, EventKind::kRemoveNode, u, 0, 0};
  }
  static AtomicEvent NewEdge(std::uint64_t t, NodeId u, NodeId v) {
    return {t, EventKind::kNewEdge, u, v, 0};
  }
  static AtomicEvent RemoveEdge(std::uint64_t t, NodeId u, NodeId v) {
    return {t, EventKind::kRemoveEdge, u, v, 0};
  }

  bool IsEdgeEvent() const {
    return kind == EventKind::kNewEdge || kind == EventKind::kRemoveEdge;
  }

  friend bool operator==(const AtomicEvent& a, const AtomicEvent& b) {
    return a.timestamp == b.timestamp && a.kind == b.kind && a.u == b.u &&
           (!a.IsEdgeEvent() || a.v == b.v);
  }
};

// Opcode used in event-stream files: AN, RN, AE, RE.
const char* Opcode(EventKind kind);

// `t OP u [v]`, no trailing newline.
std::string FormatEvent(const AtomicEvent& e);

// Applies the structural part of an event to a bare graph (no communities).
// Node removal drops incident edges.
void ApplyToGraph(Graph& g, const AtomicEvent& e);

}  // namespace dyperm
