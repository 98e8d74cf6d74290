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

#include "dyperm/event.hpp"

#include "dyperm/error.hpp"
#include "dyperm/graph.hpp"

namespace dyperm {

const char* Opcode(EventKind kind) {
  switch (kind) {
    case EventKind::kNewNode: return "AN";
    case EventKind::kRemoveNode: return "RN";
    case EventKind::kNewEdge: return "AE";
    case EventKind::kRemoveEdge: return "RE";
  }
  return "??";
}

std::string FormatEvent(const AtomicEvent& e) {
  std::string out = std::to_string(e.timestamp);
  out += ' ';
  out += Opcode(e.kind);
  out += ' ';
  out += std::to_string(e.u);
  if (e.IsEdgeEvent()) {
    out += ' ';
    out += std::to_string(e.v);
  }
  return out;
}

void ApplyToGraph(Graph& g, const AtomicEvent& e) {
  try {
    switch (e.kind) {
      case EventKind::kNewNode: g.AddNode(e.u); break;
      case EventKind::kRemoveNode: g.RemoveNode(e.u); break;
      case EventKind::kNewEdge: g.AddEdge(e.u, e.v); break;
      case EventKind::kRemoveEdge: g.RemoveEdge(e.u, e.v); break;
    }
  } catch (const Error& err) {
    if (e.line > 0) throw err.AtLine(e.line);
    throw;
  }
}

}  // namespace dyperm
