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

#include "dyperm/error.hpp"

namespace dyperm {
namespace {

std::string Compose(ErrorCode code, const std::string& message,
                    std::size_t line) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  out += ToString(code);
  if (!message.empty()) {
    out += ": ";
    out += message;
  }
  return out;
}

}  // namespace

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateNode: return "DuplicateNode";
    case ErrorCode::kMissingNode: return "MissingNode";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kMissingEdge: return "MissingEdge";
    case ErrorCode::kMissingCommunity: return "MissingCommunity";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kNodeSetMismatch: return "NodeSetMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kConfigInvalid: return "ConfigInvalid";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(Compose(code, message, line)),
      code_(code),
      line_(line),
      bare_message_(message) {}

Error Error::AtLine(std::size_t line) const {
  return Error(code_, bare_message_, line);
}

}  // namespace dyperm
