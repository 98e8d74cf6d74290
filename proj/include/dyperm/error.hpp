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
#include <stdexcept>
#include <string>
#include <string_view>

namespace dyperm {

enum class ErrorCode {
  kDuplicateNode,
  kMissingNode,
  kSelfLoop,
  kDuplicateEdge,
  kMissingEdge,
  kMissingCommunity,
  kEmptyGraph,
  kNodeSetMismatch,
  kParseError,
  kMissingFile,
  kConfigInvalid,
  kInvariantViolation,
};

std::string_view ToString(ErrorCode code);

// All library failures are reported through this exception. `line` is the
// 1-based line of the input file or event stream that triggered the error,
// or 0 when the error is not tied to an input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

  // Returns a copy of this error tagged with an input line number.
  Error AtLine(std::size_t line) const;

 private:
  ErrorCode code_;
  std::size_t line_;
  std::string bare_message_;
};

}  // namespace dyperm
