// Copyright 2026 The critloc Authors
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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace critloc {

enum class ErrorCode {
  DuplicateId,
  UnknownEndpoint,
  NegativeWeight,
  SelfLoop,
  DummyNonZero,
  InvalidId,
  CyclicSchedule,
  EmptyGraph,
  AlreadyClosed,
  NotClosed,
  CapacityExceeded,
  UnknownNode,
  DimensionMismatch,
  InvalidParams,
  SyntaxError,
  SchemaError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `ids()` names the offending
/// activities or edges (a witness cycle for CyclicSchedule).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::string> ids = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

 private:
  ErrorCode code_;
  std::vector<std::string> ids_;
};

}  // namespace critloc
