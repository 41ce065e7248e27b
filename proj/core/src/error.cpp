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

#include "critloc/error.hpp"

#include <utility>

namespace critloc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DummyNonZero: return "DummyNonZero";
    case ErrorCode::InvalidId: return "InvalidId";
    case ErrorCode::CyclicSchedule: return "CyclicSchedule";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::AlreadyClosed: return "AlreadyClosed";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<std::string> ids)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      ids_(std::move(ids)) {}

}  // namespace critloc
