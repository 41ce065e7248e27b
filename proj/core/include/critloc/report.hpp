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

// Text and JSON renderings of analysis results. Every JSON rendering is a
// single top-level object; all orderings follow graph order.

#pragma once

#include <string>

#include "critloc/graph.hpp"
#include "critloc/localize.hpp"
#include "critloc/matrix.hpp"
#include "critloc/schedule.hpp"
#include "critloc/simulate.hpp"

namespace critloc {

std::string to_text(const ValidationReport& report);
std::string to_json(const ValidationReport& report);

std::string to_text(const IncidenceMatrix& matrix);
std::string to_text(const AdjacencyMatrix& matrix);
std::string to_text(const DependencyMatrix& matrix);
std::string to_json(const IncidenceMatrix& matrix);
std::string to_json(const AdjacencyMatrix& matrix);
std::string to_json(const DependencyMatrix& matrix);

std::string schedule_text(const ActivityGraph& graph, const Schedule& schedule);
std::string schedule_json(const ActivityGraph& graph, const Schedule& schedule);

std::string to_text(const LocalizationReport& report);
std::string to_json(const LocalizationReport& report);

std::string to_text(const ExperimentReport& report);
std::string to_json(const ExperimentReport& report);
/// Per-trial rows only, with a header line.
std::string to_csv(const ExperimentReport& report);

}  // namespace critloc
