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

#include <string>
#include <string_view>

#include "critloc/graph.hpp"
#include "critloc/localize.hpp"
#include "critloc/matrix.hpp"
#include "critloc/schedule.hpp"

namespace critloc {

inline constexpr int kFormatVersion = 1;

/// Schema-checked but not yet graph-validated document contents.
struct GraphDocument {
  int format_version = kFormatVersion;
  std::string unit = "ms";
  std::vector<Activity> nodes;
  std::vector<ActivityEdge> edges;
};

/// Syntax and schema checks only; see parse_graph.
GraphDocument parse_document(std::string_view text);

/// Graph document, strict schema (unknown fields rejected):
///
///   { "format_version": 1, "unit": "ms",
///     "nodes": [ {"id": "v0", "label": "...", "kind": "auto"} ],
///     "edges": [ {"id": "a", "from": "v0", "to": "v1", "weight": 3,
///                 "kind": "scheduling"} ] }
///
/// `unit`, `label` and both `kind`s are optional. Weights are non-negative
/// integers in `unit`. Throws SyntaxError (with line and column),
/// SchemaError (with a JSON pointer to the field), or any build_graph error
/// prefixed with the offending element's pointer.
ActivityGraph parse_graph(std::string_view text);

/// Canonical document: two-space indentation, fields in schema order,
/// trailing newline. parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const ActivityGraph& graph);

/// Header row of column labels after an empty corner cell, then one row per
/// node led by its id.
std::string to_csv(const IncidenceMatrix& matrix);
std::string to_csv(const AdjacencyMatrix& matrix);
std::string to_csv(const DependencyMatrix& matrix);

/// Graphviz digraph. Critical nodes are double circles, dependency-only
/// edges dashed, dummy edges dotted, symptoms filled and independent faults
/// outlined in red. Either overlay may be null.
std::string export_dot(const ActivityGraph& graph,
                       const Schedule* schedule = nullptr,
                       const LocalizationReport* report = nullptr);

}  // namespace critloc
