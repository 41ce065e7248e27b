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

#include <cstddef>
#include <limits>
#include <vector>

#include "critloc/graph.hpp"

namespace critloc {

/// Event times per node, indexed in graph order. Computed on the
/// scheduling view only; dependency-only edges are ignored.
struct Schedule {
  std::vector<Time> earliest;
  std::vector<Time> latest;
  std::vector<Time> slack;
  Time duration = 0;
  std::vector<NodeIndex> critical_nodes;  // ascending
  /// Source-to-sink paths of zero-slack nodes joined by tight edges,
  /// enumerated depth-first with successors in node order.
  std::vector<std::vector<NodeIndex>> paths;
  bool paths_truncated = false;

  bool is_critical(NodeIndex node) const { return slack.at(node) == 0; }
};

inline constexpr std::size_t kAllPaths = std::numeric_limits<std::size_t>::max();

/// Longest distance from any source. Throws Error(CyclicSchedule).
std::vector<Time> forward_pass(const ActivityGraph& graph);

/// Sinks are seeded with `duration`; every other node takes the minimum of
/// latest(succ) - weight. Throws Error(CyclicSchedule).
std::vector<Time> backward_pass(const ActivityGraph& graph, Time duration);

/// Throws Error(EmptyGraph) or Error(CyclicSchedule). At most `max_paths`
/// critical paths are collected; `paths_truncated` reports the cut.
Schedule compute_schedule(const ActivityGraph& graph,
                          std::size_t max_paths = kAllPaths);

enum class ActivityClass { critical, non_critical };

struct Classification {
  ActivityClass activity_class = ActivityClass::non_critical;
  /// The declared kind disagreed with slack and won.
  bool overridden = false;
};

std::vector<Classification> classify_activities(const ActivityGraph& graph,
                                                const Schedule& schedule);

}  // namespace critloc
