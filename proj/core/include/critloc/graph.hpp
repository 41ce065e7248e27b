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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace critloc {

/// Time in integer multiples of the graph's declared unit.
using Time = std::int64_t;

/// Position of an activity in input order; this is also its matrix row.
using NodeIndex = std::size_t;

enum class DeclaredKind { automatic, critical, non_critical };

enum class EdgeKind {
  scheduling,       // carries duration, part of the CPM network
  dependency_only,  // dependency matrix only
  dummy,            // zero-duration precedence
};

std::string_view to_string(DeclaredKind kind) noexcept;
std::string_view to_string(EdgeKind kind) noexcept;
std::optional<DeclaredKind> parse_declared_kind(std::string_view text) noexcept;
std::optional<EdgeKind> parse_edge_kind(std::string_view text) noexcept;

/// True for edges that take part in critical-path scheduling.
constexpr bool schedules(EdgeKind kind) noexcept {
  return kind != EdgeKind::dependency_only;
}

/// `[A-Za-z_][A-Za-z0-9_-]*`
bool is_valid_token(std::string_view text) noexcept;

struct Activity {
  std::string id;
  std::optional<std::string> label;
  DeclaredKind declared_kind = DeclaredKind::automatic;

  bool operator==(const Activity&) const = default;
};

/// Directed edge tail -> head: the tail depends on the head, and in the
/// scheduling view the tail precedes the head by `weight`.
struct ActivityEdge {
  std::string id;
  std::string tail;
  std::string head;
  Time weight = 0;
  EdgeKind kind = EdgeKind::scheduling;

  bool operator==(const ActivityEdge&) const = default;
};

/// Immutable validated activity digraph. Node and edge order are preserved
/// exactly as given.
class ActivityGraph {
 public:
  const std::vector<Activity>& activities() const noexcept { return activities_; }
  const std::vector<ActivityEdge>& edges() const noexcept { return edges_; }
  const std::string& unit() const noexcept { return unit_; }

  std::size_t node_count() const noexcept { return activities_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::optional<NodeIndex> find(std::string_view id) const;
  /// Throws Error(UnknownNode) if absent.
  NodeIndex index_of(std::string_view id) const;
  const std::string& id_of(NodeIndex node) const { return activities_.at(node).id; }

  NodeIndex tail_of(std::size_t edge) const { return endpoints_.at(edge).first; }
  NodeIndex head_of(std::size_t edge) const { return endpoints_.at(edge).second; }

  /// Successor lists by node, sorted by node index, duplicates removed.
  std::vector<std::vector<NodeIndex>> successors(bool scheduling_only) const;

  bool operator==(const ActivityGraph& other) const {
    return unit_ == other.unit_ && activities_ == other.activities_ &&
           edges_ == other.edges_;
  }

  friend ActivityGraph build_graph(std::vector<Activity> activities,
                                   std::vector<ActivityEdge> edges,
                                   std::string unit);

 private:
  ActivityGraph() = default;

  std::string unit_;
  std::vector<Activity> activities_;
  std::vector<ActivityEdge> edges_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<std::pair<NodeIndex, NodeIndex>> endpoints_;
};

/// Validates and assembles a graph. Throws Error with one of DuplicateId,
/// UnknownEndpoint, NegativeWeight, SelfLoop, DummyNonZero, InvalidId.
ActivityGraph build_graph(std::vector<Activity> activities,
                          std::vector<ActivityEdge> edges,
                          std::string unit = "ms");

/// Restriction to scheduling and dummy edges, all nodes kept. Throws
/// Error(CyclicSchedule) carrying a witness cycle when the result would not
/// be acyclic.
ActivityGraph scheduling_subgraph(const ActivityGraph& graph);

/// A directed cycle v0 -> ... -> vk -> v0 listed as [v0, ..., vk], if any.
/// Deterministic: the first cycle found by depth-first search in node order.
std::optional<std::vector<NodeIndex>> find_cycle(
    const std::vector<std::vector<NodeIndex>>& successors);

enum class Severity { error, warning };

struct Issue {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  std::vector<std::string> ids;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Issue> issues;
};

/// Collects every structural problem in the raw lists, plus lint warnings
/// (isolated nodes, multiple scheduling sources or sinks, cycles through
/// dependency-only edges). A cyclic scheduling view is an error here.
ValidationReport validate(std::span<const Activity> activities,
                          std::span<const ActivityEdge> edges);
ValidationReport validate(const ActivityGraph& graph);

}  // namespace critloc
