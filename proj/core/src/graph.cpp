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

#include "critloc/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "critloc/error.hpp"
#include "digraph_algo.hpp"

namespace critloc {

std::string_view to_string(DeclaredKind kind) noexcept {
  switch (kind) {
    case DeclaredKind::automatic: return "auto";
    case DeclaredKind::critical: return "critical";
    case DeclaredKind::non_critical: return "non_critical";
  }
  return "auto";
}

std::string_view to_string(EdgeKind kind) noexcept {
  switch (kind) {
    case EdgeKind::scheduling: return "scheduling";
    case EdgeKind::dependency_only: return "dependency_only";
    case EdgeKind::dummy: return "dummy";
  }
  return "scheduling";
}

std::optional<DeclaredKind> parse_declared_kind(std::string_view text) noexcept {
  if (text == "auto") return DeclaredKind::automatic;
  if (text == "critical") return DeclaredKind::critical;
  if (text == "non_critical") return DeclaredKind::non_critical;
  return std::nullopt;
}

std::optional<EdgeKind> parse_edge_kind(std::string_view text) noexcept {
  if (text == "scheduling") return EdgeKind::scheduling;
  if (text == "dependency_only") return EdgeKind::dependency_only;
  if (text == "dummy") return EdgeKind::dummy;
  return std::nullopt;
}

bool is_valid_token(std::string_view text) noexcept {
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (text.empty() || !alpha(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(), [&](char c) {
    return alpha(c) || digit(c) || c == '-';
  });
}

std::optional<NodeIndex> ActivityGraph::find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex ActivityGraph::index_of(std::string_view id) const {
  if (auto found = find(id)) return *found;
  throw Error(ErrorCode::UnknownNode,
              "unknown activity '" + std::string(id) + "'", {std::string(id)});
}

std::vector<std::vector<NodeIndex>> ActivityGraph::successors(
    bool scheduling_only) const {
  std::vector<std::vector<NodeIndex>> out(node_count());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (scheduling_only && !schedules(edges_[e].kind)) continue;
    out[endpoints_[e].first].push_back(endpoints_[e].second);
  }
  for (auto& list : out) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return out;
}

namespace {

struct Problem {
  ErrorCode code;
  std::string message;
  std::vector<std::string> ids;
};

void add_error(ValidationReport& report, ErrorCode code, std::string message,
               std::vector<std::string> ids) {
  report.ok = false;
  report.issues.push_back({Severity::error, std::string(to_string(code)),
                           std::move(message), std::move(ids)});
}

void add_warning(ValidationReport& report, std::string code,
                 std::string message, std::vector<std::string> ids) {
  report.issues.push_back(
      {Severity::warning, std::move(code), std::move(message), std::move(ids)});
}

std::string join_path(const std::vector<NodeIndex>& cycle,
                      std::span<const Activity> activities) {
  std::string text;
  for (NodeIndex v : cycle) text += activities[v].id + "->";
  text += activities[cycle.front()].id;
  return text;
}

std::vector<std::string> ids_of(const std::vector<NodeIndex>& nodes,
                                std::span<const Activity> activities) {
  std::vector<std::string> ids;
  ids.reserve(nodes.size());
  for (NodeIndex v : nodes) ids.push_back(activities[v].id);
  return ids;
}

// Structural checks only; these are the conditions build_graph rejects.
std::vector<Problem> check_structure(std::span<const Activity> activities,
                                 std::span<const ActivityEdge> edges) {
  std::vector<Problem> problems;
  std::unordered_set<std::string_view> node_ids;
  for (const Activity& a : activities) {
    if (!is_valid_token(a.id)) {
      problems.push_back({ErrorCode::InvalidId,
                "activity id '" + a.id + "' is not a valid token", {a.id}});
    }
    if (!node_ids.insert(a.id).second) {
      problems.push_back({ErrorCode::DuplicateId,
                "activity id '" + a.id + "' is repeated", {a.id}});
    }
  }

  std::unordered_set<std::string_view> edge_ids;
  for (const ActivityEdge& e : edges) {
    if (!is_valid_token(e.id)) {
      problems.push_back({ErrorCode::InvalidId,
                "edge id '" + e.id + "' is not a valid token", {e.id}});
    }
    if (!edge_ids.insert(e.id).second) {
      problems.push_back({ErrorCode::DuplicateId,
                "edge id '" + e.id + "' is repeated", {e.id}});
    }
    for (const std::string* end : {&e.tail, &e.head}) {
      if (!node_ids.contains(*end)) {
        problems.push_back({ErrorCode::UnknownEndpoint,
                  "edge '" + e.id + "' references unknown activity '" + *end +
                      "'",
                  {e.id, *end}});
      }
    }
    if (e.tail == e.head) {
      problems.push_back({ErrorCode::SelfLoop,
                "edge '" + e.id + "' is a self-loop on '" + e.tail + "'",
                {e.id}});
    }
    if (e.weight < 0) {
      problems.push_back({ErrorCode::NegativeWeight,
                "edge '" + e.id + "' has negative weight " +
                    std::to_string(e.weight),
                {e.id}});
    }
    if (e.kind == EdgeKind::dummy && e.weight != 0) {
      problems.push_back({ErrorCode::DummyNonZero,
                "dummy edge '" + e.id + "' has non-zero weight " +
                    std::to_string(e.weight),
                {e.id}});
    }
  }
  return problems;
}

void lint(const ActivityGraph& graph, ValidationReport& report) {
  const auto& activities = graph.activities();
  const std::size_t n = graph.node_count();
  if (n == 0) return;

  if (n > 1) {
    std::vector<bool> touched(n, false);
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
      touched[graph.tail_of(e)] = touched[graph.head_of(e)] = true;
    }
    for (NodeIndex v = 0; v < n; ++v) {
      if (!touched[v]) {
        add_warning(report, "IsolatedNode",
                    "activity '" + activities[v].id + "' has no edges",
                    {activities[v].id});
      }
    }
  }

  const auto sched = graph.successors(true);
  if (auto cycle = find_cycle(sched)) {
    add_error(report, ErrorCode::CyclicSchedule,
              "scheduling view has a cycle: " + join_path(*cycle, activities),
              ids_of(*cycle, activities));
    return;
  }

  if (n > 1) {
    std::vector<bool> has_pred(n, false);
    std::vector<NodeIndex> sources;
    std::vector<NodeIndex> sinks;
    for (const auto& out : sched)
      for (NodeIndex w : out) has_pred[w] = true;
    for (NodeIndex v = 0; v < n; ++v) {
      if (!has_pred[v]) sources.push_back(v);
      if (sched[v].empty()) sinks.push_back(v);
    }
    auto list = [&](const std::vector<NodeIndex>& nodes) {
      std::string text;
      for (NodeIndex v : nodes) {
        if (!text.empty()) text += ", ";
        text += activities[v].id;
      }
      return text;
    };
    if (sources.size() > 1) {
      add_warning(report, "MultipleSources",
                  "scheduling view has multiple sources: " + list(sources),
                  ids_of(sources, activities));
    }
    if (sinks.size() > 1) {
      add_warning(report, "MultipleSinks",
                  "scheduling view has multiple sinks: " + list(sinks),
                  ids_of(sinks, activities));
    }
  }

  // The scheduling view is acyclic, so every cycle uses a dependency-only
  // edge. Report one witness per non-trivial component.
  const auto all = graph.successors(false);
  for (const auto& component : detail::strongly_connected_components(all)) {
    if (component.size() < 2) continue;
    const auto cycle = detail::shortest_cycle_through(all, component.front());
    add_warning(report, "DependencyOnlyCycle",
                "dependency-only cycle: " + join_path(*cycle, activities),
                ids_of(component, activities));
  }
}

}  // namespace

std::optional<std::vector<NodeIndex>> find_cycle(
    const std::vector<std::vector<NodeIndex>>& successors) {
  enum class Color { white, gray, black };
  const std::size_t n = successors.size();
  std::vector<Color> color(n, Color::white);
  std::vector<std::pair<NodeIndex, std::size_t>> stack;

  for (NodeIndex root = 0; root < n; ++root) {
    if (color[root] != Color::white) continue;
    stack.push_back({root, 0});
    color[root] = Color::gray;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == successors[v].size()) {
        color[v] = Color::black;
        stack.pop_back();
        continue;
      }
      const NodeIndex w = successors[v][next++];
      if (color[w] == Color::gray) {
        std::vector<NodeIndex> cycle;
        auto it = std::find_if(stack.begin(), stack.end(),
                               [w](const auto& f) { return f.first == w; });
        for (; it != stack.end(); ++it) cycle.push_back(it->first);
        return cycle;
      }
      if (color[w] == Color::white) {
        color[w] = Color::gray;
        stack.push_back({w, 0});
      }
    }
  }
  return std::nullopt;
}

ActivityGraph build_graph(std::vector<Activity> activities,
                          std::vector<ActivityEdge> edges, std::string unit) {
  if (!is_valid_token(unit)) {
    throw Error(ErrorCode::InvalidId, "unit '" + unit + "' is not a valid token",
                {unit});
  }
  auto problems = check_structure(activities, edges);
  if (!problems.empty()) {
    Problem& first = problems.front();
    throw Error(first.code, first.message, std::move(first.ids));
  }

  ActivityGraph graph;
  graph.unit_ = std::move(unit);
  graph.activities_ = std::move(activities);
  graph.edges_ = std::move(edges);
  graph.index_.reserve(graph.activities_.size());
  for (NodeIndex v = 0; v < graph.activities_.size(); ++v) {
    graph.index_.emplace(graph.activities_[v].id, v);
  }
  graph.endpoints_.reserve(graph.edges_.size());
  for (const ActivityEdge& e : graph.edges_) {
    graph.endpoints_.emplace_back(graph.index_.at(e.tail),
                                  graph.index_.at(e.head));
  }
  return graph;
}

ActivityGraph scheduling_subgraph(const ActivityGraph& graph) {
  if (auto cycle = find_cycle(graph.successors(true))) {
    throw Error(ErrorCode::CyclicSchedule,
                "scheduling view has a cycle: " +
                    join_path(*cycle, graph.activities()),
                ids_of(*cycle, graph.activities()));
  }
  std::vector<ActivityEdge> kept;
  for (const ActivityEdge& e : graph.edges()) {
    if (schedules(e.kind)) kept.push_back(e);
  }
  return build_graph(graph.activities(), std::move(kept), graph.unit());
}

ValidationReport validate(std::span<const Activity> activities,
                          std::span<const ActivityEdge> edges) {
  ValidationReport report;
  for (Problem& p : check_structure(activities, edges)) {
    add_error(report, p.code, std::move(p.message), std::move(p.ids));
  }
  if (!report.ok) return report;
  const ActivityGraph graph = build_graph(
      {activities.begin(), activities.end()}, {edges.begin(), edges.end()});
  lint(graph, report);
  return report;
}

ValidationReport validate(const ActivityGraph& graph) {
  ValidationReport report;
  lint(graph, report);
  return report;
}

}  // namespace critloc
