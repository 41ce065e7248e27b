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

#include "critloc/schedule.hpp"

#include <algorithm>

#include "critloc/error.hpp"
#include "digraph_algo.hpp"

namespace critloc {

namespace {

struct WeightedArc {
  NodeIndex to;
  Time weight;
};

// Scheduling arcs per node, sorted by head so traversal follows node order.
std::vector<std::vector<WeightedArc>> scheduling_arcs(const ActivityGraph& graph) {
  std::vector<std::vector<WeightedArc>> arcs(graph.node_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const ActivityEdge& edge = graph.edges()[e];
    if (!schedules(edge.kind)) continue;
    arcs[graph.tail_of(e)].push_back({graph.head_of(e), edge.weight});
  }
  for (auto& out : arcs) {
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.to < b.to; });
  }
  return arcs;
}

std::vector<NodeIndex> topological(const ActivityGraph& graph) {
  const auto successors = graph.successors(true);
  if (auto order = detail::topological_order(successors)) return *order;
  scheduling_subgraph(graph);  // throws with a witness cycle
  throw Error(ErrorCode::CyclicSchedule, "scheduling view has a cycle");
}

}  // namespace

std::vector<Time> forward_pass(const ActivityGraph& graph) {
  const auto order = topological(graph);
  const auto arcs = scheduling_arcs(graph);
  std::vector<Time> earliest(graph.node_count(), 0);
  for (NodeIndex v : order) {
    for (const WeightedArc& arc : arcs[v]) {
      earliest[arc.to] = std::max(earliest[arc.to], earliest[v] + arc.weight);
    }
  }
  return earliest;
}

std::vector<Time> backward_pass(const ActivityGraph& graph, Time duration) {
  const auto order = topological(graph);
  const auto arcs = scheduling_arcs(graph);
  std::vector<Time> latest(graph.node_count(), duration);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeIndex v = *it;
    for (const WeightedArc& arc : arcs[v]) {
      latest[v] = std::min(latest[v], latest[arc.to] - arc.weight);
    }
  }
  return latest;
}

Schedule compute_schedule(const ActivityGraph& graph, std::size_t max_paths) {
  if (graph.node_count() == 0) {
    throw Error(ErrorCode::EmptyGraph, "graph has no activities");
  }
  Schedule s;
  s.earliest = forward_pass(graph);
  s.duration = *std::max_element(s.earliest.begin(), s.earliest.end());
  s.latest = backward_pass(graph, s.duration);
  s.slack.resize(graph.node_count());
  for (NodeIndex v = 0; v < graph.node_count(); ++v) {
    s.slack[v] = s.latest[v] - s.earliest[v];
    if (s.slack[v] == 0) s.critical_nodes.push_back(v);
  }

  const auto arcs = scheduling_arcs(graph);
  std::vector<bool> has_pred(graph.node_count(), false);
  for (const auto& out : arcs)
    for (const WeightedArc& arc : out) has_pred[arc.to] = true;

  // Tight arcs between zero-slack nodes; duplicates from parallel edges of
  // equal weight collapse into one step.
  std::vector<std::vector<NodeIndex>> tight(graph.node_count());
  for (NodeIndex v = 0; v < graph.node_count(); ++v) {
    if (s.slack[v] != 0) continue;
    for (const WeightedArc& arc : arcs[v]) {
      if (s.slack[arc.to] == 0 && s.earliest[v] + arc.weight == s.earliest[arc.to] &&
          (tight[v].empty() || tight[v].back() != arc.to)) {
        tight[v].push_back(arc.to);
      }
    }
  }

  std::vector<NodeIndex> path;
  std::vector<std::pair<NodeIndex, std::size_t>> stack;
  for (NodeIndex source : s.critical_nodes) {
    if (has_pred[source]) continue;
    stack.push_back({source, 0});
    path.push_back(source);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (arcs[v].empty()) {
        // A zero-slack sink always sits at the project duration.
        if (s.paths.size() == max_paths) {
          s.paths_truncated = true;
          return s;
        }
        s.paths.push_back(path);
      }
      if (next < tight[v].size()) {
        const NodeIndex w = tight[v][next++];
        stack.push_back({w, 0});
        path.push_back(w);
      } else {
        stack.pop_back();
        path.pop_back();
      }
    }
  }
  return s;
}

std::vector<Classification> classify_activities(const ActivityGraph& graph,
                                                const Schedule& schedule) {
  std::vector<Classification> out(graph.node_count());
  for (NodeIndex v = 0; v < graph.node_count(); ++v) {
    const ActivityClass computed = schedule.is_critical(v)
                                       ? ActivityClass::critical
                                       : ActivityClass::non_critical;
    ActivityClass final_class = computed;
    switch (graph.activities()[v].declared_kind) {
      case DeclaredKind::automatic: break;
      case DeclaredKind::critical: final_class = ActivityClass::critical; break;
      case DeclaredKind::non_critical:
        final_class = ActivityClass::non_critical;
        break;
    }
    out[v] = {final_class, final_class != computed};
  }
  return out;
}

}  // namespace critloc
