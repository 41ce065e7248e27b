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

#include "critloc/localize.hpp"

#include <algorithm>
#include <deque>

#include "critloc/error.hpp"
#include "critloc/schedule.hpp"
#include "digraph_algo.hpp"

namespace critloc {

namespace {

void require_closed(const DependencyMatrix& closure) {
  if (!closure.closed()) {
    throw Error(ErrorCode::NotClosed, "expected a transitive closure");
  }
}

void require_node(const DependencyMatrix& m, NodeIndex node) {
  if (node >= m.size()) {
    throw Error(ErrorCode::UnknownNode,
                "node index " + std::to_string(node) + " out of range");
  }
}

std::vector<bool> critical_mask(const ActivityGraph& graph, EdgeView view,
                                bool& from_declared) {
  std::vector<bool> mask(graph.node_count(), false);
  try {
    const Schedule schedule = compute_schedule(graph, 0);
    const auto classes = classify_activities(graph, schedule);
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
      mask[v] = classes[v].activity_class == ActivityClass::critical;
    }
    from_declared = false;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CyclicSchedule ||
        view == EdgeView::scheduling_only) {
      throw;
    }
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
      mask[v] = graph.activities()[v].declared_kind == DeclaredKind::critical;
    }
    from_declared = true;
  }
  return mask;
}

}  // namespace

bool SymptomSet::contains(NodeIndex node) const {
  return std::binary_search(nodes.begin(), nodes.end(), node);
}

SymptomSet make_symptoms(const ActivityGraph& graph,
                         std::span<const NodeIndex> nodes) {
  if (nodes.empty()) {
    throw Error(ErrorCode::InvalidParams, "symptom set is empty");
  }
  SymptomSet set{{nodes.begin(), nodes.end()}};
  for (NodeIndex v : set.nodes) {
    if (v >= graph.node_count()) {
      throw Error(ErrorCode::UnknownNode,
                  "node index " + std::to_string(v) + " out of range");
    }
  }
  std::sort(set.nodes.begin(), set.nodes.end());
  if (auto dup = std::adjacent_find(set.nodes.begin(), set.nodes.end());
      dup != set.nodes.end()) {
    throw Error(ErrorCode::DuplicateId,
                "symptom '" + graph.id_of(*dup) + "' is repeated",
                {graph.id_of(*dup)});
  }
  return set;
}

SymptomSet make_symptoms(const ActivityGraph& graph,
                         std::span<const std::string> ids) {
  std::vector<NodeIndex> nodes;
  nodes.reserve(ids.size());
  for (const std::string& id : ids) nodes.push_back(graph.index_of(id));
  return make_symptoms(graph, std::span<const NodeIndex>(nodes));
}

std::size_t LocalizationReport::rank_of(NodeIndex node) const {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].node == node) return i + 1;
  }
  return 0;
}

std::vector<NodeIndex> candidate_set(const DependencyMatrix& closure,
                                     NodeIndex symptom) {
  require_closed(closure);
  require_node(closure, symptom);
  std::vector<NodeIndex> set = closure.row_support(symptom);
  if (!closure.test(symptom, symptom)) {
    set.insert(std::lower_bound(set.begin(), set.end(), symptom), symptom);
  }
  return set;
}

std::vector<NodeIndex> independent_faults(const DependencyMatrix& closure,
                                          const SymptomSet& symptoms) {
  require_closed(closure);
  std::vector<NodeIndex> independent;
  for (NodeIndex s : symptoms.nodes) {
    require_node(closure, s);
    const auto row = closure.row_words(s);
    const bool depends_on_nothing =
        std::all_of(row.begin(), row.end(), [](auto w) { return w == 0; });
    if (!depends_on_nothing) continue;
    const bool shared = std::any_of(
        symptoms.nodes.begin(), symptoms.nodes.end(),
        [&](NodeIndex t) { return t != s && closure.test(t, s); });
    if (!shared) independent.push_back(s);
  }
  return independent;
}

LocalizationReport localize(const ActivityGraph& graph,
                            const SymptomSet& symptoms,
                            const RankPolicy& policy, EdgeView view) {
  const std::size_t n = graph.node_count();
  for (NodeIndex s : symptoms.nodes) {
    if (s >= n) {
      throw Error(ErrorCode::UnknownNode,
                  "node index " + std::to_string(s) + " out of range");
    }
  }

  LocalizationReport report;
  report.symptoms = symptoms;
  report.policy = policy;
  report.view = view;
  report.node_ids.reserve(n);
  for (const Activity& a : graph.activities()) report.node_ids.push_back(a.id);

  const std::vector<bool> critical =
      critical_mask(graph, view, report.criticality_from_declared);
  const DependencyMatrix raw = dependency_matrix(graph, view);
  const DependencyMatrix closure = transitive_closure(raw);
  const auto successors = raw.successors();
  const CondensedGraph condensed = condense_sccs(raw);

  constexpr std::size_t kNoDistance = detail::kUnreachable;
  std::vector<std::vector<NodeIndex>> explains(n);
  std::vector<std::size_t> distance(n, kNoDistance);
  for (NodeIndex s : symptoms.nodes) {
    const auto hops = detail::bfs_distances(successors, s);
    for (NodeIndex v : candidate_set(closure, s)) {
      explains[v].push_back(s);
      distance[v] = std::min(distance[v], hops[v]);
    }
  }

  for (NodeIndex v = 0; v < n; ++v) {
    if (explains[v].empty()) continue;
    report.candidates.push_back({v, std::move(explains[v]), critical[v],
                                 distance[v], condensed.component_of[v]});
  }

  auto key_of = [](const Candidate& c, RankKey key) -> long long {
    switch (key) {
      case RankKey::explains_desc:
        return -static_cast<long long>(c.explains.size());
      case RankKey::critical_first: return c.is_critical ? 0 : 1;
      case RankKey::distance_asc: return static_cast<long long>(c.min_distance);
    }
    return 0;
  };
  std::sort(report.candidates.begin(), report.candidates.end(),
            [&](const Candidate& a, const Candidate& b) {
              for (RankKey key : policy.keys) {
                const long long ka = key_of(a, key);
                const long long kb = key_of(b, key);
                if (ka != kb) return ka < kb;
              }
              return a.node < b.node;
            });

  report.independent = independent_faults(closure, symptoms);

  // Examination: critical seeds first (examined, not expanded), then a
  // breadth-first walk from each symptom. Each node is counted once.
  std::vector<bool> examined(n, false);
  std::vector<bool> expanded(n, false);
  auto examine = [&](NodeIndex v) {
    if (!examined[v]) {
      examined[v] = true;
      report.examination_order.push_back(v);
    }
  };
  for (NodeIndex v = 0; v < n; ++v) {
    if (critical[v]) examine(v);
  }
  for (NodeIndex s : symptoms.nodes) {
    if (expanded[s]) continue;
    std::deque<NodeIndex> queue{s};
    expanded[s] = true;
    while (!queue.empty()) {
      const NodeIndex u = queue.front();
      queue.pop_front();
      examine(u);
      for (NodeIndex w : successors[u]) {
        if (!expanded[w]) {
          expanded[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  report.nodes_examined = report.examination_order.size();
  return report;
}

AnnotatedMatrix annotate_matrix(const DependencyMatrix& raw,
                                const LocalizationReport& report) {
  if (raw.labels() != report.node_ids) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix has " + std::to_string(raw.size()) +
                    " rows but the report covers " +
                    std::to_string(report.node_ids.size()) + " nodes");
  }
  const std::size_t n = raw.size();
  AnnotatedMatrix annotated{raw, std::vector<CellMark>(n * n, CellMark::none)};

  std::vector<bool> is_candidate(n, false);
  for (const Candidate& c : report.candidates) is_candidate[c.node] = true;

  const auto successors = raw.successors();
  for (NodeIndex s : report.symptoms.nodes) {
    // A raw edge s -> w is itself a shortest path to the candidate w.
    for (NodeIndex w : successors[s]) {
      if (is_candidate[w]) {
        annotated.marks[s * n + w] = CellMark::suspect_path;
      }
    }
  }
  for (NodeIndex s : report.independent) {
    annotated.marks[s * n + s] = CellMark::independent_fault;
  }
  return annotated;
}

}  // namespace critloc
