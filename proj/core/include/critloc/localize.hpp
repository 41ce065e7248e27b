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
#include <span>
#include <string>
#include <vector>

#include "critloc/graph.hpp"
#include "critloc/matrix.hpp"

namespace critloc {

/// Observed misbehaving activities, unique and ascending by node index.
struct SymptomSet {
  std::vector<NodeIndex> nodes;

  bool contains(NodeIndex node) const;
};

/// Throws UnknownNode, DuplicateId, or InvalidParams (empty list).
SymptomSet make_symptoms(const ActivityGraph& graph,
                         std::span<const std::string> ids);
SymptomSet make_symptoms(const ActivityGraph& graph,
                         std::span<const NodeIndex> nodes);

enum class RankKey {
  explains_desc,   // candidates explaining more symptoms first
  critical_first,  // critical before non-critical
  distance_asc,    // fewer hops from the nearest explained symptom first
};

/// Candidate ordering. Input node order always breaks the remaining ties.
struct RankPolicy {
  std::vector<RankKey> keys = {RankKey::explains_desc, RankKey::critical_first,
                               RankKey::distance_asc};
};

struct Candidate {
  NodeIndex node = 0;
  std::vector<NodeIndex> explains;  // symptoms, ascending
  bool is_critical = false;
  std::size_t min_distance = 0;
  std::size_t scc = 0;  // component id in the raw dependency view
};

struct LocalizationReport {
  std::vector<std::string> node_ids;
  SymptomSet symptoms;
  std::vector<Candidate> candidates;  // ranked
  std::vector<NodeIndex> independent;
  std::size_t nodes_examined = 0;
  std::vector<NodeIndex> examination_order;
  RankPolicy policy;
  EdgeView view = EdgeView::all_edges;
  /// Criticality came from declared kinds because the schedule is cyclic.
  bool criticality_from_declared = false;

  /// 1-based rank of `node`, 0 if not a candidate.
  std::size_t rank_of(NodeIndex node) const;
};

/// The symptom itself plus every node it transitively depends on, ascending.
/// Throws NotClosed or UnknownNode.
std::vector<NodeIndex> candidate_set(const DependencyMatrix& closure,
                                     NodeIndex symptom);

/// A symptom is independent when it depends on nothing (its candidate set
/// is itself) and no other symptom depends on it. Throws NotClosed or
/// UnknownNode.
std::vector<NodeIndex> independent_faults(const DependencyMatrix& closure,
                                          const SymptomSet& symptoms);

/// Back-tracks from the symptoms along dependency edges. Critical
/// activities are examined first, then each symptom's closure. With
/// view=scheduling_only a cyclic schedule raises CyclicSchedule; with
/// all_edges criticality falls back to declared kinds instead.
LocalizationReport localize(const ActivityGraph& graph,
                            const SymptomSet& symptoms,
                            const RankPolicy& policy = {},
                            EdgeView view = EdgeView::all_edges);

enum class CellMark { none, independent_fault, suspect_path };

struct AnnotatedMatrix {
  DependencyMatrix matrix;
  std::vector<CellMark> marks;  // row-major

  CellMark mark(std::size_t row, std::size_t col) const {
    return marks.at(row * matrix.size() + col);
  }
};

/// `raw` must be the non-closed matrix of the graph and view the report was
/// produced from; otherwise DimensionMismatch.
AnnotatedMatrix annotate_matrix(const DependencyMatrix& raw,
                                const LocalizationReport& report);

}  // namespace critloc
