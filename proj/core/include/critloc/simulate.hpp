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
#include <string>
#include <vector>

#include "critloc/graph.hpp"
#include "critloc/localize.hpp"

namespace critloc {

/// Layered random activity graph. Node i sits in layer i * layers / nodes.
/// Each pair (u in layer l, v in layer l + 1) becomes a scheduling edge
/// u -> v with probability `edge_density`. Feedback edges run from a later
/// layer back to an earlier one as dependency-only edges; their count is
/// round(f * S / (1 - f)) for S scheduling edges, so they make up fraction
/// f of the total.
struct GeneratorParams {
  std::size_t node_count = 1;
  std::size_t layer_count = 1;
  double edge_density = 1.0;
  Time weight_max = 1;
  double feedback_edge_fraction = 0.0;
  std::uint64_t seed = 0;

  /// Throws Error(InvalidParams).
  void validate() const;
};

/// Deterministic in `params`; nodes "n0".., edges "e0"..
ActivityGraph generate_graph(const GeneratorParams& params);

struct FaultScenario {
  NodeIndex root = 0;
  double detect_prob = 1.0;
  SymptomSet symptoms;
  std::uint64_t seed = 0;
};

/// Every node that transitively depends on `root` is affected; each is
/// observed with probability `detect_prob`, drawn in node order. The root
/// always observes itself. Throws UnknownNode or InvalidParams.
FaultScenario inject(const ActivityGraph& graph, NodeIndex root,
                     double detect_prob, std::uint64_t seed);
FaultScenario inject(const ActivityGraph& graph, std::string_view root,
                     double detect_prob, std::uint64_t seed);

struct TrialMetrics {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string root;
  std::size_t symptom_count = 0;
  std::size_t root_rank = 0;  // 1-based; 0 on a miss
  std::size_t candidate_count = 0;
  std::size_t nodes_examined_localizer = 0;
  std::size_t nodes_examined_baseline = 0;  // exhaustive scan: node count
  bool hit = false;

  bool operator==(const TrialMetrics&) const = default;
};

/// Localizes over all edges and scores the result against the injected root.
TrialMetrics run_trial(const ActivityGraph& graph, const FaultScenario& scenario,
                       const RankPolicy& policy = {});

enum class RootPolicy { critical_only, uniform };

std::string_view to_string(RootPolicy policy) noexcept;

struct ExperimentConfig {
  GeneratorParams params;
  std::size_t trials = 1;
  double detect_prob = 1.0;
  RootPolicy root_policy = RootPolicy::critical_only;
  /// Worker threads; results do not depend on this.
  std::size_t threads = 1;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialMetrics> rows;  // by trial index
  double mean_root_rank = 0;
  double median_root_rank = 0;
  double hit_rate = 0;
  double mean_examined_localizer = 0;
  double mean_examined_baseline = 0;
  /// mean(baseline) / mean(localizer)
  double mean_examined_ratio = 0;
};

/// Trial i uses seed derive_seed(params.seed, i): its graph is generated
/// from derive_seed(trial_seed, 0), the root drawn with
/// derive_seed(trial_seed, 1), and symptoms injected with
/// derive_seed(trial_seed, 2).
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace critloc
