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

#include "critloc/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "critloc/error.hpp"
#include "critloc/matrix.hpp"
#include "critloc/rng.hpp"
#include "critloc/schedule.hpp"

namespace critloc {

namespace {

void invalid(const std::string& message) {
  throw Error(ErrorCode::InvalidParams, message);
}

void check_detect_prob(double p) {
  if (!(p > 0.0 && p <= 1.0)) invalid("detect_prob must lie in (0, 1]");
}

std::size_t layer_of(std::size_t node, const GeneratorParams& p) {
  return node * p.layer_count / p.node_count;
}

// First node index of `layer`: smallest i with i * L / N >= layer.
std::size_t layer_begin(std::size_t layer, const GeneratorParams& p) {
  return (layer * p.node_count + p.layer_count - 1) / p.layer_count;
}

TrialMetrics one_trial(const ExperimentConfig& config, std::size_t index) {
  const std::uint64_t trial_seed = derive_seed(config.params.seed, index);

  GeneratorParams params = config.params;
  params.seed = derive_seed(trial_seed, 0);
  const ActivityGraph graph = generate_graph(params);

  std::vector<NodeIndex> pool;
  if (config.root_policy == RootPolicy::critical_only) {
    pool = compute_schedule(graph, 0).critical_nodes;
  } else {
    pool.resize(graph.node_count());
    std::iota(pool.begin(), pool.end(), NodeIndex{0});
  }
  SplitMix64 root_rng(derive_seed(trial_seed, 1));
  const NodeIndex root = pool[root_rng.below(pool.size())];

  const FaultScenario scenario =
      inject(graph, root, config.detect_prob, derive_seed(trial_seed, 2));
  TrialMetrics metrics = run_trial(graph, scenario);
  metrics.trial = index;
  metrics.seed = trial_seed;
  return metrics;
}

}  // namespace

void GeneratorParams::validate() const {
  if (node_count == 0) invalid("node_count must be positive");
  if (node_count > kMaxMatrixNodes) {
    invalid("node_count exceeds " + std::to_string(kMaxMatrixNodes));
  }
  if (layer_count == 0 || layer_count > node_count) {
    invalid("layer_count must lie in [1, node_count]");
  }
  if (!(edge_density > 0.0 && edge_density <= 1.0)) {
    invalid("edge_density must lie in (0, 1]");
  }
  if (weight_max < 1) invalid("weight_max must be at least 1");
  if (!(feedback_edge_fraction >= 0.0 && feedback_edge_fraction < 1.0)) {
    invalid("feedback_edge_fraction must lie in [0, 1)");
  }
}

ActivityGraph generate_graph(const GeneratorParams& p) {
  p.validate();
  SplitMix64 rng(p.seed);
  const auto weight = [&] {
    return static_cast<Time>(1 + rng.below(static_cast<std::uint64_t>(p.weight_max)));
  };

  std::vector<Activity> nodes(p.node_count);
  for (std::size_t i = 0; i < p.node_count; ++i) {
    nodes[i].id = "n" + std::to_string(i);
  }

  std::vector<ActivityEdge> edges;
  for (std::size_t layer = 0; layer + 1 < p.layer_count; ++layer) {
    const std::size_t begin = layer_begin(layer, p);
    const std::size_t mid = layer_begin(layer + 1, p);
    const std::size_t end = layer_begin(layer + 2, p);
    for (std::size_t u = begin; u < mid; ++u) {
      for (std::size_t v = mid; v < end; ++v) {
        if (!rng.bernoulli(p.edge_density)) continue;
        edges.push_back({"e" + std::to_string(edges.size()), nodes[u].id,
                         nodes[v].id, weight(), EdgeKind::scheduling});
      }
    }
  }

  if (p.layer_count > 1 && p.feedback_edge_fraction > 0.0) {
    const double scheduled = static_cast<double>(edges.size());
    const auto feedback = static_cast<std::size_t>(std::floor(
        p.feedback_edge_fraction * scheduled / (1.0 - p.feedback_edge_fraction) +
        0.5));
    const std::size_t later = layer_begin(1, p);
    for (std::size_t k = 0; k < feedback; ++k) {
      const std::size_t tail = later + rng.below(p.node_count - later);
      const std::size_t head = rng.below(layer_begin(layer_of(tail, p), p));
      edges.push_back({"e" + std::to_string(edges.size()), nodes[tail].id,
                       nodes[head].id, weight(), EdgeKind::dependency_only});
    }
  }
  return build_graph(std::move(nodes), std::move(edges));
}

FaultScenario inject(const ActivityGraph& graph, NodeIndex root,
                     double detect_prob, std::uint64_t seed) {
  if (root >= graph.node_count()) {
    throw Error(ErrorCode::UnknownNode,
                "node index " + std::to_string(root) + " out of range");
  }
  check_detect_prob(detect_prob);
  const DependencyMatrix closure = transitive_closure(dependency_matrix(graph));

  SplitMix64 rng(seed);
  std::vector<NodeIndex> observed;
  for (NodeIndex m = 0; m < graph.node_count(); ++m) {
    if (m == root) {
      observed.push_back(m);
    } else if (closure.test(m, root) && rng.bernoulli(detect_prob)) {
      observed.push_back(m);
    }
  }
  return {root, detect_prob, make_symptoms(graph, std::span<const NodeIndex>(observed)),
          seed};
}

FaultScenario inject(const ActivityGraph& graph, std::string_view root,
                     double detect_prob, std::uint64_t seed) {
  return inject(graph, graph.index_of(root), detect_prob, seed);
}

TrialMetrics run_trial(const ActivityGraph& graph, const FaultScenario& scenario,
                       const RankPolicy& policy) {
  const LocalizationReport report =
      localize(graph, scenario.symptoms, policy, EdgeView::all_edges);
  TrialMetrics m;
  m.seed = scenario.seed;
  m.root = graph.id_of(scenario.root);
  m.symptom_count = scenario.symptoms.nodes.size();
  m.root_rank = report.rank_of(scenario.root);
  m.candidate_count = report.candidates.size();
  m.nodes_examined_localizer = report.nodes_examined;
  m.nodes_examined_baseline = graph.node_count();
  m.hit = m.root_rank != 0;
  return m;
}

std::string_view to_string(RootPolicy policy) noexcept {
  return policy == RootPolicy::critical_only ? "critical_only" : "uniform";
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.params.validate();
  if (config.trials == 0) invalid("trials must be at least 1");
  check_detect_prob(config.detect_prob);

  ExperimentReport report;
  report.config = config;
  report.rows.resize(config.trials);

  const std::size_t workers =
      std::clamp<std::size_t>(config.threads, 1, config.trials);
  if (workers == 1) {
    for (std::size_t i = 0; i < config.trials; ++i) {
      report.rows[i] = one_trial(config, i);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < config.trials; i = next++) {
          try {
            report.rows[i] = one_trial(config, i);
          } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Aggregates in trial order so the sums are independent of scheduling.
  const auto count = static_cast<double>(config.trials);
  double rank_sum = 0;
  double localizer_sum = 0;
  double baseline_sum = 0;
  std::size_t hits = 0;
  std::vector<std::size_t> ranks;
  ranks.reserve(config.trials);
  for (const TrialMetrics& row : report.rows) {
    rank_sum += static_cast<double>(row.root_rank);
    localizer_sum += static_cast<double>(row.nodes_examined_localizer);
    baseline_sum += static_cast<double>(row.nodes_examined_baseline);
    hits += row.hit ? 1 : 0;
    ranks.push_back(row.root_rank);
  }
  std::sort(ranks.begin(), ranks.end());
  const std::size_t mid = ranks.size() / 2;
  report.median_root_rank =
      ranks.size() % 2 == 1
          ? static_cast<double>(ranks[mid])
          : (static_cast<double>(ranks[mid - 1]) + static_cast<double>(ranks[mid])) / 2.0;
  report.mean_root_rank = rank_sum / count;
  report.hit_rate = static_cast<double>(hits) / count;
  report.mean_examined_localizer = localizer_sum / count;
  report.mean_examined_baseline = baseline_sum / count;
  report.mean_examined_ratio = baseline_sum / localizer_sum;
  return report;
}

}  // namespace critloc
