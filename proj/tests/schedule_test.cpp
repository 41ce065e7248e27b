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

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "critloc/error.hpp"
#include "critloc/schedule.hpp"
#include "test_support.hpp"

namespace critloc {
namespace {

using testing::robot;

// v0 -> {v1, v2} (w=5 each) -> v3 (w=1 each)
ActivityGraph diamond() {
  return testing::from_arcs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {5, 5, 1, 1});
}

Time path_weight(const ActivityGraph& g, const std::vector<NodeIndex>& path) {
  Time total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Time best = -1;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (g.tail_of(e) == path[i] && g.head_of(e) == path[i + 1] &&
          schedules(g.edges()[e].kind))
        best = std::max(best, g.edges()[e].weight);
    }
    EXPECT_GE(best, 0) << "no scheduling edge along path";
    total += best;
  }
  return total;
}

TEST(ForwardPass, Robot) {
  EXPECT_EQ(forward_pass(scheduling_subgraph(robot())), (std::vector<Time>{0, 2, 9, 15, 14}));
}

TEST(ForwardPass, SingleNodeAndChain) {
  EXPECT_EQ(forward_pass(testing::from_arcs(1, {})), std::vector<Time>{0});
  EXPECT_EQ(forward_pass(testing::chain({2, 3})), (std::vector<Time>{0, 2, 5}));
}

TEST(BackwardPass, Robot) {
  EXPECT_EQ(backward_pass(scheduling_subgraph(robot()), 15),
            (std::vector<Time>{0, 2, 9, 15, 15}));
}

TEST(BackwardPass, SingleNodeAndChain) {
  EXPECT_EQ(backward_pass(testing::from_arcs(1, {}), 0), std::vector<Time>{0});
  EXPECT_EQ(backward_pass(testing::chain({2, 3}), 5), (std::vector<Time>{0, 2, 5}));
}

TEST(ComputeSchedule, RobotCriticalTimeIsFifteen) {
  const Schedule s = compute_schedule(robot());
  EXPECT_EQ(s.duration, 15);
  EXPECT_EQ(s.critical_nodes, (std::vector<NodeIndex>{0, 1, 2, 3}));
  EXPECT_EQ(s.slack[4], 1);
  ASSERT_EQ(s.paths.size(), 1u);
  EXPECT_EQ(s.paths[0], (std::vector<NodeIndex>{0, 1, 2, 3}));
  EXPECT_FALSE(s.paths_truncated);
}

TEST(ComputeSchedule, FullGraphEqualsSchedulingView) {
  const Schedule full = compute_schedule(robot());
  const Schedule view = compute_schedule(scheduling_subgraph(robot()));
  EXPECT_EQ(full.earliest, view.earliest);
  EXPECT_EQ(full.latest, view.latest);
  EXPECT_EQ(full.paths, view.paths);
}

TEST(ComputeSchedule, SingleNode) {
  const Schedule s = compute_schedule(testing::from_arcs(1, {}));
  EXPECT_EQ(s.duration, 0);
  EXPECT_EQ(s.critical_nodes, std::vector<NodeIndex>{0});
  ASSERT_EQ(s.paths.size(), 1u);
  EXPECT_EQ(s.paths[0], std::vector<NodeIndex>{0});
}

TEST(ComputeSchedule, DiamondHasTwoCriticalPaths) {
  const Schedule s = compute_schedule(diamond());
  EXPECT_EQ(s.duration, 6);
  EXPECT_EQ(s.critical_nodes, (std::vector<NodeIndex>{0, 1, 2, 3}));
  ASSERT_EQ(s.paths.size(), 2u);
  EXPECT_EQ(s.paths[0], (std::vector<NodeIndex>{0, 1, 3}));
  EXPECT_EQ(s.paths[1], (std::vector<NodeIndex>{0, 2, 3}));
}

TEST(ComputeSchedule, PathLimit) {
  const Schedule s = compute_schedule(diamond(), 1);
  EXPECT_EQ(s.paths.size(), 1u);
  EXPECT_TRUE(s.paths_truncated);
  EXPECT_EQ(s.critical_nodes.size(), 4u);
}

TEST(ComputeSchedule, Errors) {
  try {
    compute_schedule(testing::from_arcs(0, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyGraph);
  }
  try {
    compute_schedule(testing::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CyclicSchedule);
    EXPECT_EQ(e.ids().size(), 3u);
  }
  EXPECT_THROW(forward_pass(testing::from_arcs(2, {{0, 1}, {1, 0}})), Error);
  EXPECT_THROW(backward_pass(testing::from_arcs(2, {{0, 1}, {1, 0}}), 1), Error);
}

TEST(ComputeSchedule, IsolatedNodeCarriesFullSlack) {
  const Schedule s = compute_schedule(testing::from_arcs(3, {{0, 1}}, {4}));
  EXPECT_EQ(s.earliest[2], 0);
  EXPECT_EQ(s.latest[2], 4);
  EXPECT_EQ(s.slack[2], 4);
  EXPECT_EQ(s.critical_nodes, (std::vector<NodeIndex>{0, 1}));
}

TEST(ClassifyActivities, Robot) {
  const ActivityGraph g = robot();
  const auto classes = classify_activities(g, compute_schedule(g));
  for (NodeIndex v = 0; v < 4; ++v) {
    EXPECT_EQ(classes[v].activity_class, ActivityClass::critical);
    EXPECT_FALSE(classes[v].overridden);
  }
  EXPECT_EQ(classes[4].activity_class, ActivityClass::non_critical);
}

TEST(ClassifyActivities, AllZeroWeightsAreCritical) {
  const ActivityGraph g = testing::from_arcs(4, {{0, 1}, {0, 2}, {2, 3}}, {0, 0, 0});
  for (const auto& c : classify_activities(g, compute_schedule(g)))
    EXPECT_EQ(c.activity_class, ActivityClass::critical);
}

TEST(ClassifyActivities, DeclaredOverridesWinAndAreFlagged) {
  const ActivityGraph base = robot();
  auto activities = base.activities();
  activities[4].declared_kind = DeclaredKind::critical;
  activities[1].declared_kind = DeclaredKind::non_critical;
  activities[0].declared_kind = DeclaredKind::critical;  // agrees with slack
  const ActivityGraph g = build_graph(activities, base.edges(), base.unit());
  const Schedule s = compute_schedule(g);
  EXPECT_EQ(s.critical_nodes, (std::vector<NodeIndex>{0, 1, 2, 3}));  // values untouched
  const auto classes = classify_activities(g, s);
  EXPECT_EQ(classes[4].activity_class, ActivityClass::critical);
  EXPECT_TRUE(classes[4].overridden);
  EXPECT_EQ(classes[1].activity_class, ActivityClass::non_critical);
  EXPECT_TRUE(classes[1].overridden);
  EXPECT_FALSE(classes[0].overridden);
}

TEST(ComputeScheduleProperty, MatchesAllPathsOracle) {
  std::mt19937_64 rng(41);
  for (int seed = 0; seed < 400; ++seed) {
    const std::size_t n = 1 + testing::uniform_index(rng, 10);
    const ActivityGraph g = testing::random_dag(rng, n, 0.35, 9);
    const testing::PathOracle oracle = testing::cpm_by_paths(g);
    const Schedule s = compute_schedule(g);
    ASSERT_EQ(s.duration, oracle.duration) << "seed " << seed;
    ASSERT_EQ(s.critical_nodes, oracle.critical) << "seed " << seed;
    EXPECT_EQ(s.paths.size(), oracle.longest_path_count) << "seed " << seed;
    for (NodeIndex v = 0; v < n; ++v) {
      EXPECT_GE(s.earliest[v], 0);
      EXPECT_LE(s.earliest[v], s.latest[v]);
    }
    for (const auto& path : s.paths) {
      EXPECT_EQ(path_weight(g, path), s.duration);
      for (NodeIndex v : path) EXPECT_EQ(s.slack[v], 0);
    }
  }
}

TEST(ComputeScheduleProperty, RaisingAWeightNeverShortensTheProject) {
  std::mt19937_64 rng(42);
  for (int seed = 0; seed < 200; ++seed) {
    const ActivityGraph g = testing::random_dag(rng, 2 + testing::uniform_index(rng, 9), 0.4, 9);
    if (g.edge_count() == 0) continue;
    auto edges = g.edges();
    edges[testing::uniform_index(rng, edges.size())].weight += 1 + testing::uniform_index(rng, 5);
    const ActivityGraph heavier = build_graph(g.activities(), edges);
    EXPECT_GE(compute_schedule(heavier).duration, compute_schedule(g).duration);
  }
}

// A dummy edge that restates a precedence already implied by the schedule
// leaves the duration alone and never removes a critical activity.
TEST(ComputeScheduleProperty, RedundantDummyEdgesKeepDuration) {
  std::mt19937_64 rng(43);
  int added = 0;
  for (int seed = 0; seed < 200; ++seed) {
    const ActivityGraph g = testing::random_dag(rng, 3 + testing::uniform_index(rng, 8), 0.4, 9);
    const auto reach = testing::closure_by_powers(testing::support(g, true));
    const std::size_t u = testing::uniform_index(rng, g.node_count());
    const std::size_t v = testing::uniform_index(rng, g.node_count());
    if (!reach[u][v]) continue;
    auto edges = g.edges();
    edges.push_back({"dummy", g.id_of(u), g.id_of(v), 0, EdgeKind::dummy});
    const ActivityGraph with_dummy = build_graph(g.activities(), edges);
    const Schedule before = compute_schedule(g);
    const Schedule after = compute_schedule(with_dummy);
    EXPECT_EQ(after.duration, before.duration);
    for (NodeIndex c : before.critical_nodes) EXPECT_TRUE(after.is_critical(c));
    ++added;
  }
  EXPECT_GT(added, 20);
}

}  // namespace
}  // namespace critloc
