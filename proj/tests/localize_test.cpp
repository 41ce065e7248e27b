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

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "critloc/error.hpp"
#include "critloc/localize.hpp"
#include "critloc/schedule.hpp"
#include "test_support.hpp"

namespace critloc {
namespace {

using testing::robot;

SymptomSet symptoms_of(const ActivityGraph& g, std::vector<std::string> ids) {
  return make_symptoms(g, std::span<const std::string>(ids));
}

std::vector<std::string> ranked_ids(const ActivityGraph& g, const LocalizationReport& r) {
  std::vector<std::string> ids;
  for (const Candidate& c : r.candidates) ids.push_back(g.id_of(c.node));
  return ids;
}

const Candidate& candidate(const LocalizationReport& r, NodeIndex v) {
  return r.candidates.at(r.rank_of(v) - 1);
}

ActivityGraph zero_graph(std::size_t n) { return testing::from_arcs(n, {}); }

DependencyMatrix closure_of(const ActivityGraph& g, EdgeView view = EdgeView::all_edges) {
  return transitive_closure(dependency_matrix(g, view));
}

// Random DAG of scheduling edges plus dependency-only feedback edges.
ActivityGraph dag_with_feedback(std::mt19937_64& rng, std::size_t n) {
  const ActivityGraph dag = testing::random_dag(rng, n, 0.3, 9);
  auto edges = dag.edges();
  const std::size_t extra = testing::uniform_index(rng, 3);
  for (std::size_t k = 0; k < extra && n > 1; ++k) {
    const std::size_t u = testing::uniform_index(rng, n);
    const std::size_t v = testing::uniform_index(rng, n);
    if (u == v) continue;
    edges.push_back({"f" + std::to_string(k), dag.id_of(u), dag.id_of(v), 1,
                     EdgeKind::dependency_only});
  }
  return build_graph(dag.activities(), edges);
}

TEST(CandidateSet, RobotAllEdges) {
  EXPECT_EQ(candidate_set(closure_of(robot()), 4), (std::vector<NodeIndex>{0, 1, 2, 3, 4}));
}

TEST(CandidateSet, RobotSchedulingView) {
  const DependencyMatrix c = closure_of(robot(), EdgeView::scheduling_only);
  EXPECT_EQ(candidate_set(c, 4), std::vector<NodeIndex>{4});
  EXPECT_EQ(candidate_set(c, 2), (std::vector<NodeIndex>{2, 3, 4}));
}

TEST(CandidateSet, ZeroMatrix) {
  const DependencyMatrix c = closure_of(zero_graph(3));
  for (NodeIndex s = 0; s < 3; ++s) EXPECT_EQ(candidate_set(c, s), std::vector<NodeIndex>{s});
}

TEST(CandidateSet, Errors) {
  const DependencyMatrix raw = dependency_matrix(robot());
  try {
    candidate_set(raw, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotClosed);
  }
  try {
    candidate_set(transitive_closure(raw), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownNode);
  }
}

TEST(MakeSymptoms, SortsAndRejectsBadInput) {
  const ActivityGraph g = robot();
  EXPECT_EQ(symptoms_of(g, {"v3", "v1"}).nodes, (std::vector<NodeIndex>{1, 3}));
  auto code_of = [&](std::vector<std::string> ids) {
    try {
      symptoms_of(g, ids);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::SchemaError;
  };
  EXPECT_EQ(code_of({"zz"}), ErrorCode::UnknownNode);
  EXPECT_EQ(code_of({"v1", "v1"}), ErrorCode::DuplicateId);
  EXPECT_EQ(code_of({}), ErrorCode::InvalidParams);
  const std::vector<NodeIndex> bad{7};
  EXPECT_THROW(make_symptoms(g, std::span<const NodeIndex>(bad)), Error);
}

TEST(Localize, RobotSchedulingViewSymptomV2) {
  const ActivityGraph g = robot();
  const auto r = localize(g, symptoms_of(g, {"v2"}), {}, EdgeView::scheduling_only);
  EXPECT_EQ(ranked_ids(g, r), (std::vector<std::string>{"v2", "v3", "v4"}));
  EXPECT_TRUE(r.independent.empty());
  EXPECT_TRUE(candidate(r, 2).is_critical);
  EXPECT_TRUE(candidate(r, 3).is_critical);
  EXPECT_FALSE(candidate(r, 4).is_critical);
  EXPECT_EQ(candidate(r, 2).min_distance, 0u);
  EXPECT_EQ(candidate(r, 3).min_distance, 1u);
  EXPECT_EQ(candidate(r, 4).min_distance, 1u);
  EXPECT_EQ(r.nodes_examined, 5u);
}

TEST(Localize, RobotAllEdgesSymptomV4) {
  const ActivityGraph g = robot();
  const auto r = localize(g, symptoms_of(g, {"v4"}));
  // Distances from v4 by repeated boolean products of the raw matrix.
  const auto hops = testing::hops_by_powers(testing::support(g), 4);
  EXPECT_EQ(hops, (std::vector<std::size_t>{1, 2, 3, 2, 0}));
  EXPECT_EQ(ranked_ids(g, r), (std::vector<std::string>{"v0", "v1", "v3", "v2", "v4"}));
  for (const Candidate& c : r.candidates) {
    EXPECT_EQ(c.min_distance, hops[c.node]);
    EXPECT_EQ(c.explains, std::vector<NodeIndex>{4});
    EXPECT_EQ(c.scc, 0u);
  }
  EXPECT_TRUE(r.independent.empty());
  EXPECT_EQ(r.nodes_examined, 5u);
  EXPECT_FALSE(r.criticality_from_declared);
}

TEST(Localize, SingleNode) {
  const ActivityGraph g = zero_graph(1);
  const auto r = localize(g, symptoms_of(g, {"v0"}));
  ASSERT_EQ(r.candidates.size(), 1u);
  EXPECT_EQ(r.candidates[0].explains, std::vector<NodeIndex>{0});
  EXPECT_EQ(r.independent, std::vector<NodeIndex>{0});
  EXPECT_EQ(r.nodes_examined, 1u);
}

TEST(Localize, CustomPolicyOrder) {
  const ActivityGraph g = robot();
  const auto r = localize(g, symptoms_of(g, {"v4"}), RankPolicy{{RankKey::distance_asc}});
  EXPECT_EQ(ranked_ids(g, r), (std::vector<std::string>{"v4", "v0", "v1", "v3", "v2"}));
  const auto by_index = localize(g, symptoms_of(g, {"v4"}), RankPolicy{{}});
  EXPECT_EQ(ranked_ids(g, by_index), (std::vector<std::string>{"v0", "v1", "v2", "v3", "v4"}));
}

TEST(Localize, CyclicScheduleHandling) {
  auto g = testing::from_arcs(3, {{0, 1}, {1, 0}, {1, 2}});
  const SymptomSet s = symptoms_of(g, {"v0"});
  try {
    localize(g, s, {}, EdgeView::scheduling_only);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CyclicSchedule);
  }
  auto activities = g.activities();
  activities[2].declared_kind = DeclaredKind::critical;
  g = build_graph(activities, g.edges());
  const auto r = localize(g, s);
  EXPECT_TRUE(r.criticality_from_declared);
  EXPECT_EQ(ranked_ids(g, r), (std::vector<std::string>{"v2", "v0", "v1"}));
}

TEST(IndependentFaults, ZeroMatrixBothIndependent) {
  const ActivityGraph g = zero_graph(2);
  EXPECT_EQ(independent_faults(closure_of(g), symptoms_of(g, {"v0", "v1"})),
            (std::vector<NodeIndex>{0, 1}));
}

TEST(IndependentFaults, SharedUpstreamDisqualifies) {
  const ActivityGraph g = testing::chain({1});
  EXPECT_TRUE(independent_faults(closure_of(g), symptoms_of(g, {"v0", "v1"})).empty());
  EXPECT_EQ(independent_faults(closure_of(g), symptoms_of(g, {"v1"})),
            std::vector<NodeIndex>{1});
  EXPECT_TRUE(independent_faults(closure_of(g), symptoms_of(g, {"v0"})).empty());
}

TEST(IndependentFaults, DisconnectedComponents) {
  const ActivityGraph g = testing::from_arcs(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(independent_faults(closure_of(g), symptoms_of(g, {"v1", "v3"})),
            (std::vector<NodeIndex>{1, 3}));
}

TEST(IndependentFaults, RobotViews) {
  const ActivityGraph g = robot();
  const SymptomSet v4 = symptoms_of(g, {"v4"});
  EXPECT_TRUE(independent_faults(closure_of(g), v4).empty());
  EXPECT_EQ(independent_faults(closure_of(g, EdgeView::scheduling_only), v4),
            std::vector<NodeIndex>{4});
}

TEST(IndependentFaults, RequiresClosure) {
  const ActivityGraph g = zero_graph(2);
  EXPECT_THROW(independent_faults(dependency_matrix(g), symptoms_of(g, {"v0"})), Error);
}

TEST(AnnotateMatrix, ZeroMatrix) {
  const ActivityGraph g = zero_graph(3);
  const auto a = annotate_matrix(dependency_matrix(g), localize(g, symptoms_of(g, {"v0"})));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(a.mark(i, j), i == 0 && j == 0 ? CellMark::independent_fault : CellMark::none);
}

TEST(AnnotateMatrix, RobotAllEdgesV4) {
  const ActivityGraph g = robot();
  const auto a = annotate_matrix(dependency_matrix(g), localize(g, symptoms_of(g, {"v4"})));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      EXPECT_EQ(a.mark(i, j), i == 4 && j == 0 ? CellMark::suspect_path : CellMark::none)
          << i << "," << j;
}

TEST(AnnotateMatrix, RobotSchedulingV4) {
  const ActivityGraph g = robot();
  const auto r = localize(g, symptoms_of(g, {"v4"}), {}, EdgeView::scheduling_only);
  const auto a = annotate_matrix(dependency_matrix(g, EdgeView::scheduling_only), r);
  EXPECT_EQ(a.mark(4, 4), CellMark::independent_fault);
  EXPECT_EQ(std::count(a.marks.begin(), a.marks.end(), CellMark::none), 24);
}

TEST(AnnotateMatrix, DimensionMismatch) {
  const ActivityGraph g = robot();
  const auto r = localize(g, symptoms_of(g, {"v4"}));
  try {
    annotate_matrix(dependency_matrix(zero_graph(3)), r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

class LocalizeProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{2024};

  SymptomSet random_symptoms(std::size_t n) {
    std::vector<NodeIndex> nodes;
    for (NodeIndex v = 0; v < n; ++v)
      if (testing::uniform_unit(rng) < 0.3) nodes.push_back(v);
    if (nodes.empty()) nodes.push_back(testing::uniform_index(rng, n));
    return SymptomSet{nodes};
  }
};

TEST_F(LocalizeProperty, CandidatesMatchClosureOracle) {
  for (int trial = 0; trial < 300; ++trial) {
    const ActivityGraph g = dag_with_feedback(rng, 1 + testing::uniform_index(rng, 10));
    const SymptomSet symptoms = random_symptoms(g.node_count());
    const auto r = localize(g, symptoms);
    const auto d = testing::support(g);
    const auto reach = testing::closure_by_powers(d);
    std::set<NodeIndex> expected;
    for (NodeIndex s : symptoms.nodes) {
      expected.insert(s);
      const auto hops = testing::hops_by_powers(d, s);
      for (NodeIndex v = 0; v < g.node_count(); ++v) {
        if (reach[s][v]) expected.insert(v);
        if (v == s || reach[s][v]) {
          const Candidate& c = candidate(r, v);
          EXPECT_TRUE(std::binary_search(c.explains.begin(), c.explains.end(), s));
          EXPECT_LE(c.min_distance, hops[v]);
        }
      }
      // Soundness: every symptom explains itself.
      EXPECT_GT(r.rank_of(s), 0u);
    }
    std::set<NodeIndex> got;
    for (const Candidate& c : r.candidates) got.insert(c.node);
    ASSERT_EQ(got, expected) << "trial " << trial;
  }
}

TEST_F(LocalizeProperty, InjectedRootExplainsEverySymptom) {
  for (int trial = 0; trial < 60; ++trial) {
    const ActivityGraph g = dag_with_feedback(rng, 1 + testing::uniform_index(rng, 10));
    const auto reach = testing::closure_by_powers(testing::support(g));
    for (NodeIndex root = 0; root < g.node_count(); ++root) {
      std::vector<NodeIndex> nodes;
      for (NodeIndex m = 0; m < g.node_count(); ++m)
        if (m == root || reach[m][root]) nodes.push_back(m);
      const SymptomSet symptoms{nodes};
      const auto r = localize(g, symptoms);
      ASSERT_GT(r.rank_of(root), 0u);
      EXPECT_EQ(candidate(r, root).explains, symptoms.nodes);
    }
  }
}

TEST_F(LocalizeProperty, Deterministic) {
  for (int trial = 0; trial < 50; ++trial) {
    const ActivityGraph g = dag_with_feedback(rng, 1 + testing::uniform_index(rng, 10));
    const SymptomSet symptoms = random_symptoms(g.node_count());
    const auto a = localize(g, symptoms);
    const auto b = localize(g, symptoms);
    ASSERT_EQ(a.candidates.size(), b.candidates.size());
    for (std::size_t i = 0; i < a.candidates.size(); ++i) {
      EXPECT_EQ(a.candidates[i].node, b.candidates[i].node);
      EXPECT_EQ(a.candidates[i].explains, b.candidates[i].explains);
    }
    EXPECT_EQ(a.examination_order, b.examination_order);
  }
}

TEST_F(LocalizeProperty, AllEdgesViewContainsSchedulingView) {
  for (int trial = 0; trial < 200; ++trial) {
    const ActivityGraph g = dag_with_feedback(rng, 1 + testing::uniform_index(rng, 10));
    const SymptomSet symptoms = random_symptoms(g.node_count());
    const auto all = localize(g, symptoms);
    const auto sched = localize(g, symptoms, {}, EdgeView::scheduling_only);
    for (const Candidate& c : sched.candidates) EXPECT_GT(all.rank_of(c.node), 0u);
  }
}

TEST_F(LocalizeProperty, ExaminedAccountingMatchesRecount) {
  for (int trial = 0; trial < 300; ++trial) {
    const ActivityGraph g = dag_with_feedback(rng, 1 + testing::uniform_index(rng, 10));
    const SymptomSet symptoms = random_symptoms(g.node_count());
    const auto r = localize(g, symptoms);
    std::set<NodeIndex> seen(r.examination_order.begin(), r.examination_order.end());
    EXPECT_EQ(seen.size(), r.examination_order.size()) << "node examined twice";
    std::set<NodeIndex> expected;
    for (const Candidate& c : r.candidates) expected.insert(c.node);
    const auto oracle = testing::cpm_by_paths(g);
    std::size_t critical_extra = 0;
    for (NodeIndex v : oracle.critical) {
      if (!expected.count(v)) ++critical_extra;
    }
    EXPECT_EQ(r.nodes_examined, expected.size() + critical_extra);
    EXPECT_LE(r.nodes_examined, g.node_count());
    // Critical nodes come first in the examination order.
    for (std::size_t i = 0; i < oracle.critical.size(); ++i)
      EXPECT_EQ(r.examination_order[i], oracle.critical[i]);
  }
}

TEST_F(LocalizeProperty, RankingRespectsPolicyKeys) {
  for (int trial = 0; trial < 200; ++trial) {
    const ActivityGraph g = dag_with_feedback(rng, 1 + testing::uniform_index(rng, 10));
    const auto r = localize(g, random_symptoms(g.node_count()));
    for (std::size_t i = 0; i + 1 < r.candidates.size(); ++i) {
      const Candidate& a = r.candidates[i];
      const Candidate& b = r.candidates[i + 1];
      const auto ka = std::make_tuple(-static_cast<long>(a.explains.size()), !a.is_critical,
                                      a.min_distance, a.node);
      const auto kb = std::make_tuple(-static_cast<long>(b.explains.size()), !b.is_critical,
                                      b.min_distance, b.node);
      EXPECT_LT(ka, kb);
    }
  }
}

TEST_F(LocalizeProperty, IndependentMarksOnlyOnSymptomDiagonal) {
  for (int trial = 0; trial < 200; ++trial) {
    const ActivityGraph g = dag_with_feedback(rng, 1 + testing::uniform_index(rng, 10));
    const auto r = localize(g, random_symptoms(g.node_count()));
    const auto a = annotate_matrix(dependency_matrix(g), r);
    const std::size_t n = g.node_count();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a.mark(i, j) == CellMark::independent_fault) {
          EXPECT_EQ(i, j);
          EXPECT_TRUE(r.symptoms.contains(i));
        }
        if (a.mark(i, j) == CellMark::suspect_path) {
          EXPECT_TRUE(r.symptoms.contains(i));
          EXPECT_TRUE(a.matrix.test(i, j));
        }
      }
    }
  }
}

}  // namespace
}  // namespace critloc
