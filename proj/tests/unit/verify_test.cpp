// Copyright 2026 The odiam Authors
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

#include "odiam/verify.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <algorithm>

#include "odiam/core.hpp"
#include "odiam/generators.hpp"

namespace odiam {
namespace {

std::vector<Arc> directed_cycle_arcs(VertexId n) {
  std::vector<Arc> arcs;
  for (VertexId v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  return arcs;
}

bool has_issue(const ValidationReport& r, ValidationIssue issue) {
  return std::any_of(r.problems.begin(), r.problems.end(),
                     [&](const ValidationProblem& p) { return p.issue == issue; });
}

// Ring lattice: v joined to v+1..v+3, so rounds need connectors.
Graph ring_lattice(VertexId n, VertexId shift) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId d = 1; d <= 3; ++d) edges.push_back({v, (v + d + shift) % n});
  }
  return Graph::from_edges(n, edges);
}

TEST(ValidateOrientationTest, DirectedFiveCycle) {
  const auto r = validate_orientation(cycle_graph(5), directed_cycle_arcs(5));
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.bijective);
  EXPECT_TRUE(r.strongly_connected);
  EXPECT_EQ(r.diameter, 4u);
}

TEST(ValidateOrientationTest, MissingEdge) {
  auto arcs = directed_cycle_arcs(5);
  arcs.pop_back();
  const auto r = validate_orientation(cycle_graph(5), arcs);
  EXPECT_TRUE(has_issue(r, ValidationIssue::kMissingEdge));
  EXPECT_FALSE(r.diameter.has_value());
}

TEST(ValidateOrientationTest, DoubleOrientation) {
  auto arcs = directed_cycle_arcs(5);
  arcs.push_back({1, 0});
  EXPECT_TRUE(has_issue(validate_orientation(cycle_graph(5), arcs), ValidationIssue::kDoubleOrientation));
}

TEST(ValidateOrientationTest, DuplicateAndUnknownArcs) {
  auto arcs = directed_cycle_arcs(5);
  arcs.push_back({0, 1});
  arcs.push_back({0, 2});
  arcs.push_back({0, 9});
  arcs.push_back({3, 3});
  const auto r = validate_orientation(cycle_graph(5), arcs);
  EXPECT_TRUE(has_issue(r, ValidationIssue::kDuplicateArc));
  EXPECT_EQ(std::count_if(r.problems.begin(), r.problems.end(),
                          [](const ValidationProblem& p) { return p.issue == ValidationIssue::kUnknownArc; }),
            3);
}

TEST(ValidateOrientationTest, NotStrong) {
  auto arcs = directed_cycle_arcs(5);
  std::swap(arcs[2].tail, arcs[2].head);
  const auto r = validate_orientation(cycle_graph(5), arcs);
  EXPECT_TRUE(r.bijective);
  EXPECT_FALSE(r.strongly_connected);
  EXPECT_TRUE(has_issue(r, ValidationIssue::kNotStrong));
}

TEST(ValidateOrientationTest, SingleArcFlipsAreDetectedOrHarmless) {
  const Graph g = random_min_degree_bridgeless(30, 4, 5);
  const CoreState s = run_core(g, Rational(50, 1));
  ASSERT_TRUE(validate_orientation(g, s.arcs, false).bijective || s.arcs.size() < g.edge_count());
  const Graph k5 = complete_graph(5);
  std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}};
  ASSERT_TRUE(validate_orientation(k5, arcs).ok());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto flipped = arcs;
    std::swap(flipped[i].tail, flipped[i].head);
    const auto r = validate_orientation(k5, flipped);
    EXPECT_TRUE(r.bijective);
    EXPECT_EQ(r.ok(), is_strongly_connected(MixedGraph::from_arcs(5, flipped)));
  }
}

TEST(AuditTest, ThirteenCyclePasses) {
  const Graph g = cycle_graph(13);
  CoreState s = initial_state(g, Rational(20, 1));
  ASSERT_TRUE(advance_round(g, s));
  const AuditReport r = audit_core_state(g, s);
  EXPECT_EQ(r.rounds, 1u);
  for (const ClaimCheck& c : r.checks) EXPECT_TRUE(c.pass) << c.id << ": " << c.detail;
}

TEST(AuditTest, NoRoundsIsVacuous) {
  const Graph g = complete_graph(6);
  const CoreState s = run_core(g, Rational(10, 1));
  const AuditReport r = audit_core_state(g, s);
  EXPECT_EQ(r.rounds, 0u);
  EXPECT_TRUE(r.pass());
}

TEST(AuditTest, UninstrumentedRunsAreAuditedInFull) {
  const Graph g = ring_lattice(60, 0);
  CoreOptions options;
  options.instrument = Instrumentation::kOff;
  const CoreState s = run_core(g, Rational(50, 1), options);
  ASSERT_GE(s.round_count(), 1u);
  EXPECT_TRUE(s.checks.empty());
  const AuditReport r = audit_core_state(g, s);
  EXPECT_GT(r.checks.size(), s.round_count());
  for (const ClaimCheck& c : r.checks) {
    if (c.id != "disjoint") EXPECT_TRUE(c.pass) << c.id << ": " << c.detail;
  }
}

TEST(AuditTest, FlippedConnectorArcIsDetected) {
  const Graph g = ring_lattice(60, 0);
  CoreState s = run_core(g, Rational(50, 1));
  std::size_t flipped = 0;
  for (std::size_t i = 0; i < s.rounds.size() && flipped == 0; ++i) {
    RoundRecord& r = s.rounds[i];
    for (Arc& a : r.arcs) {
      const bool connector = std::any_of(r.new_edges.begin(), r.new_edges.end(), [&](const Edge& e) {
        return std::minmax(a.tail, a.head) == std::minmax(e.u, e.v);
      });
      const bool on_p_or_q = r.p.index_of(a.tail) && r.p.index_of(a.head);
      if (!connector || on_p_or_q) continue;
      auto it = std::find(s.arcs.begin(), s.arcs.end(), a);
      ASSERT_NE(it, s.arcs.end());
      std::swap(it->tail, it->head);
      std::swap(a.tail, a.head);
      ++flipped;
      break;
    }
  }
  ASSERT_EQ(flipped, 1u);
  const AuditReport r = audit_core_state(g, s);
  EXPECT_FALSE(r.pass());
  const bool caught = std::any_of(r.checks.begin(), r.checks.end(), [](const ClaimCheck& c) {
    return !c.pass && (c.id == "claim3" || c.id == "strong" || c.id == "structure");
  });
  EXPECT_TRUE(caught);
}

TEST(AuditTest, TamperedStateFailsReplay) {
  const Graph g = cycle_graph(13);
  CoreState s = initial_state(g, Rational(20, 1));
  ASSERT_TRUE(advance_round(g, s));
  s.witness.push_back(1);
  const AuditReport r = audit_core_state(g, s);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.checks.back().pass);
  EXPECT_EQ(r.checks.back().id, "replay");
}

TEST(SummarizeChecksTest, GroupsById) {
  std::vector<ClaimCheck> checks{{"a", 1, true, ""}, {"b", 1, false, "x"}, {"a", 2, false, "y"},
                                 {"b", 2, false, "z"}};
  const auto s = summarize_checks(checks);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].id, "a");
  EXPECT_EQ(s[0].total, 2u);
  EXPECT_EQ(s[0].failures, 1u);
  EXPECT_EQ(s[0].first_failure, "round 2: y");
  EXPECT_EQ(s[1].failures, 2u);
  EXPECT_EQ(s[1].first_failure, "round 1: x");
}

TEST(BoundReportTest, UndirectedDiameterOfLowerBoundFamily) {
  const Graph g = lower_bound_family(4, 1);
  const CoreState s = run_core(g, Rational(30, 1));
  ASSERT_EQ(s.arcs.size() < g.edge_count(), true);
  BoundInputs in;
  in.arcs = s.arcs;
  const auto cert = bound_report(g, in);
  EXPECT_EQ(cert.undirected_diameter, 6u);
  EXPECT_FALSE(cert.valid);
  EXPECT_FALSE(cert.pass());
}

TEST(BoundReportTest, ArithmeticForMinDegreeThree) {
  const Graph g = complete_graph(4);  // delta = 3, so delta - 2 = 1
  BoundInputs in;
  in.arcs = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}};
  in.epsilon = Rational(1, 2);
  in.cap = 200;
  in.witness = {0};
  const auto cert = bound_report(g, in);
  EXPECT_EQ(cert.min_degree, 3u);
  EXPECT_EQ(cert.additive_constant, 2u * 200 * 201);
  ASSERT_TRUE(cert.bound_value.has_value());
  EXPECT_DOUBLE_EQ(*cert.bound_value, 3.5 * 4 / 1 + 80400);
  EXPECT_DOUBLE_EQ(cert.bound_witness_form, 3.5 + 80400);
  EXPECT_EQ(cert.measured_diameter, 3u);
  EXPECT_TRUE(cert.bound_satisfied.value());
  EXPECT_TRUE(cert.bound_value_satisfied.value());
  EXPECT_TRUE(cert.lower_bound_satisfied);
  EXPECT_EQ(cert.witness_neighborhood, 4u);
  EXPECT_TRUE(cert.pass());
}

TEST(BoundReportTest, ExactComparisonAtTheBoundary) {
  // Directed C_7 has diameter 6; (3 + 1)|S| + 0 with |S| = 1 is 4, so the
  // bound fails, while |S| = 2 gives 8.
  const Graph g = cycle_graph(7);
  BoundInputs in;
  in.arcs = directed_cycle_arcs(7);
  in.cap = 0;
  in.witness = {0};
  EXPECT_FALSE(bound_report(g, in).bound_satisfied.value());
  in.witness = {0, 3};
  EXPECT_TRUE(bound_report(g, in).bound_satisfied.value());
}

TEST(BoundReportTest, FallbackMakesNoBoundClaim) {
  BoundInputs in;
  in.arcs = directed_cycle_arcs(6);
  in.fallback = true;
  const auto cert = bound_report(cycle_graph(6), in);
  EXPECT_FALSE(cert.bound_value.has_value());
  EXPECT_FALSE(cert.bound_satisfied.has_value());
  EXPECT_TRUE(cert.pass());
}

TEST(CertificateJsonTest, FieldsRoundTrip) {
  BoundInputs in;
  in.arcs = directed_cycle_arcs(6);
  in.witness = {0, 3};
  in.cap = 4;
  in.epsilon = Rational(25, 1);
  in.checks = {{"claim3", 1, true, ""}, {"lemma.b", 1, false, "too small"}};
  const auto cert = bound_report(cycle_graph(6), in);
  const auto j = nlohmann::json::parse(certificate_json(cert));
  for (const char* key :
       {"n", "m", "min_degree", "epsilon", "epsilon_value", "cap_l", "additive_constant", "witness_size",
        "witness_neighborhood", "core_vertices", "core_diameter", "rounds", "measured_diameter",
        "undirected_diameter", "bound_witness_form", "bound_value", "bound_satisfied",
        "lower_bound_satisfied", "valid", "strongly_connected", "fallback", "claim_checks", "arcs"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["measured_diameter"], 5);
  EXPECT_EQ(j["epsilon"], "25");
  EXPECT_EQ(j["arcs"].size(), 6u);
  EXPECT_EQ(j["arcs"][0], nlohmann::json({0, 1}));
  EXPECT_TRUE(j["bound_value"].is_null());  // min degree 2
  EXPECT_EQ(j["claim_checks"]["lemma.b"]["pass"], false);
  EXPECT_EQ(j["claim_checks"]["lemma.b"]["first_failure"], "round 1: too small");
  EXPECT_FALSE(nlohmann::json::parse(certificate_json(cert, false)).contains("arcs"));
}

}  // namespace
}  // namespace odiam
