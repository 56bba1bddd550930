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

#include "odiam/core.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>

#include "odiam/error.hpp"
#include "odiam/generators.hpp"
#include "odiam/graph.hpp"

namespace odiam {
namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

std::vector<char> core_of(std::size_t n, std::initializer_list<VertexId> members) {
  std::vector<char> in(n, 0);
  for (VertexId v : members) in[v] = 1;
  return in;
}

// Chain of diamonds: hubs 0, 3, 6, ... joined through two middle vertices.
Graph diamond_chain(std::size_t diamonds) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < diamonds; ++i) {
    const auto hub = static_cast<VertexId>(3 * i);
    edges.push_back({hub, hub + 1});
    edges.push_back({hub, hub + 2});
    edges.push_back({hub + 1, hub + 3});
    edges.push_back({hub + 2, hub + 3});
  }
  return Graph::from_edges(3 * diamonds + 1, edges);
}

TEST(RunCoreTest, ShallowGraphTerminatesImmediately) {
  const Graph g = lower_bound_family(4, 1);  // diameter 6
  const CoreState s = run_core(g, Rational(10, 1));
  EXPECT_EQ(s.cap, 10u);
  EXPECT_EQ(s.round_count(), 0u);
  EXPECT_EQ(s.core_vertices, std::vector<VertexId>{0});
  EXPECT_EQ(s.witness, std::vector<VertexId>{0});
  EXPECT_TRUE(s.arcs.empty());
}

TEST(RunCoreTest, LowerBoundFamilyRoundsPassEveryCheck) {
  const Graph g = lower_bound_family(4, 3);
  ASSERT_EQ(g.vertex_count(), 25u);
  const CoreState s = run_core(g, Rational(30, 1));
  EXPECT_EQ(s.cap, 4u);
  EXPECT_GE(s.round_count(), 1u);
  EXPECT_FALSE(s.checks.empty());
  for (const ClaimCheck& c : s.checks) EXPECT_TRUE(c.pass) << c.id << ": " << c.detail;
  const DistanceMap d = bfs_distance(g, std::span<const VertexId>(s.core_vertices));
  EXPECT_LE(d.max_finite().value(), s.cap);
}

TEST(RunCoreTest, PreconditionsAreEnforced) {
  EXPECT_EQ(code_of([] { run_core(complete_graph(4), Rational(0, 1)); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { run_core(complete_graph(4), Rational(-1, 1)); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { run_core(cycle_graph(7), Rational(1, 1)); }), ErrorCode::kMinDegreeTooSmall);
  const Graph two_k4 = Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                              {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  EXPECT_EQ(code_of([&] { run_core(two_k4, Rational(1, 1)); }), ErrorCode::kDisconnected);
  const Graph bridged = Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                               {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                                               {3, 4}});
  EXPECT_EQ(code_of([&] { run_core(bridged, Rational(1, 1)); }), ErrorCode::kNotBridgeless);
}

TEST(RunCoreTest, MonotoneCoresAndFrozenArcs) {
  const Graph g = random_min_degree_bridgeless(300, 3, 12);
  CoreOptions options;
  std::vector<Arc> seen_arcs;
  std::vector<VertexId> seen_vertices{0};
  CoreState s = initial_state(g, Rational(50, 1), options);
  while (advance_round(g, s, options)) {
    ASSERT_GE(s.arcs.size(), seen_arcs.size());
    EXPECT_TRUE(std::equal(seen_arcs.begin(), seen_arcs.end(), s.arcs.begin()));
    EXPECT_TRUE(std::equal(seen_vertices.begin(), seen_vertices.end(), s.core_vertices.begin()));
    seen_arcs = s.arcs;
    seen_vertices = s.core_vertices;
  }
  EXPECT_GE(s.round_count(), 1u);
}

TEST(SelectPathPTest, CycleOfThirteen) {
  const Path p = select_path_p(cycle_graph(13), core_of(13, {0}), 5);
  EXPECT_EQ(p.length(), 6u);
  EXPECT_EQ(p.vertices, (std::vector<VertexId>{0, 1, 2, 3, 4, 5, 6}));
}

TEST(SelectPathPTest, TruncatesToMultipleOfThree) {
  const Graph g = diamond_chain(4);  // hub 12 at distance 8 from 0
  const Path p = select_path_p(g, core_of(g.vertex_count(), {0}), 2);
  EXPECT_EQ(p.length(), 6u);
  const DistanceMap d = bfs_distance(g, {VertexId{0}});
  for (std::size_t j = 0; j < p.vertices.size(); ++j) EXPECT_EQ(d.at(p[j]), j);
}

TEST(SelectPathPTest, MatchesIndependentLayering) {
  const Graph g = lower_bound_family(5, 2);
  const DistanceMap d = bfs_distance(g, {VertexId{0}});
  const std::uint32_t far = d.max_finite().value();
  const Path p = select_path_p(g, core_of(g.vertex_count(), {0}), 2);
  EXPECT_EQ(p.length(), 3 * (far / 3));
  EXPECT_TRUE(is_path_in(g, p));
}

TEST(SelectPathPTest, NoFarVertexIsAnError) {
  EXPECT_EQ(code_of([] { select_path_p(cycle_graph(9), core_of(9, {0}), 4); }),
            ErrorCode::kNoFarVertex);
}

TEST(SelectPathQTest, CycleReturnsTheOtherWay) {
  const Graph g = cycle_graph(13);
  const Path p = select_path_p(g, core_of(13, {0}), 5);
  const Path q = select_path_q(g, p, core_of(13, {0}), {3, 6});
  EXPECT_EQ(q.vertices, (std::vector<VertexId>{6, 7, 8, 9, 10, 11, 12, 0}));
}

// Theta graph: core 0, P = 0-1-2-3, two returns 3-4-5-0 and 3-6-7-0 of equal
// length, and only the second passes through a vertex of A'.
TEST(SelectPathQTest, PrefersRoutesThroughAPrime) {
  const Graph g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {3, 6}, {6, 7}, {7, 0}});
  const Path p{{0, 1, 2, 3}};
  EXPECT_EQ(select_path_q(g, p, core_of(8, {0}), {3}).vertices, (std::vector<VertexId>{3, 4, 5, 0}));
  EXPECT_EQ(select_path_q(g, p, core_of(8, {0}), {3, 6}).vertices,
            (std::vector<VertexId>{3, 6, 7, 0}));
}

// P = 0-1-2-3. The return 3-4-1-0 would traverse u_1 -> u_0 against P, so
// Q must leave 1 through the detour 1-5-0.
TEST(SelectPathQTest, NeverReversesAnArcOfP) {
  const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {5, 0}});
  const Path p{{0, 1, 2, 3}};
  const Path q = select_path_q(g, p, core_of(6, {0}), {3});
  EXPECT_EQ(q.vertices, (std::vector<VertexId>{3, 4, 1, 5, 0}));
}

TEST(IndexSetsTest, IndexArithmetic) {
  const Path p{{10, 11, 12, 13, 14, 15, 16}};  // p = 6
  const Path q7{{16, 20, 21, 22, 23, 24, 25, 26, 10}};  // q + 1 = 8, q = 7
  const IndexSets s = index_sets(p, q7);
  EXPECT_EQ(s.a_prime, (std::vector<VertexId>{13, 16}));
  EXPECT_EQ(s.b_prime, (std::vector<VertexId>{16, 22}));
  const Path q1{{16, 30, 10}};  // q = 1
  EXPECT_TRUE(index_sets(p, q1).b_prime.empty());
  const Path q2{{16, 30, 31, 10}};  // q = 2: w_0 only
  EXPECT_EQ(index_sets(p, q2).b_prime, std::vector<VertexId>{16});
}

TEST(OverlappingTest, Examples) {
  EXPECT_TRUE(overlapping(complete_graph(3), 0, 1));
  EXPECT_FALSE(overlapping(cycle_graph(6), 0, 3));
  EXPECT_TRUE(overlapping(cycle_graph(4), 0, 2));
  EXPECT_FALSE(overlapping(cycle_graph(5), 0, 2));
  EXPECT_EQ(code_of([] { overlapping(cycle_graph(4), 1, 1); }), ErrorCode::kSameVertex);
}

TEST(SecondOrderSetsTest, EmptyWhenBInsideA) {
  const Graph g = cycle_graph(12);
  const auto s = second_order_sets(g, {0, 3, 6}, {3, 6});
  EXPECT_TRUE(s.a_double.empty());
}

TEST(SecondOrderSetsTest, OverlappingCandidatesAreExcluded) {
  // 0 and 1 adjacent with common neighbour 2; 5 far from everything.
  const Graph g = Graph::from_edges(8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}});
  const auto s = second_order_sets(g, {0}, {1, 5});
  EXPECT_EQ(s.a_double, std::vector<VertexId>{5});
  EXPECT_TRUE(s.b_double.empty());
}

TEST(SecondOrderSetsTest, MatchesPairwiseTable) {
  const Graph g = random_min_degree_bridgeless(14, 3, 4);
  const std::vector<VertexId> a{0, 4, 9};
  const std::vector<VertexId> b{2, 4, 7, 11, 13};
  const auto s = second_order_sets(g, a, b);
  std::vector<VertexId> want_a;
  for (VertexId v : b) {
    if (std::find(a.begin(), a.end(), v) != a.end()) continue;
    bool free = true;
    for (VertexId x : a) free = free && !overlapping(g, v, x);
    if (free) want_a.push_back(v);
  }
  std::vector<VertexId> want_b;
  for (VertexId v : a) {
    if (std::find(b.begin(), b.end(), v) != b.end()) continue;
    bool free = true;
    for (VertexId x : b) free = free && !overlapping(g, v, x);
    if (free) want_b.push_back(v);
  }
  EXPECT_EQ(s.a_double, want_a);
  EXPECT_EQ(s.b_double, want_b);
}

TEST(ChooseConnectorsTest, NothingToPair) {
  EXPECT_TRUE(choose_connectors(cycle_graph(9), {0, 3}, {0, 3}, {0, 3}, {0, 3}).empty());
}

TEST(ChooseConnectorsTest, AdjacentPartnerUsesEdgePlusDetour) {
  const Graph g = complete_graph(3);
  const auto c = choose_connectors(g, {0}, {1}, {0}, {1});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].a, 0u);
  EXPECT_EQ(c[0].b, 1u);
  EXPECT_EQ(c[0].path1.vertices, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(c[0].path2.vertices, (std::vector<VertexId>{0, 2, 1}));
}

TEST(ChooseConnectorsTest, MissingPartnerIsAnError) {
  EXPECT_EQ(code_of([] { choose_connectors(cycle_graph(9), {0}, {4}, {0}, {4}); }),
            ErrorCode::kNoPartner);
}

// Independent check of connector paths on rounds of real runs.
TEST(ChooseConnectorsTest, RecordedConnectorsAreTwoIndependentShortPaths) {
  std::size_t seen = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::vector<Edge> edges;
    const std::size_t n = 60;
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId d = 1; d <= 3; ++d) edges.push_back({v, static_cast<VertexId>((v + d + seed % 2) % n)});
    }
    const Graph g = Graph::from_edges(n, edges);
    const CoreState s = run_core(g, Rational(50, 1));
    for (const RoundRecord& r : s.rounds) {
      for (const Connector& c : r.connectors) {
        ++seen;
        for (const Path* p : {&c.path1, &c.path2}) {
          EXPECT_TRUE(is_path_in(g, *p));
          EXPECT_LE(p->length(), 2u);
        }
        std::set<VertexId> inner;
        for (const Path* p : {&c.path1, &c.path2}) {
          for (std::size_t j = 1; j + 1 < p->vertices.size(); ++j) {
            EXPECT_TRUE(inner.insert((*p)[j]).second);
          }
        }
        EXPECT_FALSE(c.path1 == c.path2);
      }
    }
  }
  EXPECT_GT(seen, 0u);
}

// a=0, c1=1, c2=2, b=3 as the two paths 0-1-3 and 0-2-3.
MixedGraph square(std::initializer_list<Arc> arcs) {
  MixedGraph h(4);
  for (auto [x, y] : std::array<std::pair<VertexId, VertexId>, 4>{{{0, 1}, {1, 3}, {0, 2}, {2, 3}}}) {
    bool oriented = false;
    for (const Arc& a : arcs) {
      if ((a.tail == x && a.head == y) || (a.tail == y && a.head == x)) {
        h.add_arc(a.tail, a.head);
        oriented = true;
      }
    }
    if (!oriented) h.add_edge(x, y);
  }
  return h;
}

Connector square_connector() {
  Connector c;
  c.a = 0;
  c.b = 3;
  c.path1 = Path{{0, 1, 3}};
  c.path2 = Path{{0, 2, 3}};
  return c;
}

MixedGraph with(const MixedGraph& h, const ConnectorOrientation& o) {
  MixedGraph out = h;
  for (const Arc& a : o.assigned) out.orient(a.tail, a.head);
  return out;
}

TEST(OrientConnectorTest, UnorientedSquareBecomesDirectedCycle) {
  const MixedGraph h = square({});
  const auto o = orient_connector(h, square_connector());
  EXPECT_EQ(o.which, ConnectorCase::kCompleteCycle);
  const MixedGraph done = with(h, o);
  EXPECT_TRUE(done.fully_oriented());
  EXPECT_TRUE(is_strongly_connected(done));
}

TEST(OrientConnectorTest, BothArcsIntoFocusSendPartnerOutwards) {
  const MixedGraph h = square({{1, 0}, {2, 0}});
  const auto o = orient_connector(h, square_connector());
  EXPECT_EQ(o.which, ConnectorCase::kBothIntoFocus);
  EXPECT_EQ(o.assigned, (std::vector<Arc>{{3, 1}, {3, 2}}));
}

TEST(OrientConnectorTest, BothArcsOutOfFocus) {
  const MixedGraph h = square({{0, 1}, {0, 2}});
  const auto o = orient_connector(h, square_connector());
  EXPECT_EQ(o.which, ConnectorCase::kBothOutOfFocus);
  EXPECT_TRUE(with(h, o).fully_oriented());
}

TEST(OrientConnectorTest, EdgePlusDetourCompletesCycle) {
  MixedGraph h(3);
  h.add_edge(0, 1);
  h.add_edge(0, 2);
  h.add_arc(2, 1);
  Connector c;
  c.a = 0;
  c.b = 1;
  c.path1 = Path{{0, 1}};
  c.path2 = Path{{0, 2, 1}};
  const auto o = orient_connector(h, c);
  EXPECT_EQ(o.which, ConnectorCase::kCompleteCycle);
  EXPECT_TRUE(is_strongly_connected(with(h, o)));
}

// Every pre-orientation of the square is handled without reversing an arc,
// and the result is fully oriented.
TEST(OrientConnectorTest, EveryPreOrientationIsHandled) {
  const std::array<std::pair<VertexId, VertexId>, 4> edges{{{0, 1}, {1, 3}, {0, 2}, {2, 3}}};
  for (int code = 0; code < 81; ++code) {
    MixedGraph h(4);
    int rest = code;
    for (auto [x, y] : edges) {
      const int d = rest % 3;
      rest /= 3;
      if (d == 0) h.add_edge(x, y);
      if (d == 1) h.add_arc(x, y);
      if (d == 2) h.add_arc(y, x);
    }
    ConnectorOrientation o;
    ASSERT_NO_THROW(o = orient_connector(h, square_connector())) << "code " << code;
    MixedGraph done = h;
    for (const Arc& a : o.assigned) ASSERT_NO_THROW(done.orient(a.tail, a.head));
    EXPECT_TRUE(done.fully_oriented());
    for (const Arc& a : h.arcs()) EXPECT_TRUE(done.has_arc(a.tail, a.head));
  }
}

TEST(CommitRoundTest, ThirteenCycleBecomesDirectedCycle) {
  const Graph g = cycle_graph(13);
  CoreOptions options;
  options.instrument = Instrumentation::kOn;
  CoreState s = initial_state(g, Rational(20, 1), options);
  EXPECT_EQ(s.cap, 5u);
  ASSERT_TRUE(advance_round(g, s, options));
  EXPECT_FALSE(advance_round(g, s, options));
  EXPECT_EQ(s.core_vertices.size(), 13u);
  const MixedGraph h = s.core_graph();
  EXPECT_EQ(h.entry_count(), 13u);
  EXPECT_EQ(directed_diameter(h), 12u);
  EXPECT_LE(12u, 3 * s.witness.size() + 32);
  for (const ClaimCheck& c : s.checks) EXPECT_TRUE(c.pass) << c.id << ": " << c.detail;
}

TEST(CommitRoundTest, TiesGoToA) {
  const Graph g = cycle_graph(13);
  CoreState s = initial_state(g, Rational(20, 1));
  ASSERT_TRUE(advance_round(g, s));
  const RoundRecord& r = s.rounds.front();
  // A' = {u_3, u_6}; B' = {w_0, w_3} = {u_6, 9}: A = A' + {9}, B = B' + {3}.
  EXPECT_EQ(r.a_prime, (std::vector<VertexId>{3, 6}));
  EXPECT_EQ(r.b_prime, (std::vector<VertexId>{6, 9}));
  EXPECT_TRUE(r.witness_is_a);
  EXPECT_EQ(r.witness, (std::vector<VertexId>{3, 6, 9}));
}

TEST(CommitRoundTest, ViolationsThrowUnderDefaultPolicy) {
  const Graph g = cycle_graph(13);
  CoreOptions options;
  options.instrument = Instrumentation::kOn;
  CoreState s = initial_state(g, Rational(20, 1), options);
  CoreState probe = s;
  ASSERT_TRUE(advance_round(g, probe, options));
  RoundRecord broken = probe.rounds.front();
  broken.hat_diameter.reset();
  // Flip one arc: the cycle stops being strongly connected.
  std::swap(broken.arcs.front().tail, broken.arcs.front().head);
  EXPECT_EQ(code_of([&] { commit_round(g, s, broken, options); }), ErrorCode::kInvariantViolation);
  CoreState recorded = initial_state(g, Rational(20, 1), options);
  options.on_violation = ViolationPolicy::kRecord;
  commit_round(g, recorded, broken, options);
  EXPECT_FALSE(recorded.all_checks_pass());
}

TEST(CommitRoundTest, WitnessNeighbourhoodsOfRoundsOnLowerBoundGraphs) {
  for (std::uint32_t delta = 4; delta <= 7; ++delta) {
    const Graph g = lower_bound_family(delta, 6);
    CoreOptions options;
    options.on_violation = ViolationPolicy::kRecord;
    const CoreState s = run_core(g, Rational(50, 1), options);
    for (const ClaimCheck& c : s.checks) {
      if (c.id == "disjoint") EXPECT_TRUE(c.pass) << c.detail;
    }
  }
}

TEST(InstrumentationTest, AutoFollowsThreshold) {
  const Graph g = lower_bound_family(4, 3);
  CoreOptions options;
  options.auto_threshold = 10;
  EXPECT_FALSE(initial_state(g, Rational(30, 1), options).instrumented);
  options.auto_threshold = 2000;
  EXPECT_TRUE(initial_state(g, Rational(30, 1), options).instrumented);
  options.instrument = Instrumentation::kOff;
  EXPECT_FALSE(initial_state(g, Rational(30, 1), options).instrumented);
}

}  // namespace
}  // namespace odiam
