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

#include "odiam/pipeline.hpp"

#include <gtest/gtest.h>

#include <random>

#include "odiam/error.hpp"
#include "odiam/generators.hpp"
#include "odiam/oracle.hpp"

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

OrientOptions with_epsilon(std::int64_t eps) {
  OrientOptions o;
  o.epsilon = Rational(eps, 1);
  return o;
}

TEST(OrientTest, LowerBoundFamilyCertificate) {
  const Graph g = lower_bound_family(4, 2);
  const OrientResult r = orient(g, with_epsilon(30));
  const OrientationCertificate& c = r.certificate;
  EXPECT_TRUE(c.valid);
  EXPECT_TRUE(c.strongly_connected);
  EXPECT_EQ(c.undirected_diameter, 9u);
  EXPECT_GE(c.measured_diameter.value(), 9u);
  EXPECT_TRUE(c.bound_satisfied.value());
  EXPECT_TRUE(c.lower_bound_satisfied);
  EXPECT_TRUE(c.pass());
  EXPECT_FALSE(c.fallback);
}

TEST(OrientTest, LowerBoundFamilyMeetsItsLowerBound) {
  for (std::uint32_t delta = 4; delta <= 6; ++delta) {
    for (std::uint32_t k = 1; k <= 4; ++k) {
      const Graph g = lower_bound_family(delta, k);
      const OrientResult r = orient(g, with_epsilon(10));
      const double floor = 3.0 * g.vertex_count() / (delta + 1) - 3;
      EXPECT_GE(r.certificate.measured_diameter.value(), floor);
      EXPECT_TRUE(r.certificate.pass());
    }
  }
}

TEST(OrientTest, MinDegreeTwoFallsBack) {
  const OrientResult r = orient(cycle_graph(9));
  EXPECT_TRUE(r.certificate.fallback);
  EXPECT_EQ(r.certificate.measured_diameter, 8u);
  EXPECT_FALSE(r.certificate.bound_satisfied.has_value());
  EXPECT_TRUE(r.certificate.pass());
}

TEST(OrientTest, InputErrors) {
  const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(code_of([&] { orient(star); }), ErrorCode::kNotBridgeless);
  EXPECT_EQ(code_of([] { orient(complete_graph(4), with_epsilon(-1)); }), ErrorCode::kInvalidArgument);
  const Graph split = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_EQ(code_of([&] { orient(split); }), ErrorCode::kDisconnected);
  EXPECT_EQ(code_of([] { orient(Graph::from_edges(0, {})); }), ErrorCode::kEmptyGraph);
}

TEST(OrientTest, SingleVertex) {
  const OrientResult r = orient(Graph::from_edges(1, {}));
  EXPECT_EQ(r.certificate.measured_diameter, 0u);
  EXPECT_TRUE(r.certificate.pass());
}

TEST(OrientTest, OracleSandwichOnSmallGraphs) {
  std::mt19937_64 rng(7);
  std::size_t tested = 0;
  for (int trial = 0; trial < 400 && tested < 60; ++trial) {
    const std::size_t n = 4 + rng() % 5;
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (rng() % 100 < 55) edges.push_back({u, v});
      }
    }
    const Graph g = Graph::from_edges(n, edges);
    if (g.edge_count() > 18 || !is_connected(g) || !find_bridges(g).empty()) continue;
    ++tested;
    const std::uint32_t exact = brute_force_oriented_diameter(g).value;
    const OrientResult r = orient(g, with_epsilon(50));
    ASSERT_TRUE(r.certificate.measured_diameter.has_value());
    EXPECT_LE(exact, *r.certificate.measured_diameter);
    EXPECT_GE(exact, r.certificate.undirected_diameter);
    EXPECT_TRUE(r.certificate.pass());
  }
  EXPECT_GE(tested, 30u);
}

TEST(OrientTest, ClaimsAreRecordedNotThrown) {
  const Graph g = random_min_degree_bridgeless(200, 5, 2);
  OrientOptions o = with_epsilon(30);
  o.instrument = Instrumentation::kOn;
  std::size_t rounds_seen = 0;
  o.on_round = [&](std::size_t, const RoundRecord&, const std::vector<ClaimCheck>&) { ++rounds_seen; };
  const OrientResult r = orient(g, o);
  EXPECT_EQ(rounds_seen, r.core.round_count());
  EXPECT_EQ(r.certificate.rounds, r.core.round_count());
  EXPECT_FALSE(r.certificate.claims.empty());
}

}  // namespace
}  // namespace odiam
