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

#ifndef ODIAM_CORE_HPP_
#define ODIAM_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "odiam/graph.hpp"
#include "odiam/rational.hpp"

namespace odiam {

// Two internally disjoint paths of length <= 2 joining a focus vertex to its
// partner; both paths run focus -> partner.
struct Connector {
  VertexId a = 0;  // member of A'
  VertexId b = 0;  // member of B'
  bool focus_is_a = true;  // chosen while pairing a (true) or b (false)
  Path path1;
  Path path2;

  VertexId focus() const { return focus_is_a ? a : b; }
  VertexId partner() const { return focus_is_a ? b : a; }
};

// Which rule of the connector orientation fired.
enum class ConnectorCase : int {
  kCompleteCycle = 1,      // C completes to a directed cycle
  kBothIntoFocus = 2,      // both focus edges point at the focus
  kInThenPartnerOut = 3,   // one focus edge in, the other path leaves the partner
  kInAndPartnerIn = 4,     // one path has both its edges pointing away from its middle vertex
  kBothOutOfFocus = 5,     // both focus edges leave the focus
  kBothIntoPartner = 6,    // both partner edges point at the partner
  kOutThenPartnerIn = 7,   // reversal of case 3
  kOutAndPartnerOut = 8,   // reversal of case 4
  kBothOutOfPartner = 9,   // reversal of case 6
};

struct ConnectorOrientation {
  ConnectorCase which = ConnectorCase::kCompleteCycle;
  std::vector<Arc> assigned;  // arcs newly given to undirected edges
};

struct RoundRecord {
  Path p;  // u_0 .. u_p, u_0 in the core
  Path q;  // w_0 .. w_{q+1}, w_0 = u_p, w_{q+1} in the core
  std::vector<VertexId> a_prime;   // sorted by id
  std::vector<VertexId> b_prime;
  std::vector<VertexId> a_double;
  std::vector<VertexId> b_double;
  std::vector<Connector> connectors;
  std::vector<ConnectorCase> cases;  // parallel to connectors
  std::vector<VertexId> new_vertices;  // C: connector vertices outside P and Q
  std::vector<Edge> new_edges;         // R: every connector edge
  std::vector<VertexId> witness;       // S': the larger of A and B (ties to A)
  bool witness_is_a = true;
  std::vector<Arc> arcs;               // every arc added this round (P, Q, R)
  std::optional<std::uint32_t> hat_diameter;  // filled when instrumented
};

struct ClaimCheck {
  std::string id;
  std::size_t round = 0;  // 1-based round the check belongs to
  bool pass = true;
  std::string detail;
};

enum class Instrumentation { kAuto, kOn, kOff };
enum class ViolationPolicy { kThrow, kRecord };

struct CoreOptions {
  std::optional<VertexId> start;  // s_0, default vertex 0
  Instrumentation instrument = Instrumentation::kAuto;
  std::size_t auto_threshold = 2000;  // kAuto instruments when n <= this
  ViolationPolicy on_violation = ViolationPolicy::kThrow;
  // Called after every committed round with that round's checks (empty when
  // instrumentation is off).
  std::function<void(std::size_t, const RoundRecord&, const std::vector<ClaimCheck>&)> on_round;
};

struct CoreState {
  std::size_t n = 0;
  Rational epsilon{1, 1};
  std::uint32_t cap = 100;    // L(eps)
  std::uint32_t delta = 0;    // minimum degree of the input
  VertexId start = 0;         // s_0
  bool instrumented = false;
  std::vector<char> in_core;             // membership in V(H_i)
  std::vector<VertexId> core_vertices;   // V(H_i) in insertion order
  std::vector<Arc> arcs;                 // E(H_i), all oriented
  std::vector<VertexId> witness;         // S_i, s_0 first
  std::vector<std::vector<VertexId>> witness_rounds;  // S'_0 = {s_0}, S'_1, ...
  std::vector<RoundRecord> rounds;
  std::vector<ClaimCheck> checks;        // every check run so far

  std::size_t round_count() const { return rounds.size(); }
  // H_i as a digraph on the full vertex range (non-core vertices isolated).
  MixedGraph core_graph() const { return MixedGraph::from_arcs(n, arcs); }
  // H_i restricted to its own vertices; original ids in `original`.
  Restriction core_restriction() const;
  bool all_checks_pass() const;
};

// H_0 = ({s_0}, {}), S_0 = {s_0}. Validates only epsilon and the start vertex.
CoreState initial_state(const Graph& g, const Rational& epsilon, const CoreOptions& options = {});

// Executes one round if some vertex is farther than L from the core.
// Returns false (state untouched) when the loop condition fails.
bool advance_round(const Graph& g, CoreState& state, const CoreOptions& options = {});

// Full loop. Requires g connected, bridgeless, min degree >= 3, eps > 0.
// Throws kDisconnected, kNotBridgeless, kMinDegreeTooSmall, kInvalidArgument.
CoreState run_core(const Graph& g, const Rational& epsilon, const CoreOptions& options = {});

// Geodesic from the core to the smallest-id farthest vertex (smallest-id BFS
// parents), truncated to 3*floor(D/3) edges. Throws kNoFarVertex unless the
// farthest distance exceeds cap.
Path select_path_p(const Graph& g, const std::vector<char>& in_core, std::uint32_t cap);

// Shortest path from the end of p to the core never stepping u_{j+1} -> u_j;
// among those, the most a_prime vertices, then smallest ids.
// Throws kNoConsistentPath.
Path select_path_q(const Graph& g, const Path& p, const std::vector<char>& in_core,
                   const std::vector<VertexId>& a_prime);

struct IndexSets {
  std::vector<VertexId> a_prime;  // u_j, j in [1, p], j = 0 mod 3 (sorted by id)
  std::vector<VertexId> b_prime;  // w_j, j in [0, q-2], j = 0 mod 3 (sorted by id)
};
IndexSets index_sets(const Path& p, const Path& q);

// True iff two internally disjoint u-w paths of length <= 2 exist.
// Throws kSameVertex.
bool overlapping(const Graph& g, VertexId u, VertexId w);

struct SecondOrderSets {
  std::vector<VertexId> a_double;  // B' \ A', almost non-overlapping with all of A'
  std::vector<VertexId> b_double;  // A' \ B', almost non-overlapping with all of B'
};
SecondOrderSets second_order_sets(const Graph& g, const std::vector<VertexId>& a_prime,
                                  const std::vector<VertexId>& b_prime);

// The two shortest internally disjoint paths of length <= 2 from u to w,
// or nullopt when u and w are almost non-overlapping.
std::optional<std::pair<Path, Path>> short_connector_paths(const Graph& g, VertexId u, VertexId w);

// Pairs every a in A' \ B with some b in B' \ A and every b in B' \ A with
// some a in A' \ B (skipping pairs already chosen). Partners minimise total
// connector length, then id. Throws kNoPartner.
std::vector<Connector> choose_connectors(const Graph& g, const std::vector<VertexId>& a_set,
                                         const std::vector<VertexId>& b_set,
                                         const std::vector<VertexId>& a_prime,
                                         const std::vector<VertexId>& b_prime);

// Case analysis for one connector. `h` must contain both paths' edges (any
// subset already oriented). Never reverses an arc. Throws kCaseFallthrough.
ConnectorOrientation orient_connector(const MixedGraph& h, const Connector& c);

// Checks for one committed round; `before` is the state the round was built
// from and `after` the state with the round applied.
std::vector<ClaimCheck> check_round(const Graph& g, const CoreState& before,
                                    const CoreState& after, std::size_t round_index);

// Adds a fully oriented round to the state without running checks.
void apply_round(CoreState& state, RoundRecord record);

// apply_round plus checks when instrumented; throws
// kInvariantViolation("<claim id>: ...") under ViolationPolicy::kThrow.
void commit_round(const Graph& g, CoreState& state, RoundRecord record,
                  const CoreOptions& options = {});

}  // namespace odiam

#endif  // ODIAM_CORE_HPP_
