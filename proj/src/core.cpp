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

#include <algorithm>
#include <iterator>
#include <sstream>

#include "detail/core_internal.hpp"
#include "odiam/error.hpp"

namespace odiam {

using detail::contains;
using detail::minus;
using detail::sorted_copy;
using detail::unite;

namespace {

constexpr std::uint32_t kInf = detail::ConsistentDistances::kInf;

std::size_t common_neighbor_count(const Graph& g, VertexId u, VertexId w) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(w);
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId w, std::size_t limit) {
  std::vector<VertexId> out;
  auto a = g.neighbors(u);
  auto b = g.neighbors(w);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (out.size() > limit) out.resize(limit);
  return out;
}

void check_epsilon(const Rational& epsilon) {
  if (!epsilon.positive()) fail(ErrorCode::kInvalidArgument, "epsilon must be positive");
}

bool should_instrument(const CoreOptions& options, std::size_t n) {
  switch (options.instrument) {
    case Instrumentation::kOn: return true;
    case Instrumentation::kOff: return false;
    case Instrumentation::kAuto: return n <= options.auto_threshold;
  }
  return false;
}

}  // namespace

Restriction CoreState::core_restriction() const {
  std::vector<VertexId> vertices = core_vertices;
  std::sort(vertices.begin(), vertices.end());
  return restrict_to(core_graph(), vertices);
}

bool CoreState::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.pass; });
}

CoreState initial_state(const Graph& g, const Rational& epsilon, const CoreOptions& options) {
  check_epsilon(epsilon);
  if (g.vertex_count() == 0) fail(ErrorCode::kEmptyGraph, "graph has no vertices");
  CoreState s;
  s.n = g.vertex_count();
  s.epsilon = epsilon;
  s.cap = cap_l(epsilon);
  s.delta = min_degree(g);
  s.start = options.start.value_or(0);
  if (s.start >= s.n) {
    fail(ErrorCode::kIndexOutOfRange, "start vertex " + std::to_string(s.start) + " out of range");
  }
  s.instrumented = should_instrument(options, s.n);
  s.in_core.assign(s.n, 0);
  s.in_core[s.start] = 1;
  s.core_vertices = {s.start};
  s.witness = {s.start};
  s.witness_rounds = {{s.start}};
  return s;
}

Path select_path_p(const Graph& g, const std::vector<char>& in_core, std::uint32_t cap) {
  std::vector<VertexId> sources;
  for (VertexId v = 0; v < in_core.size(); ++v) {
    if (in_core[v]) sources.push_back(v);
  }
  const DistanceMap dist = bfs_distance(g, sources);
  if (!dist.all_reachable()) fail(ErrorCode::kDisconnected, "some vertex cannot reach the core");
  const std::uint32_t far = dist.max_finite().value_or(0);
  if (far <= cap) {
    fail(ErrorCode::kNoFarVertex, "every vertex is within " + std::to_string(cap) + " of the core");
  }
  VertexId x = 0;
  while (dist.at(x) != far) ++x;
  std::vector<VertexId> back{x};
  while (dist.at(x) > 0) {
    for (VertexId y : g.neighbors(x)) {
      if (dist.at(y) + 1 == dist.at(x)) {
        x = y;
        break;
      }
    }
    back.push_back(x);
  }
  std::reverse(back.begin(), back.end());
  back.resize(3 * (far / 3) + 1);
  return Path{back};
}

namespace detail {

ConsistentDistances consistent_distances(const Graph& g, const Path& p,
                                         const std::vector<char>& in_core) {
  const std::size_t n = g.vertex_count();
  // forbidden_prev[x] = y means the step x -> y is u_{j+1} -> u_j.
  constexpr VertexId kNone = 0xffffffffu;
  std::vector<VertexId> forbidden(n, kNone);
  for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j) forbidden[p[j + 1]] = p[j];
  auto allowed = [&](VertexId x, VertexId y) { return forbidden[x] != y; };

  ConsistentDistances out;
  out.from_end.assign(n, kInf);
  out.to_core.assign(n, kInf);
  std::vector<VertexId> queue;
  const VertexId end = p.back();
  out.from_end[end] = 0;
  queue.push_back(end);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    if (in_core[x]) {
      out.length = std::min(out.length, out.from_end[x]);
      continue;
    }
    for (VertexId y : g.neighbors(x)) {
      if (allowed(x, y) && out.from_end[y] == kInf) {
        out.from_end[y] = out.from_end[x] + 1;
        queue.push_back(y);
      }
    }
  }
  queue.clear();
  for (VertexId v = 0; v < n; ++v) {
    if (in_core[v]) {
      out.to_core[v] = 0;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    for (VertexId y : g.neighbors(x)) {
      if (!in_core[y] && allowed(y, x) && out.to_core[y] == kInf) {
        out.to_core[y] = out.to_core[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace detail

Path select_path_q(const Graph& g, const Path& p, const std::vector<char>& in_core,
                   const std::vector<VertexId>& a_prime) {
  if (p.empty()) fail(ErrorCode::kInvalidArgument, "select_path_q: empty P");
  const auto cd = detail::consistent_distances(g, p, in_core);
  if (cd.length == kInf) {
    fail(ErrorCode::kNoConsistentPath, "no consistent path from the end of P back to the core");
  }
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> forbidden(n, 0xffffffffu);
  for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j) forbidden[p[j + 1]] = p[j];
  const std::uint32_t total = cd.length;
  auto on_shortest = [&](VertexId v) {
    return cd.from_end[v] != kInf && cd.to_core[v] != kInf && cd.from_end[v] + cd.to_core[v] == total;
  };
  auto successors = [&](VertexId x, auto&& visit) {
    if (in_core[x]) return;
    for (VertexId y : g.neighbors(x)) {
      if (forbidden[x] == y || !on_shortest(y)) continue;
      if (cd.from_end[y] == cd.from_end[x] + 1) visit(y);
    }
  };
  // best[v]: most A' vertices on a shortest consistent v -> core path.
  std::vector<std::vector<VertexId>> layers(total + 1);
  for (VertexId v = 0; v < n; ++v) {
    if (on_shortest(v)) layers[cd.to_core[v]].push_back(v);
  }
  std::vector<int> best(n, -1);
  for (std::uint32_t layer = 0; layer <= total; ++layer) {
    for (VertexId v : layers[layer]) {
      int b = layer == 0 ? 0 : -1;
      successors(v, [&](VertexId y) { b = std::max(b, best[y]); });
      if (b >= 0) best[v] = b + (contains(a_prime, v) ? 1 : 0);
    }
  }
  std::vector<VertexId> route{p.back()};
  VertexId x = p.back();
  while (!in_core[x]) {
    VertexId pick = 0xffffffffu;
    successors(x, [&](VertexId y) {
      if (best[y] < 0) return;
      if (pick == 0xffffffffu || best[y] > best[pick] || (best[y] == best[pick] && y < pick)) {
        pick = y;
      }
    });
    if (pick == 0xffffffffu) fail(ErrorCode::kNoConsistentPath, "shortest-path DAG is broken");
    route.push_back(pick);
    x = pick;
  }
  return Path{route};
}

IndexSets index_sets(const Path& p, const Path& q) {
  IndexSets out;
  for (std::size_t j = 3; j < p.vertices.size(); j += 3) out.a_prime.push_back(p[j]);
  // q.vertices = w_0 .. w_{q+1}, so q = size - 2.
  if (q.vertices.size() >= 4) {
    const std::size_t last = q.vertices.size() - 4;  // q - 2
    for (std::size_t j = 0; j <= last; j += 3) out.b_prime.push_back(q[j]);
  }
  out.a_prime = sorted_copy(out.a_prime);
  out.b_prime = sorted_copy(out.b_prime);
  return out;
}

bool overlapping(const Graph& g, VertexId u, VertexId w) {
  if (u == w) fail(ErrorCode::kSameVertex, "overlapping: u and w coincide");
  const std::size_t common = common_neighbor_count(g, u, w);
  return common >= 2 || (common >= 1 && g.has_edge(u, w));
}

SecondOrderSets second_order_sets(const Graph& g, const std::vector<VertexId>& a_prime,
                                  const std::vector<VertexId>& b_prime) {
  SecondOrderSets out;
  auto free_of = [&](VertexId v, const std::vector<VertexId>& others) {
    return std::none_of(others.begin(), others.end(),
                        [&](VertexId o) { return o != v && overlapping(g, v, o); });
  };
  for (VertexId v : minus(b_prime, a_prime)) {
    if (free_of(v, a_prime)) out.a_double.push_back(v);
  }
  for (VertexId v : minus(a_prime, b_prime)) {
    if (free_of(v, b_prime)) out.b_double.push_back(v);
  }
  return out;
}

std::optional<std::pair<Path, Path>> short_connector_paths(const Graph& g, VertexId u, VertexId w) {
  if (u == w) fail(ErrorCode::kSameVertex, "short_connector_paths: u and w coincide");
  const auto common = common_neighbors(g, u, w, 2);
  if (g.has_edge(u, w)) {
    if (common.empty()) return std::nullopt;
    return std::make_pair(Path{{u, w}}, Path{{u, common[0], w}});
  }
  if (common.size() < 2) return std::nullopt;
  return std::make_pair(Path{{u, common[0], w}}, Path{{u, common[1], w}});
}

std::vector<Connector> choose_connectors(const Graph& g, const std::vector<VertexId>& a_set,
                                         const std::vector<VertexId>& b_set,
                                         const std::vector<VertexId>& a_prime,
                                         const std::vector<VertexId>& b_prime) {
  const auto a_free = minus(sorted_copy(a_prime), sorted_copy(b_set));
  const auto b_free = minus(sorted_copy(b_prime), sorted_copy(a_set));
  std::vector<Connector> out;

  auto best_partner = [&](VertexId focus, const std::vector<VertexId>& pool)
      -> std::optional<std::pair<VertexId, std::pair<Path, Path>>> {
    std::optional<std::pair<VertexId, std::pair<Path, Path>>> best;
    std::size_t best_len = 0;
    for (VertexId other : pool) {
      if (other == focus) continue;
      auto paths = short_connector_paths(g, focus, other);
      if (!paths) continue;
      const std::size_t len = paths->first.length() + paths->second.length();
      if (!best || len < best_len) {
        best = std::make_pair(other, std::move(*paths));
        best_len = len;
      }
    }
    return best;
  };
  auto no_partner = [](VertexId v, const char* side) {
    std::ostringstream msg;
    msg << "vertex " << v << " of " << side << " has no overlapping partner";
    fail(ErrorCode::kNoPartner, msg.str());
  };

  for (VertexId a : a_free) {
    auto pick = best_partner(a, b_free);
    if (!pick) no_partner(a, "A' \\ B");
    Connector c;
    c.a = a;
    c.b = pick->first;
    c.focus_is_a = true;
    c.path1 = std::move(pick->second.first);
    c.path2 = std::move(pick->second.second);
    out.push_back(std::move(c));
  }
  for (VertexId b : b_free) {
    auto pick = best_partner(b, a_free);
    if (!pick) no_partner(b, "B' \\ A");
    const VertexId a = pick->first;
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const Connector& c) { return c.a == a && c.b == b; });
    if (seen) continue;
    Connector c;
    c.a = a;
    c.b = b;
    c.focus_is_a = false;
    c.path1 = std::move(pick->second.first);
    c.path2 = std::move(pick->second.second);
    out.push_back(std::move(c));
  }
  return out;
}

void apply_round(CoreState& state, RoundRecord record) {
  auto absorb = [&](VertexId v) {
    if (!state.in_core[v]) {
      state.in_core[v] = 1;
      state.core_vertices.push_back(v);
    }
  };
  for (VertexId v : record.p.vertices) absorb(v);
  for (VertexId v : record.q.vertices) absorb(v);
  for (VertexId v : record.new_vertices) absorb(v);
  state.arcs.insert(state.arcs.end(), record.arcs.begin(), record.arcs.end());
  state.witness.insert(state.witness.end(), record.witness.begin(), record.witness.end());
  state.witness_rounds.push_back(record.witness);
  state.rounds.push_back(std::move(record));
}

void commit_round(const Graph& g, CoreState& state, RoundRecord record, const CoreOptions& options) {
  for (const Edge& e : record.new_edges) {
    const bool oriented = std::any_of(record.arcs.begin(), record.arcs.end(), [&](const Arc& a) {
      return (a.tail == e.u && a.head == e.v) || (a.tail == e.v && a.head == e.u);
    });
    if (!oriented) {
      fail(ErrorCode::kInvariantViolation,
           "structure: connector edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
               " left undirected");
    }
  }
  std::vector<ClaimCheck> checks;
  if (state.instrumented) {
    CoreState before = state;
    apply_round(state, std::move(record));
    const std::size_t index = state.rounds.size();
    auto hat = detail::hat_graph(before, state);
    state.rounds.back().hat_diameter = directed_diameter(hat.graph);
    checks = check_round(g, before, state, index);
    state.checks.insert(state.checks.end(), checks.begin(), checks.end());
  } else {
    apply_round(state, std::move(record));
  }
  if (options.on_round) options.on_round(state.rounds.size(), state.rounds.back(), checks);
  if (options.on_violation == ViolationPolicy::kThrow) {
    for (const ClaimCheck& c : checks) {
      if (!c.pass) {
        fail(ErrorCode::kInvariantViolation,
             c.id + " (round " + std::to_string(c.round) + "): " + c.detail);
      }
    }
  }
}

bool advance_round(const Graph& g, CoreState& state, const CoreOptions& options) {
  std::vector<VertexId> sources(state.core_vertices);
  const DistanceMap dist = bfs_distance(g, sources);
  if (!dist.all_reachable()) fail(ErrorCode::kDisconnected, "some vertex cannot reach the core");
  if (dist.max_finite().value_or(0) <= state.cap) return false;

  RoundRecord r;
  r.p = select_path_p(g, state.in_core, state.cap);
  std::vector<VertexId> a_from_p;
  for (std::size_t j = 3; j < r.p.vertices.size(); j += 3) a_from_p.push_back(r.p[j]);
  a_from_p = sorted_copy(a_from_p);
  r.q = select_path_q(g, r.p, state.in_core, a_from_p);
  const IndexSets sets = index_sets(r.p, r.q);
  r.a_prime = sets.a_prime;
  r.b_prime = sets.b_prime;
  const SecondOrderSets second = second_order_sets(g, r.a_prime, r.b_prime);
  r.a_double = second.a_double;
  r.b_double = second.b_double;
  const auto a_set = unite(r.a_prime, r.a_double);
  const auto b_set = unite(r.b_prime, r.b_double);
  r.connectors = choose_connectors(g, a_set, b_set, r.a_prime, r.b_prime);

  // Working digraph on the round's edges: P forward, Q forward, connectors.
  MixedGraph work(g.vertex_count());
  for (std::size_t j = 0; j + 1 < r.p.vertices.size(); ++j) work.add_arc(r.p[j], r.p[j + 1]);
  for (std::size_t j = 0; j + 1 < r.q.vertices.size(); ++j) {
    const VertexId x = r.q[j];
    const VertexId y = r.q[j + 1];
    if (auto id = work.find(x, y)) {
      if (!work.has_arc(x, y)) {
        fail(ErrorCode::kInvariantViolation, "structure: Q traverses a P arc backwards");
      }
    } else {
      work.add_arc(x, y);
    }
  }
  std::vector<char> on_pq(g.vertex_count(), 0);
  for (VertexId v : r.p.vertices) on_pq[v] = 1;
  for (VertexId v : r.q.vertices) on_pq[v] = 1;
  std::vector<VertexId> extra;
  std::vector<Edge> connector_edges;
  for (const Connector& c : r.connectors) {
    for (const Path* path : {&c.path1, &c.path2}) {
      for (std::size_t j = 0; j + 1 < path->vertices.size(); ++j) {
        const VertexId x = (*path)[j];
        const VertexId y = (*path)[j + 1];
        connector_edges.push_back(Edge{std::min(x, y), std::max(x, y)});
        if (!work.find(x, y)) work.add_edge(x, y);
      }
      for (VertexId v : path->vertices) {
        if (!on_pq[v]) extra.push_back(v);
      }
    }
  }
  std::sort(connector_edges.begin(), connector_edges.end());
  connector_edges.erase(std::unique(connector_edges.begin(), connector_edges.end()),
                        connector_edges.end());
  r.new_edges = std::move(connector_edges);
  r.new_vertices = sorted_copy(extra);
  for (const Connector& c : r.connectors) {
    const ConnectorOrientation o = orient_connector(work, c);
    for (const Arc& a : o.assigned) work.orient(a.tail, a.head);
    r.cases.push_back(o.which);
  }
  r.arcs = work.arcs();
  r.witness_is_a = a_set.size() >= b_set.size();
  r.witness = r.witness_is_a ? a_set : b_set;
  commit_round(g, state, std::move(r), options);
  return true;
}

CoreState run_core(const Graph& g, const Rational& epsilon, const CoreOptions& options) {
  check_epsilon(epsilon);
  if (g.vertex_count() == 0) fail(ErrorCode::kEmptyGraph, "graph has no vertices");
  if (!is_connected(g)) fail(ErrorCode::kDisconnected, "input graph is disconnected");
  if (!find_bridges(g).empty()) fail(ErrorCode::kNotBridgeless, "bridged input");
  if (min_degree(g) < 3) {
    fail(ErrorCode::kMinDegreeTooSmall,
         "minimum degree " + std::to_string(min_degree(g)) + " is below 3");
  }
  CoreState state = initial_state(g, epsilon, options);
  while (advance_round(g, state, options)) {
  }
  return state;
}

}  // namespace odiam
