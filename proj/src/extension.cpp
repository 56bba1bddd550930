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
#include "odiam/extension.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

#include "odiam/error.hpp"

namespace odiam {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// Shortest path from v to the region that never uses the edge v - banned.
// Returns v .. y with y in the region, or an empty path.
Path shortest_return(const Graph& g, std::span<const char> in_region, VertexId v,
                     VertexId banned) {
  std::vector<VertexId> parent(g.vertex_count(), kInf);
  std::deque<VertexId> queue{v};
  parent[v] = v;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.neighbors(x)) {
      if (in_region[y]) {
        if (x == v && y == banned) continue;
        Path path{{y}};
        for (VertexId z = x;; z = parent[z]) {
          path.vertices.push_back(z);
          if (z == v) break;
        }
        std::reverse(path.vertices.begin(), path.vertices.end());
        return path;
      }
      if (parent[y] != kInf) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  return {};
}

// Two internally vertex-disjoint v -> region paths of least total length via
// two successive shortest augmentations on the split-vertex network. Only
// reached for vertices with no region neighbour.
Path disjoint_ear(const Graph& g, std::span<const char> in_region, VertexId v) {
  const std::size_t n = g.vertex_count();
  struct FlowArc {
    std::size_t to;
    int cap;
    int cost;
    VertexId region;  // landing vertex for arcs into the sink, else kInf
  };
  std::vector<FlowArc> arcs;
  std::vector<std::vector<std::size_t>> out(2 * n + 1);
  const std::size_t sink = 2 * n;
  auto add = [&](std::size_t a, std::size_t b, int cap, int cost, VertexId region) {
    out[a].push_back(arcs.size());
    arcs.push_back({b, cap, cost, region});
    out[b].push_back(arcs.size());
    arcs.push_back({a, 0, -cost, region});
  };
  auto in_node = [](VertexId x) { return 2 * static_cast<std::size_t>(x); };
  auto out_node = [](VertexId x) { return 2 * static_cast<std::size_t>(x) + 1; };
  for (VertexId x = 0; x < n; ++x) {
    if (in_region[x]) continue;
    if (x != v) add(in_node(x), out_node(x), 1, 0, kInf);
    for (VertexId y : g.neighbors(x)) {
      if (in_region[y]) {
        add(out_node(x), sink, 1, 1, y);
      } else if (y != v) {
        add(out_node(x), in_node(y), 1, 1, kInf);
      }
    }
  }
  const std::size_t source = out_node(v);
  for (int unit = 0; unit < 2; ++unit) {
    std::vector<long> dist(2 * n + 1, std::numeric_limits<long>::max());
    std::vector<std::size_t> via(2 * n + 1, arcs.size());
    std::vector<char> queued(2 * n + 1, 0);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      queued[x] = 0;
      for (std::size_t id : out[x]) {
        const FlowArc& a = arcs[id];
        if (a.cap == 0 || dist[x] + a.cost >= dist[a.to]) continue;
        dist[a.to] = dist[x] + a.cost;
        via[a.to] = id;
        if (!queued[a.to]) {
          queued[a.to] = 1;
          queue.push_back(a.to);
        }
      }
    }
    if (via[sink] == arcs.size()) fail(ErrorCode::kNoEar, "no ear through vertex " + std::to_string(v));
    for (std::size_t x = sink; x != source;) {
      const std::size_t id = via[x];
      arcs[id].cap -= 1;
      arcs[id ^ 1].cap += 1;
      x = arcs[id ^ 1].to;
    }
  }
  // Decompose: forward arcs with cap 0 carry one unit.
  std::vector<Path> legs;
  std::vector<char> used(arcs.size(), 0);
  for (int unit = 0; unit < 2; ++unit) {
    Path leg{{v}};
    std::size_t x = source;
    while (x != sink) {
      for (std::size_t id : out[x]) {
        if (id % 2 == 1 || arcs[id].cap != 0 || used[id]) continue;
        used[id] = 1;
        const FlowArc& a = arcs[id];
        if (a.to == sink) {
          leg.vertices.push_back(a.region);
        } else if (a.to % 2 == 0) {
          leg.vertices.push_back(static_cast<VertexId>(a.to / 2));
        }
        x = a.to;
        break;
      }
    }
    legs.push_back(std::move(leg));
  }
  Path ear;
  ear.vertices.assign(legs[0].vertices.rbegin(), legs[0].vertices.rend());
  ear.vertices.insert(ear.vertices.end(), legs[1].vertices.begin() + 1, legs[1].vertices.end());
  return ear;
}

std::string ear_text(const Path& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) out << (i ? "-" : "") << p[i];
  return out.str();
}

ClaimCheck make_check(std::string id, bool pass, std::string detail) {
  return ClaimCheck{std::move(id), 0, pass, std::move(detail)};
}

}  // namespace

bool ExtensionResult::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.pass; });
}

EarRecord find_ear(const Graph& g, std::span<const char> in_region, VertexId v) {
  if (v >= g.vertex_count() || in_region.size() != g.vertex_count()) {
    fail(ErrorCode::kIndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  if (in_region[v]) fail(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " already absorbed");
  std::vector<VertexId> landing;
  for (VertexId y : g.neighbors(v)) {
    if (in_region[y]) landing.push_back(y);
  }
  EarRecord ear;
  ear.through = v;
  if (landing.size() >= 2) {
    ear.path = Path{{landing[0], v, landing[1]}};
  } else if (landing.size() == 1) {
    Path back = shortest_return(g, in_region, v, landing[0]);
    if (back.empty()) fail(ErrorCode::kNoEar, "no ear through vertex " + std::to_string(v));
    ear.path.vertices.push_back(landing[0]);
    ear.path.vertices.insert(ear.path.vertices.end(), back.vertices.begin(), back.vertices.end());
  } else {
    ear.path = disjoint_ear(g, in_region, v);
  }
  return ear;
}

EarRecord find_ear(const Graph& g, std::span<const char> in_region, Edge chord) {
  if (!g.has_edge(chord.u, chord.v)) {
    fail(ErrorCode::kInvalidArgument,
         "{" + std::to_string(chord.u) + "," + std::to_string(chord.v) + "} is not an edge");
  }
  if (!in_region[chord.u] || !in_region[chord.v]) {
    fail(ErrorCode::kInvalidArgument, "chord endpoints must both be absorbed");
  }
  EarRecord ear;
  ear.through = std::min(chord.u, chord.v);
  ear.path = Path{{std::min(chord.u, chord.v), std::max(chord.u, chord.v)}};
  return ear;
}

ExtensionResult extend_report(const Graph& g, const MixedGraph& core,
                              std::span<const VertexId> core_vertices,
                              std::uint32_t cap, const ExtendOptions& options) {
  const std::size_t n = g.vertex_count();
  if (cap == 0) fail(ErrorCode::kInvalidArgument, "cap must be positive");
  if (core.vertex_count() != n) {
    fail(ErrorCode::kInvalidArgument, "core and graph have different vertex counts");
  }
  if (core_vertices.empty()) fail(ErrorCode::kInvalidArgument, "core has no vertices");
  if (!core.fully_oriented()) fail(ErrorCode::kInvalidArgument, "core has unoriented entries");

  std::vector<char> in_region(n, 0);
  for (VertexId v : core_vertices) {
    if (v >= n) fail(ErrorCode::kIndexOutOfRange, "core vertex " + std::to_string(v) + " out of range");
    in_region[v] = 1;
  }
  std::vector<VertexId> members(core_vertices.begin(), core_vertices.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  // Core arcs, keyed by edge id of g.
  std::vector<char> oriented(g.edge_count(), 0);
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count());
  const std::vector<Arc> core_arcs = core.arcs();
  for (const Arc& a : core_arcs) {
    const auto e = g.edge_id(a.tail, a.head);
    if (!e) {
      fail(ErrorCode::kInvalidArgument, "core arc " + std::to_string(a.tail) + "->" +
                                            std::to_string(a.head) + " is not an edge of the graph");
    }
    if (!in_region[a.tail] || !in_region[a.head]) {
      fail(ErrorCode::kInvalidArgument, "core arc leaves the core vertex set");
    }
    if (oriented[*e]) fail(ErrorCode::kInvalidArgument, "core orients an edge twice");
    oriented[*e] = 1;
    arcs.push_back(a);
  }

  ExtensionResult result;
  result.cap = cap;
  const Restriction restricted = restrict_to(core, members);
  if (!is_strongly_connected(restricted.graph)) {
    fail(ErrorCode::kCoreNotStrong, "core orientation is not strongly connected");
  }
  result.core_diameter = directed_diameter(restricted.graph).value();

  const DistanceMap layer = bfs_distance(g, std::span<const VertexId>(members));
  std::vector<VertexId> order;
  for (VertexId v = 0; v < n; ++v) {
    if (!layer.reachable(v)) {
      fail(ErrorCode::kVertexTooFar, "vertex " + std::to_string(v) + " cannot reach the core");
    }
    if (layer.at(v) > cap) {
      fail(ErrorCode::kVertexTooFar, "vertex " + std::to_string(v) + " at distance " +
                                         std::to_string(layer.at(v)) + " > " + std::to_string(cap));
    }
    if (!in_region[v]) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId x, VertexId y) { return layer.at(x) < layer.at(y); });

  // Upper bounds on d(core -> v) and d(v -> core) maintained while absorbing.
  std::vector<std::uint32_t> est_in(n, 0);
  std::vector<std::uint32_t> est_out(n, 0);
  std::size_t long_ears = 0;
  std::string first_long;

  auto orient_path = [&](const Path& p) {
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      const EdgeId e = g.edge_id(p[i], p[i + 1]).value();
      if (oriented[e]) fail(ErrorCode::kInvariantViolation, "ear reuses an oriented edge");
      oriented[e] = 1;
      arcs.push_back({p[i], p[i + 1]});
    }
  };

  for (VertexId v : order) {
    if (in_region[v]) continue;
    EarRecord ear = find_ear(g, in_region, v);
    ear.layer = layer.at(v);
    const std::size_t len = ear.path.length();
    auto worst = [&](const Path& p) {
      std::uint64_t w = 0;
      for (std::size_t i = 1; i < len; ++i) {
        w = std::max<std::uint64_t>(w, std::uint64_t{est_in[p.front()]} + i);
        w = std::max<std::uint64_t>(w, std::uint64_t{est_out[p.back()]} + (len - i));
      }
      return w;
    };
    Path flipped = ear.path;
    std::reverse(flipped.vertices.begin(), flipped.vertices.end());
    const std::uint64_t keep = worst(ear.path);
    const std::uint64_t flip = worst(flipped);
    if (flip < keep || (flip == keep && flipped.front() < flipped.back())) {
      ear.path = std::move(flipped);
      ear.reversed = true;
    }
    orient_path(ear.path);
    for (std::size_t i = 1; i < len; ++i) {
      const VertexId x = ear.path[i];
      est_in[x] = est_in[ear.path.front()] + static_cast<std::uint32_t>(i);
      est_out[x] = est_out[ear.path.back()] + static_cast<std::uint32_t>(len - i);
      in_region[x] = 1;
    }
    if (options.instrument && len > 2 * (std::uint64_t{cap} - ear.layer) + 3) {
      if (long_ears++ == 0) {
        first_long = "ear " + ear_text(ear.path) + " of length " + std::to_string(len) +
                     " at layer " + std::to_string(ear.layer);
      }
    }
    if (options.on_ear) options.on_ear(ear);
    result.ears.push_back(std::move(ear));
  }

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (oriented[e]) continue;
    const Edge& edge = g.edge(e);
    EarRecord chord = find_ear(g, in_region, edge);
    chord.layer = std::max(layer.at(edge.u), layer.at(edge.v));
    oriented[e] = 1;
    arcs.push_back({chord.path[0], chord.path[1]});
    ++result.chords;
    if (options.on_ear) options.on_ear(chord);
    result.ears.push_back(std::move(chord));
  }

  result.orientation = MixedGraph::from_arcs(n, arcs);
  const MixedGraph& d = result.orientation;

  result.checks.push_back(make_check(
      "extension.complete", arcs.size() == g.edge_count(),
      std::to_string(arcs.size()) + " arcs for " + std::to_string(g.edge_count()) + " edges"));

  std::size_t missing = 0;
  for (const Arc& a : core_arcs) missing += d.has_arc(a.tail, a.head) ? 0 : 1;
  result.checks.push_back(make_check("extension.preserve", missing == 0,
                                     std::to_string(missing) + " core arcs changed"));

  const bool strong = is_strongly_connected(d);
  result.checks.push_back(make_check("extension.strong", strong,
                                     strong ? "strongly connected" : "not strongly connected"));

  const DistanceMap from_core = bfs_distance(d, std::span<const VertexId>(members), Traversal::kForward);
  const DistanceMap to_core = bfs_distance(d, std::span<const VertexId>(members), Traversal::kBackward);
  const std::uint64_t reach_cap = std::uint64_t{cap} * (cap + 1);
  if (from_core.all_reachable() && to_core.all_reachable()) {
    result.max_from_core = from_core.max_finite().value_or(0);
    result.max_to_core = to_core.max_finite().value_or(0);
    result.checks.push_back(make_check(
        "extension.reach", result.max_from_core <= reach_cap && result.max_to_core <= reach_cap,
        "max d(core->v) = " + std::to_string(result.max_from_core) + ", max d(v->core) = " +
            std::to_string(result.max_to_core) + ", cap " + std::to_string(reach_cap)));
  } else {
    result.checks.push_back(make_check("extension.reach", false, "some vertex is cut off from the core"));
  }

  if (options.instrument) {
    result.checks.push_back(make_check(
        "extension.ear", long_ears == 0,
        long_ears == 0 ? std::to_string(result.ears.size() - result.chords) + " ears within length bound"
                       : std::to_string(long_ears) + " long ears; first: " + first_long));
  }

  result.diameter = strong ? directed_diameter(d) : std::nullopt;
  const std::uint64_t limit = result.core_diameter + result.allowance();
  const bool bounded = result.diameter && *result.diameter <= limit;
  result.checks.push_back(make_check(
      "extension.bound", bounded,
      (result.diameter ? "diameter " + std::to_string(*result.diameter) : std::string("diameter unbounded")) +
          ", limit " + std::to_string(limit)));
  return result;
}

MixedGraph extend(const Graph& g, const MixedGraph& core,
                  std::span<const VertexId> core_vertices, std::uint32_t cap,
                  const ExtendOptions& options) {
  ExtensionResult r = extend_report(g, core, core_vertices, cap, options);
  for (const ClaimCheck& c : r.checks) {
    if (!c.pass) fail(ErrorCode::kBoundViolated, c.id + ": " + c.detail);
  }
  return std::move(r.orientation);
}

}  // namespace odiam
