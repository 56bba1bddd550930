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

#include "odiam/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "detail/digraph.hpp"
#include "odiam/error.hpp"

namespace odiam {

namespace {

constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

void check_vertex(std::size_t n, VertexId v, const char* what) {
  if (v >= n) {
    std::ostringstream msg;
    msg << what << ": vertex " << v << " out of range for n=" << n;
    fail(ErrorCode::kIndexOutOfRange, msg.str());
  }
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> pairs) {
  Graph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  for (const Edge& e : pairs) {
    check_vertex(n, e.u, "from_edges");
    check_vertex(n, e.v, "from_edges");
    if (e.u == e.v) {
      fail(ErrorCode::kSelfLoop,
           "from_edges: self-loop at vertex " + std::to_string(e.u));
    }
    g.edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[n]);
  g.edge_ids_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Sorted edge order makes every neighbor list come out sorted.
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    g.targets_[cursor[e.u]] = e.v;
    g.edge_ids_[cursor[e.u]++] = id;
    g.targets_[cursor[e.v]] = e.u;
    g.edge_ids_[cursor[e.v]++] = id;
  }
  return g;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::span<const EdgeId> Graph::incident_edges(VertexId v) const {
  return {edge_ids_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(VertexId v) const {
  return offsets_[v + 1] - offsets_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  return edge_id(u, v).has_value();
}

std::optional<EdgeId> Graph::edge_id(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_ || u == v) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

MixedGraph MixedGraph::from_graph(const Graph& g) {
  MixedGraph h(g.vertex_count());
  h.edges_.reserve(g.edge_count());
  for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
  return h;
}

MixedGraph MixedGraph::from_arcs(std::size_t n, std::span<const Arc> arcs) {
  MixedGraph h(n);
  h.edges_.reserve(arcs.size());
  for (const Arc& a : arcs) h.add_arc(a.tail, a.head);
  return h;
}

std::size_t MixedGraph::total_multiplicity() const noexcept {
  std::size_t total = 0;
  for (const MixedEdge& e : edges_) total += e.multiplicity;
  return total;
}

EdgeId MixedGraph::add_edge(VertexId u, VertexId v, std::uint32_t multiplicity) {
  check_vertex(vertex_count(), u, "add_edge");
  check_vertex(vertex_count(), v, "add_edge");
  if (u == v) fail(ErrorCode::kSelfLoop, "add_edge: self-loop");
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(MixedEdge{u, v, false, multiplicity});
  incident_[u].push_back(id);
  incident_[v].push_back(id);
  ++undirected_;
  return id;
}

EdgeId MixedGraph::add_arc(VertexId tail, VertexId head, std::uint32_t multiplicity) {
  check_vertex(vertex_count(), tail, "add_arc");
  check_vertex(vertex_count(), head, "add_arc");
  if (tail == head) fail(ErrorCode::kSelfLoop, "add_arc: self-loop");
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(MixedEdge{tail, head, true, multiplicity});
  incident_[tail].push_back(id);
  incident_[head].push_back(id);
  return id;
}

std::optional<EdgeId> MixedGraph::find(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return std::nullopt;
  const auto& list = incident_[u].size() <= incident_[v].size() ? incident_[u] : incident_[v];
  for (EdgeId id : list) {
    const MixedEdge& e = edges_[id];
    if ((e.a == u && e.b == v) || (e.a == v && e.b == u)) return id;
  }
  return std::nullopt;
}

int MixedGraph::relation(VertexId u, VertexId v) const {
  auto id = find(u, v);
  if (!id) {
    fail(ErrorCode::kInvalidArgument, "relation: vertices " + std::to_string(u) +
                                          " and " + std::to_string(v) + " are not adjacent");
  }
  const MixedEdge& e = edges_[*id];
  if (!e.oriented) return 0;
  return e.a == u ? 1 : -1;
}

bool MixedGraph::has_arc(VertexId tail, VertexId head) const {
  if (tail >= vertex_count() || head >= vertex_count()) return false;
  for (EdgeId id : incident_[tail]) {
    const MixedEdge& e = edges_[id];
    if (e.oriented && e.a == tail && e.b == head) return true;
  }
  return false;
}

void MixedGraph::orient_entry(EdgeId id, VertexId tail) {
  MixedEdge& e = edges_.at(id);
  if (tail != e.a && tail != e.b) {
    fail(ErrorCode::kInvalidArgument, "orient: vertex is not an endpoint");
  }
  if (e.oriented) {
    if (e.a != tail) {
      fail(ErrorCode::kInvalidArgument,
           "orient: entry " + std::to_string(id) + " is already oriented the other way");
    }
    return;
  }
  if (e.a != tail) std::swap(e.a, e.b);
  e.oriented = true;
  --undirected_;
}

void MixedGraph::orient(VertexId tail, VertexId head) {
  auto id = find(tail, head);
  if (!id) {
    fail(ErrorCode::kInvalidArgument, "orient: vertices " + std::to_string(tail) +
                                          " and " + std::to_string(head) + " are not adjacent");
  }
  orient_entry(*id, tail);
}

std::vector<Arc> MixedGraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(edges_.size() - undirected_);
  for (const MixedEdge& e : edges_) {
    if (e.oriented) out.push_back(Arc{e.a, e.b});
  }
  return out;
}

std::optional<std::size_t> Path::index_of(VertexId v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

bool is_path_in(const Graph& g, const Path& p) {
  std::vector<VertexId> sorted = p.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (VertexId v : p.vertices) {
    if (v >= g.vertex_count()) return false;
  }
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    if (!g.has_edge(p.vertices[i], p.vertices[i + 1])) return false;
  }
  return true;
}

std::optional<std::uint32_t> DistanceMap::get(VertexId v) const {
  if (dist_[v] == kUnreachable) return std::nullopt;
  return static_cast<std::uint32_t>(dist_[v]);
}

std::uint32_t DistanceMap::at(VertexId v) const {
  if (v >= dist_.size() || dist_[v] == kUnreachable) {
    fail(ErrorCode::kInvalidArgument, "distance of vertex " + std::to_string(v) + " is UNREACHABLE");
  }
  return static_cast<std::uint32_t>(dist_[v]);
}

bool DistanceMap::all_reachable() const {
  return std::none_of(dist_.begin(), dist_.end(),
                      [](std::int64_t d) { return d == kUnreachable; });
}

std::optional<std::uint32_t> DistanceMap::max_finite() const {
  std::optional<std::uint32_t> best;
  for (std::int64_t d : dist_) {
    if (d != kUnreachable && (!best || d > *best)) best = static_cast<std::uint32_t>(d);
  }
  return best;
}

DistanceMap bfs_distance(const Graph& g, std::span<const VertexId> sources) {
  if (sources.empty()) fail(ErrorCode::kEmptySourceSet, "bfs_distance: no sources");
  DistanceMap dist(g.vertex_count());
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  for (VertexId s : sources) {
    check_vertex(g.vertex_count(), s, "bfs_distance");
    if (!dist.reachable(s)) {
      dist.set(s, 0);
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    const std::uint32_t next = dist.at(x) + 1;
    for (VertexId y : g.neighbors(x)) {
      if (!dist.reachable(y)) {
        dist.set(y, next);
        queue.push_back(y);
      }
    }
  }
  return dist;
}

DistanceMap bfs_distance(const MixedGraph& g, std::span<const VertexId> sources,
                         Traversal mode) {
  if (sources.empty()) fail(ErrorCode::kEmptySourceSet, "bfs_distance: no sources");
  DistanceMap dist(g.vertex_count());
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  for (VertexId s : sources) {
    check_vertex(g.vertex_count(), s, "bfs_distance");
    if (!dist.reachable(s)) {
      dist.set(s, 0);
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    const std::uint32_t next = dist.at(x) + 1;
    for (EdgeId id : g.incident(x)) {
      const MixedEdge& e = g.entry(id);
      const VertexId y = e.a == x ? e.b : e.a;
      if (e.oriented && mode != Traversal::kUndirected) {
        const bool leaving = e.a == x;
        if (leaving != (mode == Traversal::kForward)) continue;
      }
      if (!dist.reachable(y)) {
        dist.set(y, next);
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<Edge> find_bridges(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> order(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<Edge> bridges;

  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::uint32_t counter = 0;
  constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

  for (VertexId root = 0; root < n; ++root) {
    if (order[root] != kUnvisited) continue;
    order[root] = low[root] = counter++;
    stack.push_back(Frame{root, kNoEdge, 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto nbrs = g.neighbors(top.v);
      auto ids = g.incident_edges(top.v);
      if (top.next < nbrs.size()) {
        const VertexId w = nbrs[top.next];
        const EdgeId id = ids[top.next];
        ++top.next;
        if (id == top.parent_edge) continue;
        if (order[w] == kUnvisited) {
          order[w] = low[w] = counter++;
          stack.push_back(Frame{w, id, 0});
        } else {
          low[top.v] = std::min(low[top.v], order[w]);
        }
      } else {
        const Frame done = top;
        stack.pop_back();
        if (!stack.empty()) {
          const VertexId parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > order[parent]) bridges.push_back(g.edge(done.parent_edge));
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

std::uint32_t min_degree(const Graph& g) {
  if (g.vertex_count() == 0) fail(ErrorCode::kEmptyGraph, "min_degree: graph has no vertices");
  std::size_t best = g.degree(0);
  for (VertexId v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return static_cast<std::uint32_t>(best);
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return bfs_distance(g, {VertexId{0}}).all_reachable();
}

std::optional<std::uint32_t> undirected_diameter(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  if (!is_connected(g)) return std::nullopt;
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.edge_count());
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return detail::Digraph(n, arcs).diameter();
}

std::optional<std::uint32_t> directed_diameter(const MixedGraph& d) {
  if (!d.fully_oriented()) {
    fail(ErrorCode::kUnorientedEdgesPresent,
         "directed_diameter: " + std::to_string(d.undirected_count()) +
             " undirected edges remain");
  }
  return detail::Digraph(d.vertex_count(), d.arcs()).diameter();
}

bool is_strongly_connected(const MixedGraph& d) {
  if (d.vertex_count() <= 1) return true;
  return bfs_distance(d, {VertexId{0}}, Traversal::kForward).all_reachable() &&
         bfs_distance(d, {VertexId{0}}, Traversal::kBackward).all_reachable();
}

Contraction contract(const MixedGraph& h, std::span<const VertexId> set) {
  if (set.empty()) fail(ErrorCode::kEmptyContractionSet, "contract: empty vertex set");
  const std::size_t n = h.vertex_count();
  std::vector<char> inside(n, 0);
  for (VertexId v : set) {
    check_vertex(n, v, "contract");
    inside[v] = 1;
  }
  Contraction out;
  out.image.assign(n, kNoVertex);
  VertexId next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!inside[v]) out.image[v] = next++;
  }
  out.merged = next;
  for (VertexId v = 0; v < n; ++v) {
    if (inside[v]) out.image[v] = out.merged;
  }
  out.graph = MixedGraph(static_cast<std::size_t>(next) + 1);

  std::map<std::tuple<VertexId, VertexId, bool>, EdgeId> folded;
  std::vector<std::uint32_t> multiplicity;
  std::vector<std::tuple<VertexId, VertexId, bool>> order;
  for (const MixedEdge& e : h.entries()) {
    VertexId a = out.image[e.a];
    VertexId b = out.image[e.b];
    if (a == b) {
      out.dropped += e.multiplicity;
      continue;
    }
    if (!e.oriented && a > b) std::swap(a, b);
    auto key = std::make_tuple(a, b, e.oriented);
    auto [it, inserted] = folded.emplace(key, static_cast<EdgeId>(order.size()));
    if (inserted) {
      order.push_back(key);
      multiplicity.push_back(e.multiplicity);
    } else {
      multiplicity[it->second] += e.multiplicity;
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto [a, b, oriented] = order[i];
    if (oriented) {
      out.graph.add_arc(a, b, multiplicity[i]);
    } else {
      out.graph.add_edge(a, b, multiplicity[i]);
    }
  }
  return out;
}

Restriction restrict_to(const MixedGraph& h, std::span<const VertexId> vertices) {
  std::vector<VertexId> image(h.vertex_count(), kNoVertex);
  Restriction out;
  out.original.assign(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(h.vertex_count(), vertices[i], "restrict_to");
    image[vertices[i]] = static_cast<VertexId>(i);
  }
  out.graph = MixedGraph(vertices.size());
  for (const MixedEdge& e : h.entries()) {
    const VertexId a = image[e.a];
    const VertexId b = image[e.b];
    if (a == kNoVertex || b == kNoVertex) continue;
    if (e.oriented) {
      out.graph.add_arc(a, b, e.multiplicity);
    } else {
      out.graph.add_edge(a, b, e.multiplicity);
    }
  }
  return out;
}

}  // namespace odiam
