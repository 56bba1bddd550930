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

// Core graph types: simple undirected graphs, partially oriented (mixed)
// multigraphs, paths and BFS distance maps, plus the shortest-path,
// connectivity and bridge primitives used throughout the library.

#ifndef ODIAM_GRAPH_HPP_
#define ODIAM_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace odiam {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Unordered pair. Graph normalizes stored edges so that u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Simple undirected graph in compressed adjacency form. Neighbor lists are
// sorted by id and edge ids index the lexicographically sorted edge list.
class Graph {
 public:
  Graph() = default;

  // Deduplicates {u,v}/{v,u}; throws kIndexOutOfRange or kSelfLoop.
  static Graph from_edges(std::size_t n, std::span<const Edge> pairs);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> pairs) {
    return from_edges(n, std::span<const Edge>(pairs.begin(), pairs.size()));
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const;
  // Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const;
  std::size_t degree(VertexId v) const;

  bool has_edge(VertexId u, VertexId v) const;
  std::optional<EdgeId> edge_id(VertexId u, VertexId v) const;
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<EdgeId> edge_ids_;
};

// One entry of a MixedGraph. When oriented the entry is the arc a -> b,
// otherwise it is the unordered pair {a, b}. Multiplicity > 1 only arises
// from contraction.
struct MixedEdge {
  VertexId a = 0;
  VertexId b = 0;
  bool oriented = false;
  std::uint32_t multiplicity = 1;
};

class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(std::size_t n) : incident_(n) {}

  // All edges undirected; entry ids equal the Graph's edge ids.
  static MixedGraph from_graph(const Graph& g);
  static MixedGraph from_arcs(std::size_t n, std::span<const Arc> arcs);

  std::size_t vertex_count() const noexcept { return incident_.size(); }
  std::size_t entry_count() const noexcept { return edges_.size(); }
  std::size_t total_multiplicity() const noexcept;
  std::size_t undirected_count() const noexcept { return undirected_; }
  bool fully_oriented() const noexcept { return undirected_ == 0; }

  EdgeId add_edge(VertexId u, VertexId v, std::uint32_t multiplicity = 1);
  EdgeId add_arc(VertexId tail, VertexId head, std::uint32_t multiplicity = 1);

  const MixedEdge& entry(EdgeId e) const { return edges_[e]; }
  std::span<const MixedEdge> entries() const noexcept { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const { return incident_[v]; }

  // First entry joining u and v in either direction.
  std::optional<EdgeId> find(VertexId u, VertexId v) const;
  // +1 when the u-v entry is the arc u->v, -1 for v->u, 0 when undirected.
  // Throws kInvalidArgument if u and v are not joined.
  int relation(VertexId u, VertexId v) const;
  bool has_arc(VertexId tail, VertexId head) const;

  // Orients an undirected entry as tail -> other endpoint. Orienting an
  // entry again in the same direction is a no-op; reversing throws.
  void orient_entry(EdgeId e, VertexId tail);
  void orient(VertexId tail, VertexId head);

  // One Arc per oriented entry (multiplicity not expanded).
  std::vector<Arc> arcs() const;

 private:
  std::vector<MixedEdge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::size_t undirected_ = 0;
};

enum class Traversal {
  kUndirected,  // every entry both ways, directions ignored
  kForward,     // arcs tail -> head only, undirected entries both ways
  kBackward,    // arcs head -> tail only, undirected entries both ways
};

// Sequence of distinct vertices; consecutive vertices are adjacent in the
// host graph. ind(v) is the position of v.
struct Path {
  std::vector<VertexId> vertices;

  std::size_t length() const noexcept {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  bool empty() const noexcept { return vertices.empty(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  VertexId operator[](std::size_t i) const { return vertices[i]; }
  std::optional<std::size_t> index_of(VertexId v) const;

  friend bool operator==(const Path&, const Path&) = default;
};

bool is_path_in(const Graph& g, const Path& p);

// Vertex -> BFS distance. Unreachable vertices carry a sentinel that is never
// exposed as a number.
class DistanceMap {
 public:
  DistanceMap() = default;
  explicit DistanceMap(std::size_t n) : dist_(n, kUnreachable) {}

  std::size_t size() const noexcept { return dist_.size(); }
  bool reachable(VertexId v) const { return dist_[v] != kUnreachable; }
  std::optional<std::uint32_t> get(VertexId v) const;
  // Throws kInvalidArgument for unreachable vertices.
  std::uint32_t at(VertexId v) const;
  void set(VertexId v, std::uint32_t d) { dist_[v] = static_cast<std::int64_t>(d); }
  bool all_reachable() const;
  // Largest finite distance; nullopt when nothing is reachable.
  std::optional<std::uint32_t> max_finite() const;

 private:
  static constexpr std::int64_t kUnreachable = -1;
  std::vector<std::int64_t> dist_;
};

DistanceMap bfs_distance(const Graph& g, std::span<const VertexId> sources);
DistanceMap bfs_distance(const MixedGraph& g, std::span<const VertexId> sources,
                         Traversal mode);
inline DistanceMap bfs_distance(const Graph& g,
                                std::initializer_list<VertexId> sources) {
  return bfs_distance(g, std::span<const VertexId>(sources.begin(), sources.size()));
}
inline DistanceMap bfs_distance(const MixedGraph& g,
                                std::initializer_list<VertexId> sources,
                                Traversal mode) {
  return bfs_distance(
      g, std::span<const VertexId>(sources.begin(), sources.size()), mode);
}

// Edges whose removal increases the number of connected components,
// sorted. Single iterative low-link DFS.
std::vector<Edge> find_bridges(const Graph& g);

std::uint32_t min_degree(const Graph& g);
bool is_connected(const Graph& g);

// nullopt when g is disconnected.
std::optional<std::uint32_t> undirected_diameter(const Graph& g);

// Max over ordered pairs of the directed distance; nullopt (UNREACHABLE) if
// some pair has no directed path. Throws kUnorientedEdgesPresent.
std::optional<std::uint32_t> directed_diameter(const MixedGraph& d);

// Every vertex reaches and is reached from vertex 0 (forward traversal, so
// undirected entries count both ways).
bool is_strongly_connected(const MixedGraph& d);

struct Contraction {
  MixedGraph graph;
  std::vector<VertexId> image;  // old id -> new id
  VertexId merged = 0;          // the fresh vertex standing for the set
  std::size_t dropped = 0;      // multiplicity of entries internal to the set
};

// Merges `set` into one fresh vertex; survivors keep their relative order and
// the merged vertex gets the last id. Parallel entries with equal endpoints
// and direction are folded into one entry with summed multiplicity; loops are
// deleted.
Contraction contract(const MixedGraph& h, std::span<const VertexId> set);

struct Restriction {
  MixedGraph graph;
  std::vector<VertexId> original;  // new id -> old id
};

// Sub-multigraph on `vertices` (sorted, distinct) with the entries whose
// endpoints both lie inside; new ids follow the order of `vertices`.
Restriction restrict_to(const MixedGraph& h, std::span<const VertexId> vertices);

}  // namespace odiam

#endif  // ODIAM_GRAPH_HPP_
