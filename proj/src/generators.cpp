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

#include "odiam/generators.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "odiam/error.hpp"

namespace odiam {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Mutable simple graph used while a random instance is being repaired.
class Builder {
 public:
  explicit Builder(std::size_t n) : adj_(n) {}

  bool add(VertexId u, VertexId v) {
    if (u == v || !keys_.insert(edge_key(u, v)).second) return false;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.push_back(Edge{u, v});
    return true;
  }
  bool has(VertexId u, VertexId v) const { return keys_.count(edge_key(u, v)) != 0; }
  std::size_t degree(VertexId v) const { return adj_[v].size(); }
  std::size_t size() const { return adj_.size(); }
  Graph build() const { return Graph::from_edges(adj_.size(), edges_); }

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> keys_;
};

VertexId uniform_vertex(std::mt19937_64& rng, std::size_t n) {
  return static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

// A vertex of `pool` not adjacent to v (and != v): random probes first, then a scan.
std::optional<VertexId> non_neighbor(const Builder& b, VertexId v, std::span<const VertexId> pool,
                                     std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const VertexId w = pool[uniform_vertex(rng, pool.size())];
    if (w != v && !b.has(v, w)) return w;
  }
  for (VertexId w : pool) {
    if (w != v && !b.has(v, w)) return w;
  }
  return std::nullopt;
}

std::vector<std::vector<VertexId>> components_without(const Graph& g, std::optional<Edge> skip) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexId> stack{root};
    comp[root] = id;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      out[id].push_back(x);
      for (VertexId y : g.neighbors(x)) {
        if (skip && Edge{std::min(x, y), std::max(x, y)} == *skip) continue;
        if (comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) fail(ErrorCode::kInvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, static_cast<VertexId>((v + 1) % n)});
  return Graph::from_edges(n, edges);
}

Graph sequential_join(std::span<const Graph> parts) {
  if (parts.empty()) fail(ErrorCode::kEmptyList, "sequential_join: no parts");
  std::vector<std::size_t> start(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    start[i + 1] = start[i] + parts[i].vertex_count();
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto base = static_cast<VertexId>(start[i]);
    for (const Edge& e : parts[i].edges()) edges.push_back({base + e.u, base + e.v});
    if (i + 1 < parts.size()) {
      for (std::size_t x = start[i]; x < start[i + 1]; ++x) {
        for (std::size_t y = start[i + 1]; y < start[i + 2]; ++y) {
          edges.push_back({static_cast<VertexId>(x), static_cast<VertexId>(y)});
        }
      }
    }
  }
  return Graph::from_edges(start.back(), edges);
}

Graph lower_bound_family(std::uint32_t delta, std::uint32_t k) {
  if (delta < 4) fail(ErrorCode::kDeltaTooSmall, "lower_bound_family needs delta >= 4");
  if (k < 1) fail(ErrorCode::kKTooSmall, "lower_bound_family needs k >= 1");
  std::vector<Graph> parts;
  parts.push_back(complete_graph(delta - 1));
  for (std::uint32_t i = 0; i < k; ++i) {
    parts.push_back(complete_graph(2));
    parts.push_back(complete_graph(2));
    parts.push_back(complete_graph(delta - 3));
  }
  parts.push_back(complete_graph(2));
  parts.push_back(complete_graph(2));
  parts.push_back(complete_graph(delta - 1));
  return sequential_join(parts);
}

Graph random_min_degree_bridgeless(std::size_t n, std::uint32_t delta, std::uint64_t seed) {
  if (delta < 2 || n < static_cast<std::size_t>(delta) + 1) {
    fail(ErrorCode::kInvalidArgument, "random graph needs delta >= 2 and n >= delta + 1");
  }
  if (delta + 1 == n) return complete_graph(n);
  std::mt19937_64 rng(seed);
  Builder b(n);
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), VertexId{0});

  // Near-regular start: pair up delta stubs per vertex, dropping loops and repeats.
  std::vector<VertexId> stubs;
  stubs.reserve(n * delta);
  for (VertexId v = 0; v < n; ++v) stubs.insert(stubs.end(), delta, v);
  std::shuffle(stubs.begin(), stubs.end(), rng);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) b.add(stubs[i], stubs[i + 1]);

  // Degree repair.
  for (VertexId v = 0; v < n; ++v) {
    while (b.degree(v) < delta) {
      auto w = non_neighbor(b, v, all, rng);
      if (!w) fail(ErrorCode::kConstructionFailed, "degree repair stalled; try another seed");
      b.add(v, *w);
    }
  }

  // Connectivity and bridge repair; each added edge removes the offending cut.
  constexpr int kMaxRepairs = 100000;
  for (int round = 0; round < kMaxRepairs; ++round) {
    const Graph g = b.build();
    auto comps = components_without(g, std::nullopt);
    if (comps.size() > 1) {
      for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
        const VertexId x = comps[i][uniform_vertex(rng, comps[i].size())];
        const VertexId y = comps[i + 1][uniform_vertex(rng, comps[i + 1].size())];
        b.add(x, y);
      }
      continue;
    }
    const auto bridges = find_bridges(g);
    if (bridges.empty()) return g;
    const Edge bridge = bridges.front();
    auto sides = components_without(g, bridge);
    const auto& side_u = std::find(sides[0].begin(), sides[0].end(), bridge.u) != sides[0].end()
                             ? sides[0] : sides[1];
    const auto& side_v = &side_u == &sides[0] ? sides[1] : sides[0];
    bool added = false;
    for (int attempt = 0; attempt < 256 && !added; ++attempt) {
      const VertexId x = side_u[uniform_vertex(rng, side_u.size())];
      const VertexId y = side_v[uniform_vertex(rng, side_v.size())];
      added = b.add(x, y);
    }
    for (VertexId x : side_u) {
      if (added) break;
      for (VertexId y : side_v) {
        if (b.add(x, y)) {
          added = true;
          break;
        }
      }
    }
    if (!added) fail(ErrorCode::kConstructionFailed, "bridge repair stalled; try another seed");
  }
  fail(ErrorCode::kConstructionFailed, "repairs did not converge; try another seed");
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "gdk") return FamilyKind::kGdk;
  if (name == "random") return FamilyKind::kRandom;
  if (name == "cycle") return FamilyKind::kCycle;
  if (name == "complete") return FamilyKind::kComplete;
  fail(ErrorCode::kInvalidArgument, "unknown family '" + std::string(name) + "'");
}

std::string_view family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kGdk: return "gdk";
    case FamilyKind::kRandom: return "random";
    case FamilyKind::kCycle: return "cycle";
    case FamilyKind::kComplete: return "complete";
  }
  return "unknown";
}

Graph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kGdk: return lower_bound_family(spec.delta, spec.k);
    case FamilyKind::kRandom: return random_min_degree_bridgeless(spec.n, spec.delta, spec.seed);
    case FamilyKind::kCycle: return cycle_graph(spec.n);
    case FamilyKind::kComplete: return complete_graph(spec.n);
  }
  fail(ErrorCode::kInvalidArgument, "unknown family");
}

std::string describe(const FamilySpec& spec) {
  std::string out = "family=" + std::string(family_kind_name(spec.kind));
  switch (spec.kind) {
    case FamilyKind::kGdk:
      out += " delta=" + std::to_string(spec.delta) + " k=" + std::to_string(spec.k);
      break;
    case FamilyKind::kRandom:
      out += " n=" + std::to_string(spec.n) + " delta=" + std::to_string(spec.delta) +
             " seed=" + std::to_string(spec.seed);
      break;
    case FamilyKind::kCycle:
    case FamilyKind::kComplete:
      out += " n=" + std::to_string(spec.n);
      break;
  }
  return out;
}

}  // namespace odiam
