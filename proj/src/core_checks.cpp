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

#include <algorithm>
#include <set>
#include <sstream>

#include "detail/core_internal.hpp"
#include "odiam/core.hpp"
#include "odiam/error.hpp"

namespace odiam {

using detail::contains;
using detail::minus;
using detail::sorted_copy;
using detail::unite;

namespace detail {

HatGraph hat_graph(const CoreState& before, const CoreState& after) {
  HatGraph out;
  out.image.assign(after.n, HatGraph::kNoImage);
  std::vector<VertexId> vertices = after.core_vertices;
  std::sort(vertices.begin(), vertices.end());
  VertexId next = 0;
  for (VertexId v : vertices) {
    if (!before.in_core[v]) out.image[v] = next++;
  }
  out.merged = next;
  for (VertexId v : vertices) {
    if (before.in_core[v]) out.image[v] = out.merged;
  }
  out.graph = MixedGraph(static_cast<std::size_t>(next) + 1);
  // Only this round's arcs can leave V(H_i); arcs inside V(H_i) become loops.
  for (const Arc& a : after.arcs) {
    const VertexId x = out.image[a.tail];
    const VertexId y = out.image[a.head];
    if (x != y) out.graph.add_arc(x, y);
  }
  return out;
}

}  // namespace detail

namespace {

std::string list(const std::vector<VertexId>& v, std::size_t limit = 8) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) out << (i ? "," : "") << v[i];
  if (v.size() > limit) out << ",...";
  out << ']';
  return out.str();
}

// Depth-limited BFS in the hat graph; true if some target is within `limit`.
bool reaches_within(const MixedGraph& h, VertexId from, const std::vector<char>& target,
                    std::uint32_t limit, Traversal mode) {
  std::vector<std::uint32_t> dist(h.vertex_count(), 0xffffffffu);
  std::vector<VertexId> queue{from};
  dist[from] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    if (target[x]) return true;
    if (dist[x] == limit) continue;
    for (EdgeId id : h.incident(x)) {
      const MixedEdge& e = h.entry(id);
      const bool leaving = e.a == x;
      if (leaving != (mode == Traversal::kForward)) continue;
      const VertexId y = leaving ? e.b : e.a;
      if (dist[y] == 0xffffffffu) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return false;
}

std::vector<VertexId> closed_neighborhood(const Graph& g, VertexId v) {
  std::vector<VertexId> out(g.neighbors(v).begin(), g.neighbors(v).end());
  out.push_back(v);
  return out;
}

std::size_t union_size(const Graph& g, const std::vector<VertexId>& set) {
  std::vector<char> mark(g.vertex_count(), 0);
  std::size_t count = 0;
  for (VertexId v : set) {
    for (VertexId z : closed_neighborhood(g, v)) {
      if (!mark[z]) {
        mark[z] = 1;
        ++count;
      }
    }
  }
  return count;
}

class CheckList {
 public:
  explicit CheckList(std::size_t round) : round_(round) {}
  void add(const std::string& id, bool pass, const std::string& detail) {
    out_.push_back(ClaimCheck{id, round_, pass, detail});
  }
  std::vector<ClaimCheck> take() { return std::move(out_); }

 private:
  std::size_t round_;
  std::vector<ClaimCheck> out_;
};

std::string structure_problems(const Graph& g, const CoreState& before, const RoundRecord& r) {
  std::vector<std::string> problems;
  auto note = [&](const std::string& s) {
    if (problems.size() < 6) problems.push_back(s);
  };
  const Path& p = r.p;
  const Path& q = r.q;
  if (p.vertices.size() < 4 || p.length() % 3 != 0) note("p is not a positive multiple of 3");
  if (!is_path_in(g, p)) note("P is not a path of G");
  if (!p.empty() && !before.in_core[p.front()]) note("u_0 is not in the core");
  {
    std::vector<VertexId> core(before.core_vertices);
    const DistanceMap d = bfs_distance(g, core);
    for (std::size_t j = 0; j < p.vertices.size(); ++j) {
      if (d.get(p[j]) != static_cast<std::uint32_t>(j)) {
        note("P is not a geodesic from the core at u_" + std::to_string(j));
        break;
      }
    }
    if (!p.empty()) {
      const DistanceMap from_u0 = bfs_distance(g, {p.front()});
      for (std::size_t j = 0; j < p.vertices.size(); ++j) {
        if (from_u0.get(p[j]) != static_cast<std::uint32_t>(j)) {
          note("d(u_j, u_0) != j at j=" + std::to_string(j));
          break;
        }
      }
    }
  }
  if (!is_path_in(g, q) || q.vertices.size() < 2) note("Q is not a path of G");
  if (!q.empty() && !p.empty()) {
    if (q.front() != p.back()) note("Q does not start at u_p");
    if (!before.in_core[q.back()]) note("Q does not end in the core");
    for (std::size_t j = 0; j + 1 < q.vertices.size(); ++j) {
      if (before.in_core[q[j]]) note("Q enters the core early");
      auto ip = p.index_of(q[j]);
      if (ip && *ip > 0 && p[*ip - 1] == q[j + 1]) note("Q steps backwards along P");
    }
    const auto cd = detail::consistent_distances(g, p, before.in_core);
    if (cd.length != q.length()) note("Q is not a shortest consistent path");
  }
  const IndexSets sets = index_sets(p, q);
  if (sets.a_prime != r.a_prime || sets.b_prime != r.b_prime) note("A'/B' do not match the index rule");
  if (p.length() != 3 * r.a_prime.size()) note("|E(P)| != 3|A'|");
  if (q.length() > 3 * r.b_prime.size() + 2) note("|E(Q)| > 3|B'| + 2");
  for (VertexId a : r.a_prime) {
    const DistanceMap d = bfs_distance(g, {a});
    for (VertexId o : r.a_prime) {
      if (o != a && d.at(o) < 3) note("A' vertices " + std::to_string(a) + "," + std::to_string(o) + " closer than 3");
    }
  }
  const SecondOrderSets second = second_order_sets(g, r.a_prime, r.b_prime);
  if (second.a_double != r.a_double || second.b_double != r.b_double) note("A''/B'' mismatch");
  const auto a_set = unite(r.a_prime, r.a_double);
  const auto b_set = unite(r.b_prime, r.b_double);
  const auto a_free = minus(r.a_prime, b_set);
  const auto b_free = minus(r.b_prime, a_set);
  const bool expect_a = a_set.size() >= b_set.size();
  if (r.witness_is_a != expect_a || r.witness != (expect_a ? a_set : b_set)) {
    note("witness is not the larger of A and B");
  }
  std::set<VertexId> covered_a;
  std::set<VertexId> covered_b;
  for (const Connector& c : r.connectors) {
    covered_a.insert(c.a);
    covered_b.insert(c.b);
    if (!contains(a_free, c.a) || !contains(b_free, c.b)) note("connector endpoints outside A'\\B or B'\\A");
    for (const Path* path : {&c.path1, &c.path2}) {
      if (!is_path_in(g, *path) || path->length() > 2 || path->length() < 1 ||
          path->front() != c.focus() || path->back() != c.partner()) {
        note("connector path invalid");
      }
    }
    if (c.path1.length() == 2 && c.path2.length() == 2 && c.path1[1] == c.path2[1]) {
      note("connector paths share their middle vertex");
    }
    if (c.path1 == c.path2) note("connector paths coincide");
  }
  for (VertexId a : a_free) {
    if (!covered_a.count(a)) note("vertex " + std::to_string(a) + " of A'\\B has no connector");
  }
  for (VertexId b : b_free) {
    if (!covered_b.count(b)) note("vertex " + std::to_string(b) + " of B'\\A has no connector");
  }
  std::string out;
  for (const auto& s : problems) out += (out.empty() ? "" : "; ") + s;
  return out;
}

}  // namespace

std::vector<ClaimCheck> check_round(const Graph& g, const CoreState& before, const CoreState& after,
                                    std::size_t round_index) {
  if (round_index == 0 || round_index > after.rounds.size()) {
    fail(ErrorCode::kInvalidArgument, "check_round: no such round");
  }
  const RoundRecord& r = after.rounds[round_index - 1];
  CheckList checks(round_index);

  const std::string problems = structure_problems(g, before, r);
  checks.add("structure", problems.empty(), problems.empty() ? "P, Q, index sets and connectors valid" : problems);

  const Restriction core = after.core_restriction();
  const detail::HatGraph hat = detail::hat_graph(before, after);
  const bool core_strong = is_strongly_connected(core.graph);
  const bool hat_strong = is_strongly_connected(hat.graph);
  checks.add("strong", core_strong && hat_strong,
             std::string("H_{i+1} ") + (core_strong ? "strong" : "NOT strong") + ", contracted graph " +
                 (hat_strong ? "strong" : "NOT strong"));

  // Short two-way access between every focus vertex and the other side.
  {
    std::vector<char> to_b(hat.graph.vertex_count(), 0);
    std::vector<char> to_a(hat.graph.vertex_count(), 0);
    to_b[hat.merged] = to_a[hat.merged] = 1;
    for (VertexId b : r.b_prime) to_b[hat.image[b]] = 1;
    for (VertexId a : r.a_prime) to_a[hat.image[a]] = 1;
    std::vector<VertexId> failed;
    for (VertexId a : minus(r.a_prime, r.b_double)) {
      const VertexId x = hat.image[a];
      if (!reaches_within(hat.graph, x, to_b, 5, Traversal::kForward) ||
          !reaches_within(hat.graph, x, to_b, 5, Traversal::kBackward)) {
        failed.push_back(a);
      }
    }
    for (VertexId b : minus(r.b_prime, r.a_double)) {
      const VertexId x = hat.image[b];
      if (!reaches_within(hat.graph, x, to_a, 5, Traversal::kForward) ||
          !reaches_within(hat.graph, x, to_a, 5, Traversal::kBackward)) {
        failed.push_back(b);
      }
    }
    checks.add("claim3", failed.empty(),
               failed.empty() ? "every focus vertex within 5 of the other side both ways"
                              : "too far from the other side: " + list(failed));
  }

  const std::size_t a_size = unite(r.a_prime, r.a_double).size();
  const std::size_t b_size = unite(r.b_prime, r.b_double).size();
  {
    const auto d = directed_diameter(hat.graph);
    const std::uint64_t bound = 3 * std::max(a_size, b_size) + 32;
    const bool ok = d && *d <= bound;
    checks.add("claim4.hat", ok,
               "diam=" + (d ? std::to_string(*d) : std::string("UNREACHABLE")) +
                   " bound=3*max(|A|,|B|)+32=" + std::to_string(bound));
  }
  const auto core_diam = directed_diameter(core.graph);
  const std::size_t s_size = after.witness.size();
  {
    const std::uint64_t bound = 3 * s_size + 32;
    const bool ok = core_diam && *core_diam <= bound;
    checks.add("claim4.core", ok,
               "diam=" + (core_diam ? std::to_string(*core_diam) : std::string("UNREACHABLE")) +
                   " bound=3|S|+32=" + std::to_string(bound));
  }
  {
    const bool ok = core_diam && within_linear_bound(*core_diam, after.epsilon, s_size, 0);
    checks.add("lemma.a", ok,
               "diam=" + (core_diam ? std::to_string(*core_diam) : std::string("UNREACHABLE")) +
                   " bound=(3+eps)|S| with |S|=" + std::to_string(s_size));
  }

  // Auxiliary multigraph on S': pairs with intersecting closed neighbourhoods,
  // doubled when adjacent.
  {
    const std::vector<VertexId>& s = r.witness;
    std::vector<std::vector<std::size_t>> owners(g.vertex_count());
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (VertexId z : closed_neighborhood(g, s[i])) owners[z].push_back(i);
    }
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& o : owners) {
      for (std::size_t x = 0; x < o.size(); ++x) {
        for (std::size_t y = x + 1; y < o.size(); ++y) pairs.insert({o[x], o[y]});
      }
    }
    std::vector<std::size_t> degree(s.size(), 0);
    std::size_t edges = 0;
    for (auto [x, y] : pairs) {
      const std::size_t mult = g.has_edge(s[x], s[y]) ? 2 : 1;
      degree[x] += mult;
      degree[y] += mult;
      edges += mult;
    }
    const std::size_t max_deg = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
    checks.add("claim5.gamma", max_deg <= 6,
               "max degree " + std::to_string(max_deg) + " over |S'|=" + std::to_string(s.size()));
    const auto covered = static_cast<long long>(union_size(g, s));
    const long long delta = after.delta;
    const auto size = static_cast<long long>(s.size());
    const long long via_gamma = (delta + 1) * size - static_cast<long long>(edges);
    const long long target = (delta - 2) * size;
    checks.add("claim5.union", covered >= via_gamma && covered >= target,
               "|N[S']|=" + std::to_string(covered) + " (delta+1)|S'|-|E|=" + std::to_string(via_gamma) +
                   " (delta-2)|S'|=" + std::to_string(target));
  }
  {
    const auto covered = static_cast<long long>(union_size(g, after.witness));
    const long long target = (static_cast<long long>(after.delta) - 2) * static_cast<long long>(s_size);
    checks.add("lemma.b", covered >= target,
               "|N[S]|=" + std::to_string(covered) + " (delta-2)|S|=" + std::to_string(target));
  }
  {
    std::vector<int> owner(g.vertex_count(), -1);
    for (std::size_t k = 0; k + 1 < after.witness_rounds.size(); ++k) {
      for (VertexId x : after.witness_rounds[k]) {
        for (VertexId z : closed_neighborhood(g, x)) owner[z] = static_cast<int>(k);
      }
    }
    std::vector<VertexId> clashes;
    for (VertexId y : r.witness) {
      for (VertexId z : closed_neighborhood(g, y)) {
        if (owner[z] >= 0) {
          clashes.push_back(y);
          break;
        }
      }
    }
    checks.add("disjoint", clashes.empty(),
               clashes.empty() ? "closed neighbourhoods disjoint from earlier rounds"
                               : "new witness vertices touching earlier neighbourhoods: " + list(clashes));
  }
  return checks.take();
}

}  // namespace odiam
