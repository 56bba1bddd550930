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

#include "odiam/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>

#include "detail/parallel.hpp"
#include "odiam/error.hpp"

namespace odiam {

namespace {

using Mask = std::uint64_t;
constexpr std::uint32_t kWorse = std::numeric_limits<std::uint32_t>::max();

// Directed diameter from out-neighbour masks; returns kWorse as soon as some
// eccentricity exceeds `limit` or a vertex is unreachable.
std::uint32_t mask_diameter(const std::vector<Mask>& out, std::size_t n, std::uint32_t limit) {
  const Mask everything = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::uint32_t diameter = 0;
  for (std::size_t s = 0; s < n; ++s) {
    Mask reached = Mask{1} << s;
    Mask frontier = reached;
    std::uint32_t steps = 0;
    while (reached != everything) {
      if (steps >= limit) return kWorse;
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= out[std::countr_zero(f)];
      next &= ~reached;
      if (next == 0) return kWorse;
      reached |= next;
      frontier = next;
      ++steps;
    }
    diameter = std::max(diameter, steps);
  }
  return diameter;
}

struct Search {
  std::size_t n = 0;
  std::vector<Edge> edges;                 // enumeration order
  std::vector<std::vector<VertexId>> done;  // vertices whose last edge is index i
  std::uint32_t lower_bound = 0;
};

struct Subtree {
  std::uint32_t best = kWorse;
  std::uint64_t bits = 0;  // bit i set: edge i oriented v -> u
  std::uint64_t leaves = 0;
};

class Walker {
 public:
  Walker(const Search& s, std::atomic<std::uint32_t>& shared_best) : s_(s), shared_(shared_best) {
    out_.assign(s.n, 0);
    in_.assign(s.n, 0);
  }

  // Explores every completion of the fixed prefix (nothing if the prefix
  // already violates the source/sink rule).
  void run(std::size_t prefix_len, std::uint64_t prefix_bits, Subtree& result,
           const std::atomic<bool>& cancelled) {
    result_ = &result;
    cancelled_ = &cancelled;
    for (std::size_t i = 0; i < prefix_len; ++i) {
      assign(i, (prefix_bits >> i) & 1);
      if (!completed_ok(i)) return;
    }
    bits_ = prefix_bits;
    dfs(prefix_len);
  }

 private:
  void assign(std::size_t i, std::uint64_t flip) {
    const Edge& e = s_.edges[i];
    const VertexId tail = flip ? e.v : e.u;
    const VertexId head = flip ? e.u : e.v;
    out_[tail] |= Mask{1} << head;
    in_[head] |= Mask{1} << tail;
  }
  void unassign(std::size_t i, std::uint64_t flip) {
    const Edge& e = s_.edges[i];
    const VertexId tail = flip ? e.v : e.u;
    const VertexId head = flip ? e.u : e.v;
    out_[tail] &= ~(Mask{1} << head);
    in_[head] &= ~(Mask{1} << tail);
  }
  bool completed_ok(std::size_t i) const {
    for (VertexId v : s_.done[i]) {
      if (out_[v] == 0 || in_[v] == 0) return false;
    }
    return true;
  }

  bool finished() const {
    return result_->best <= s_.lower_bound || cancelled_->load(std::memory_order_relaxed);
  }

  void dfs(std::size_t i) {
    if (finished()) return;
    if (i == s_.edges.size()) {
      ++result_->leaves;
      // Locally only strict improvements count; globally prune strictly worse
      // values so that a tie in an earlier subtree is still found.
      const std::uint32_t global = shared_.load(std::memory_order_relaxed);
      std::uint32_t limit = result_->best == kWorse ? kWorse - 1 : result_->best - 1;
      if (global != kWorse) limit = std::min(limit, global);
      const std::uint32_t d = mask_diameter(out_, s_.n, limit);
      if (d != kWorse && d < result_->best) {
        result_->best = d;
        result_->bits = bits_;
        std::uint32_t cur = shared_.load();
        while (d < cur && !shared_.compare_exchange_weak(cur, d)) {
        }
      }
      return;
    }
    for (std::uint64_t flip = 0; flip < 2; ++flip) {
      assign(i, flip);
      if (completed_ok(i)) {
        if (flip) bits_ |= std::uint64_t{1} << i;
        dfs(i + 1);
        bits_ &= ~(std::uint64_t{1} << i);
      }
      unassign(i, flip);
      if (finished()) return;
    }
  }

  const Search& s_;
  std::atomic<std::uint32_t>& shared_;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
  std::uint64_t bits_ = 0;
  Subtree* result_ = nullptr;
  const std::atomic<bool>* cancelled_ = nullptr;
};

}  // namespace

OracleResult brute_force_oriented_diameter(const Graph& g, const OracleOptions& options) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (m > options.max_edges) {
    fail(ErrorCode::kTooManyEdges, "oracle: " + std::to_string(m) + " edges exceed the limit of " +
                                       std::to_string(options.max_edges));
  }
  if (n > 64 || m > 63) fail(ErrorCode::kTooManyEdges, "oracle: graph too large for exhaustive search");
  if (n == 0) fail(ErrorCode::kEmptyGraph, "oracle: graph has no vertices");
  OracleResult result;
  if (n == 1) return result;
  if (!is_connected(g) || !find_bridges(g).empty()) {
    fail(ErrorCode::kNoStrongOrientation, "oracle: input is disconnected or has a bridge");
  }

  Search s;
  s.n = n;
  s.edges.assign(g.edges().begin(), g.edges().end());
  // Edges sorted by larger endpoint so low vertices are completed early.
  std::stable_sort(s.edges.begin(), s.edges.end(), [](const Edge& a, const Edge& b) {
    return std::max(a.u, a.v) < std::max(b.u, b.v);
  });
  std::vector<std::size_t> last(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    last[s.edges[i].u] = i;
    last[s.edges[i].v] = i;
  }
  s.done.assign(m, {});
  for (VertexId v = 0; v < n; ++v) s.done[last[v]].push_back(v);
  s.lower_bound = std::max<std::uint32_t>(*undirected_diameter(g), 2);
  result.lower_bound = s.lower_bound;

  // Edge 0 is fixed as u -> v; the next `depth` edges form the task prefix.
  const std::size_t depth = options.parallel ? std::min<std::size_t>(m - 1, 10) : 0;
  const std::size_t tasks = std::size_t{1} << depth;
  std::vector<Subtree> subtrees(tasks);
  std::atomic<std::uint32_t> shared_best{kWorse};
  std::atomic<std::size_t> optimal_task{tasks};
  std::vector<std::atomic<bool>> cancel(tasks);
  for (auto& c : cancel) c = false;

  auto body = [&](unsigned, std::size_t t) {
    if (t > optimal_task.load()) return;
    // Task order must match the sequential DFS order: edge 1 is the most
    // significant choice.
    std::uint64_t prefix = 0;
    for (std::size_t j = 0; j < depth; ++j) {
      prefix |= static_cast<std::uint64_t>((t >> (depth - 1 - j)) & 1) << (j + 1);
    }
    Walker walker(s, shared_best);
    walker.run(depth + 1, prefix, subtrees[t], cancel[t]);
    if (subtrees[t].best <= s.lower_bound) {
      std::size_t cur = optimal_task.load();
      while (t < cur && !optimal_task.compare_exchange_weak(cur, t)) {
      }
      for (std::size_t later = t + 1; later < tasks; ++later) cancel[later] = true;
    }
  };
  if (options.parallel) {
    detail::parallel_for(tasks, body);
  } else {
    body(0, 0);
  }

  const Subtree* winner = nullptr;
  for (const Subtree& st : subtrees) {
    result.leaves += st.leaves;
    if (st.best != kWorse && (!winner || st.best < winner->best)) winner = &st;
  }
  if (!winner) fail(ErrorCode::kNoStrongOrientation, "oracle: no strongly connected orientation");
  result.value = winner->best;
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = s.edges[i];
    result.witness.push_back((winner->bits >> i) & 1 ? Arc{e.v, e.u} : Arc{e.u, e.v});
  }
  return result;
}

}  // namespace odiam
