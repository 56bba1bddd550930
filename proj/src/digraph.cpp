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

#include "detail/digraph.hpp"

#include <algorithm>

#include "detail/parallel.hpp"

namespace odiam::detail {

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs)
    : n_(n), offsets_(n + 1, 0), targets_(arcs.size()) {
  for (const Arc& a : arcs) ++offsets_[a.tail + 1];
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Arc& a : arcs) targets_[cursor[a.tail]++] = a.head;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

std::size_t Digraph::bfs(VertexId source, std::vector<std::uint32_t>& dist,
                         std::vector<VertexId>& queue) const {
  dist.assign(n_, kInf);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    const std::uint32_t next = dist[x] + 1;
    for (VertexId y : out(x)) {
      if (dist[y] == kInf) {
        dist[y] = next;
        queue.push_back(y);
      }
    }
  }
  return queue.size();
}

std::vector<std::uint32_t> Digraph::eccentricities() const {
  std::vector<std::uint32_t> ecc(n_, kInf);
  const unsigned workers = worker_count(n_);
  std::vector<std::vector<std::uint32_t>> dist(workers);
  std::vector<std::vector<VertexId>> queue(workers);
  parallel_for(n_, [&](unsigned w, std::size_t s) {
    const std::size_t reached = bfs(static_cast<VertexId>(s), dist[w], queue[w]);
    if (reached == n_) ecc[s] = dist[w][queue[w].back()];
  });
  return ecc;
}

std::optional<std::uint32_t> Digraph::diameter() const {
  if (n_ == 0) return 0;
  const auto ecc = eccentricities();
  const std::uint32_t worst = *std::max_element(ecc.begin(), ecc.end());
  if (worst == kInf) return std::nullopt;
  return worst;
}

}  // namespace odiam::detail
