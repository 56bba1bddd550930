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

#ifndef ODIAM_DETAIL_DIGRAPH_HPP_
#define ODIAM_DETAIL_DIGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "odiam/graph.hpp"

namespace odiam::detail {

// Compact out-adjacency used by the all-pairs routines.
class Digraph {
 public:
  static constexpr std::uint32_t kInf = 0xffffffffu;

  Digraph(std::size_t n, std::span<const Arc> arcs);

  std::size_t size() const noexcept { return n_; }
  std::span<const VertexId> out(VertexId v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  // Single-source BFS into `dist` (resized to n, kInf when unreachable).
  // Returns the number of vertices reached.
  std::size_t bfs(VertexId source, std::vector<std::uint32_t>& dist,
                  std::vector<VertexId>& queue) const;

  // Max over ordered pairs, or nullopt if some pair is unreachable.
  std::optional<std::uint32_t> diameter() const;

  // Per-source eccentricities (kInf when some vertex is unreachable).
  std::vector<std::uint32_t> eccentricities() const;

 private:
  std::size_t n_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
};

}  // namespace odiam::detail

#endif  // ODIAM_DETAIL_DIGRAPH_HPP_
