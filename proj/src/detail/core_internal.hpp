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

#ifndef ODIAM_DETAIL_CORE_INTERNAL_HPP_
#define ODIAM_DETAIL_CORE_INTERNAL_HPP_

#include <algorithm>
#include <vector>

#include "odiam/core.hpp"

namespace odiam::detail {

// Ĥ: H_{i+1} restricted to its vertices with V(H_i) merged into one vertex.
// `image` maps original ids (of the whole input graph) to Ĥ ids; vertices
// outside V(H_{i+1}) map to kNoImage.
struct HatGraph {
  static constexpr VertexId kNoImage = 0xffffffffu;
  MixedGraph graph;
  std::vector<VertexId> image;
  VertexId merged = 0;
};
HatGraph hat_graph(const CoreState& before, const CoreState& after);

// Consistent distances from the end of P (never u_{j+1} -> u_j, core
// vertices are terminals) and to the core.
struct ConsistentDistances {
  static constexpr std::uint32_t kInf = 0xffffffffu;
  std::vector<std::uint32_t> from_end;  // from u_p
  std::vector<std::uint32_t> to_core;   // to the nearest core vertex
  std::uint32_t length = kInf;          // shortest consistent u_p -> core length
};
ConsistentDistances consistent_distances(const Graph& g, const Path& p,
                                         const std::vector<char>& in_core);

inline bool contains(const std::vector<VertexId>& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

inline std::vector<VertexId> minus(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<VertexId> unite(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<VertexId> sorted_copy(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace odiam::detail

#endif  // ODIAM_DETAIL_CORE_INTERNAL_HPP_
