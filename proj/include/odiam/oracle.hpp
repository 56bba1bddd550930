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

#ifndef ODIAM_ORACLE_HPP_
#define ODIAM_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "odiam/graph.hpp"

namespace odiam {

struct OracleOptions {
  std::size_t max_edges = 18;
  bool parallel = true;
};

struct OracleResult {
  std::uint32_t value = 0;   // exact oriented diameter
  std::vector<Arc> witness;  // one orientation attaining it, in edge order
  std::uint32_t lower_bound = 0;  // max(undirected diameter, 2) used to stop early
  std::uint64_t leaves = 0;       // complete orientations whose diameter was evaluated
};

// Exact minimum, over all strongly connected orientations, of the directed
// diameter. The first edge is fixed (reversing every arc preserves the
// diameter), so 2^(m-1) orientations are searched with source/sink pruning.
// The witness is the first optimal orientation in enumeration order, so the
// result does not depend on threading.
// Throws kTooManyEdges (m > max_edges or n > 64) and kNoStrongOrientation
// (disconnected or bridged input).
OracleResult brute_force_oriented_diameter(const Graph& g, const OracleOptions& options = {});

}  // namespace odiam

#endif  // ODIAM_ORACLE_HPP_
