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
#ifndef ODIAM_EXTENSION_HPP_
#define ODIAM_EXTENSION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "odiam/core.hpp"
#include "odiam/graph.hpp"

namespace odiam {

// A path absorbed as one directed path. `path` is stored in traversal order:
// every arc runs path[i] -> path[i+1]. Both endpoints lie in the oriented
// region at absorption time (they may coincide) and the interior lies
// outside it. A chord is a degenerate ear of length 1.
struct EarRecord {
  Path path;
  VertexId through = 0;     // the vertex the ear was built for
  std::uint32_t layer = 0;  // BFS distance of `through` from the core
  bool reversed = false;    // traversal runs against the discovery order

  bool chord() const { return path.length() == 1; }
};

struct ExtendOptions {
  bool instrument = true;  // per-ear length assertions
  std::function<void(const EarRecord&)> on_ear;
};

struct ExtensionResult {
  MixedGraph orientation;   // every edge of the input graph oriented
  std::vector<EarRecord> ears;
  std::size_t chords = 0;
  std::uint32_t cap = 0;
  std::uint32_t core_diameter = 0;
  std::optional<std::uint32_t> diameter;  // nullopt when not strong
  std::uint32_t max_to_core = 0;    // max over v of d(v -> core)
  std::uint32_t max_from_core = 0;  // max over v of d(core -> v)
  std::vector<ClaimCheck> checks;   // ids: extension.*

  std::uint64_t allowance() const { return additive_constant(cap); }
  bool all_checks_pass() const;
};

// Shortest ear through a vertex outside `in_region`. The ear starts with an
// edge from the region into v when one exists.
// Throws kNoEar when v lies on no such ear (only possible with bridges).
EarRecord find_ear(const Graph& g, std::span<const char> in_region, VertexId v);

// Degenerate ear for an edge whose endpoints both lie in the region.
EarRecord find_ear(const Graph& g, std::span<const char> in_region, Edge chord);

// Orients all of g around the oriented core. `core` is indexed like g and
// holds only the core's arcs; `core_vertices` lists V(core) (needed when the
// core is a single vertex). Preconditions throw: kInvalidArgument (core arc
// not an edge of g, unoriented core entries, cap = 0), kCoreNotStrong,
// kVertexTooFar. Check failures are recorded, not thrown.
ExtensionResult extend_report(const Graph& g, const MixedGraph& core,
                              std::span<const VertexId> core_vertices,
                              std::uint32_t cap,
                              const ExtendOptions& options = {});

// As extend_report, but throws kBoundViolated when a check fails.
MixedGraph extend(const Graph& g, const MixedGraph& core,
                  std::span<const VertexId> core_vertices, std::uint32_t cap,
                  const ExtendOptions& options = {});

}  // namespace odiam

#endif  // ODIAM_EXTENSION_HPP_
