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

#ifndef ODIAM_GENERATORS_HPP_
#define ODIAM_GENERATORS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "odiam/graph.hpp"

namespace odiam {

Graph complete_graph(std::size_t n);
// Throws kInvalidArgument for n < 3.
Graph cycle_graph(std::size_t n);

// Disjoint union of `parts` (relabelled consecutively in order) plus every
// edge between consecutive parts. Throws kEmptyList.
Graph sequential_join(std::span<const Graph> parts);

// K_{d-1} + (K_2 + K_2 + K_{d-3}) x k + K_2 + K_2 + K_{d-1}.
// n = (d+1)(k+2), minimum degree d, diameter 3k+3.
// Throws kDeltaTooSmall (d < 4) or kKTooSmall (k < 1).
Graph lower_bound_family(std::uint32_t delta, std::uint32_t k);

// Connected, bridgeless, minimum degree >= delta; a deterministic function of
// (n, delta, seed). Throws kInvalidArgument unless n >= delta + 1 and
// delta >= 2, kConstructionFailed if repairs do not converge.
Graph random_min_degree_bridgeless(std::size_t n, std::uint32_t delta, std::uint64_t seed);

enum class FamilyKind { kGdk, kRandom, kCycle, kComplete };

struct FamilySpec {
  FamilyKind kind = FamilyKind::kGdk;
  std::uint32_t delta = 4;
  std::uint32_t k = 1;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

// "gdk", "random", "cycle", "complete"; throws kInvalidArgument otherwise.
FamilyKind parse_family_kind(std::string_view name);
std::string_view family_kind_name(FamilyKind kind);

Graph generate(const FamilySpec& spec);
// One-line description such as "family=gdk delta=4 k=2".
std::string describe(const FamilySpec& spec);

}  // namespace odiam

#endif  // ODIAM_GENERATORS_HPP_
