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
#include "odiam/pipeline.hpp"

#include "odiam/error.hpp"

namespace odiam {

OrientResult orient(const Graph& g, const OrientOptions& options) {
  if (!options.epsilon.positive()) fail(ErrorCode::kInvalidArgument, "epsilon must be positive");
  const std::size_t n = g.vertex_count();
  if (n == 0) fail(ErrorCode::kEmptyGraph, "graph has no vertices");
  if (!is_connected(g)) fail(ErrorCode::kDisconnected, "graph is disconnected");
  const std::vector<Edge> bridges = find_bridges(g);
  if (!bridges.empty()) {
    fail(ErrorCode::kNotBridgeless, "bridged input: edge " + std::to_string(bridges[0].u) + "-" +
                                        std::to_string(bridges[0].v) + " is a bridge");
  }

  CoreOptions core_options;
  core_options.start = options.start;
  core_options.instrument = options.instrument;
  core_options.auto_threshold = options.auto_threshold;
  core_options.on_violation = ViolationPolicy::kRecord;
  core_options.on_round = options.on_round;

  ExtendOptions extend_options;
  extend_options.on_ear = options.on_ear;

  OrientResult result;
  const bool fallback = min_degree(g) < 3;
  result.core = initial_state(g, options.epsilon, core_options);
  extend_options.instrument = result.core.instrumented;
  std::uint32_t cap = result.core.cap;
  if (fallback) {
    // No rounds: the whole graph hangs off s_0 by ears.
    const DistanceMap d = bfs_distance(g, {result.core.start});
    cap = std::max<std::uint32_t>(d.max_finite().value_or(0), 1);
  } else {
    result.core = run_core(g, options.epsilon, core_options);
  }
  result.extension = extend_report(g, result.core.core_graph(), result.core.core_vertices, cap,
                                   extend_options);

  BoundInputs inputs;
  inputs.arcs = result.extension.orientation.arcs();
  inputs.epsilon = options.epsilon;
  inputs.cap = result.core.cap;
  inputs.witness = result.core.witness;
  inputs.core_vertices = result.core.core_vertices;
  inputs.core_diameter = result.extension.core_diameter;
  inputs.rounds = result.core.round_count();
  inputs.checks = result.core.checks;
  inputs.checks.insert(inputs.checks.end(), result.extension.checks.begin(),
                       result.extension.checks.end());
  inputs.fallback = fallback;
  inputs.measured_diameter = result.extension.diameter;
  result.certificate = bound_report(g, inputs);
  return result;
}

}  // namespace odiam
