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
#ifndef ODIAM_PIPELINE_HPP_
#define ODIAM_PIPELINE_HPP_

#include <functional>
#include <optional>

#include "odiam/core.hpp"
#include "odiam/extension.hpp"
#include "odiam/graph.hpp"
#include "odiam/rational.hpp"
#include "odiam/verify.hpp"

namespace odiam {

struct OrientOptions {
  Rational epsilon{1, 1};
  std::optional<VertexId> start;
  Instrumentation instrument = Instrumentation::kAuto;
  std::size_t auto_threshold = 2000;
  std::function<void(const EarRecord&)> on_ear;
  std::function<void(std::size_t, const RoundRecord&, const std::vector<ClaimCheck>&)> on_round;
};

struct OrientResult {
  CoreState core;
  ExtensionResult extension;
  OrientationCertificate certificate;
};

// Core rounds, then extension, then the certificate. Claim failures are
// recorded in the certificate rather than thrown. Inputs with minimum
// degree 2 take an extension-only path whose certificate carries
// fallback = true and no bound claim.
// Throws kEmptyGraph, kDisconnected, kNotBridgeless, kInvalidArgument.
OrientResult orient(const Graph& g, const OrientOptions& options = {});

}  // namespace odiam

#endif  // ODIAM_PIPELINE_HPP_
