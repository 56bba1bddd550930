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
#ifndef ODIAM_VERIFY_HPP_
#define ODIAM_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "odiam/core.hpp"
#include "odiam/graph.hpp"
#include "odiam/rational.hpp"

namespace odiam {

enum class ValidationIssue {
  kMissingEdge,        // an edge of g received no arc
  kDoubleOrientation,  // an edge received both u->v and v->u
  kDuplicateArc,       // the same arc listed twice
  kUnknownArc,         // arc between non-adjacent or out-of-range vertices
  kNotStrong,          // bijective, but not strongly connected
};

std::string_view validation_issue_name(ValidationIssue issue);

struct ValidationProblem {
  ValidationIssue issue = ValidationIssue::kMissingEdge;
  VertexId u = 0;
  VertexId v = 0;
};

struct ValidationReport {
  bool bijective = false;           // arcs and edges correspond one-to-one
  bool strongly_connected = false;  // only evaluated when bijective
  std::optional<std::uint32_t> diameter;  // only when bijective and strong
  std::vector<ValidationProblem> problems;

  bool ok() const { return problems.empty(); }
};

// Never throws on bad arcs: every problem becomes a report entry.
ValidationReport validate_orientation(const Graph& g, std::span<const Arc> arcs,
                                      bool measure_diameter = true);

struct AuditReport {
  std::size_t rounds = 0;
  std::vector<ClaimCheck> checks;  // per round, plus "replay"

  bool pass() const;
};

// Replays the recorded rounds from S_0 and re-runs every per-round check,
// independently of whether the run itself was instrumented.
AuditReport audit_core_state(const Graph& g, const CoreState& state);

// Aggregate of all checks sharing one id.
struct ClaimSummary {
  std::string id;
  std::size_t total = 0;
  std::size_t failures = 0;
  std::string first_failure;  // "round r: detail"

  bool pass() const { return failures == 0; }
};

std::vector<ClaimSummary> summarize_checks(std::span<const ClaimCheck> checks);

struct BoundInputs {
  std::vector<Arc> arcs;
  Rational epsilon{1, 1};
  std::uint32_t cap = 100;
  std::vector<VertexId> witness;       // S
  std::vector<VertexId> core_vertices;
  std::uint32_t core_diameter = 0;
  std::size_t rounds = 0;
  std::vector<ClaimCheck> checks;
  bool fallback = false;  // min degree 2: no bound is claimed
  // Known diameter of `arcs`; skips the all-pairs recomputation.
  std::optional<std::uint32_t> measured_diameter;
};

struct OrientationCertificate {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint32_t min_degree = 0;
  Rational epsilon{1, 1};
  std::uint32_t cap = 0;
  std::uint64_t additive_constant = 0;  // 4 * C(L+1, 2)
  std::size_t witness_size = 0;
  std::size_t witness_neighborhood = 0;  // |union of N[v], v in S|
  std::size_t core_vertices = 0;
  std::uint32_t core_diameter = 0;
  std::size_t rounds = 0;
  std::optional<std::uint32_t> measured_diameter;
  std::uint32_t undirected_diameter = 0;
  double bound_witness_form = 0;        // (3+eps)|S| + 4 C(L+1,2)
  std::optional<double> bound_value;    // (3+eps) n/(delta-2) + 4 C(L+1,2)
  std::optional<bool> bound_satisfied;  // exact, witness form
  std::optional<bool> bound_value_satisfied;  // exact, n/(delta-2) form
  bool lower_bound_satisfied = false;   // measured >= undirected
  bool valid = false;
  bool strongly_connected = false;
  bool fallback = false;
  std::vector<ClaimSummary> claims;
  std::vector<ValidationProblem> problems;
  std::vector<Arc> arcs;

  // Valid, strong, and (unless fallback) within the witness-form bound.
  bool pass() const;
};

OrientationCertificate bound_report(const Graph& g, const BoundInputs& inputs);

std::string certificate_json(const OrientationCertificate& cert, bool include_arcs = true);
std::string validation_json(const ValidationReport& report);

}  // namespace odiam

#endif  // ODIAM_VERIFY_HPP_
