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
#include "odiam/verify.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>

#include "odiam/error.hpp"

namespace odiam {

namespace {

std::string arc_text(VertexId u, VertexId v) {
  return std::to_string(u) + "->" + std::to_string(v);
}

// Exact test of value <= (3+eps) n/(delta-2) + extra, i.e.
// (delta-2) value <= (3+eps) n + (delta-2) extra.
bool within_n_form(std::uint64_t value, const Rational& eps, std::uint64_t n,
                   std::uint32_t delta, std::uint64_t extra) {
  const std::uint64_t k = delta - 2;
  return within_linear_bound(value * k, eps, n, extra * k);
}

}  // namespace

std::string_view validation_issue_name(ValidationIssue issue) {
  switch (issue) {
    case ValidationIssue::kMissingEdge: return "MissingEdge";
    case ValidationIssue::kDoubleOrientation: return "DoubleOrientation";
    case ValidationIssue::kDuplicateArc: return "DuplicateArc";
    case ValidationIssue::kUnknownArc: return "UnknownArc";
    case ValidationIssue::kNotStrong: return "NotStrong";
  }
  return "Unknown";
}

ValidationReport validate_orientation(const Graph& g, std::span<const Arc> arcs,
                                      bool measure_diameter) {
  ValidationReport report;
  const std::size_t n = g.vertex_count();
  // Per edge: bit 0 = u->v seen, bit 1 = v->u seen (u < v as stored).
  std::vector<std::uint8_t> seen(g.edge_count(), 0);
  for (const Arc& a : arcs) {
    const bool in_range = a.tail < n && a.head < n;
    const auto e = in_range && a.tail != a.head ? g.edge_id(a.tail, a.head) : std::nullopt;
    if (!e) {
      report.problems.push_back({ValidationIssue::kUnknownArc, a.tail, a.head});
      continue;
    }
    const std::uint8_t bit = g.edge(*e).u == a.tail ? 1 : 2;
    if (seen[*e] & bit) {
      report.problems.push_back({ValidationIssue::kDuplicateArc, a.tail, a.head});
    } else if (seen[*e]) {
      report.problems.push_back({ValidationIssue::kDoubleOrientation, g.edge(*e).u, g.edge(*e).v});
    }
    seen[*e] |= bit;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!seen[e]) report.problems.push_back({ValidationIssue::kMissingEdge, g.edge(e).u, g.edge(e).v});
  }
  report.bijective = report.problems.empty();
  if (!report.bijective) return report;

  const MixedGraph d = MixedGraph::from_arcs(n, arcs);
  report.strongly_connected = n == 0 || is_strongly_connected(d);
  if (!report.strongly_connected) {
    report.problems.push_back({ValidationIssue::kNotStrong, 0, 0});
    return report;
  }
  if (measure_diameter) report.diameter = n == 0 ? 0 : directed_diameter(d);
  return report;
}

bool AuditReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.pass; });
}

AuditReport audit_core_state(const Graph& g, const CoreState& state) {
  AuditReport report;
  report.rounds = state.rounds.size();
  CoreOptions options;
  options.start = state.start;
  options.instrument = Instrumentation::kOff;
  CoreState before = initial_state(g, state.epsilon, options);
  for (std::size_t i = 0; i < state.rounds.size(); ++i) {
    CoreState after = before;
    RoundRecord record = state.rounds[i];
    record.hat_diameter.reset();
    apply_round(after, std::move(record));
    std::vector<ClaimCheck> checks = check_round(g, before, after, i + 1);
    report.checks.insert(report.checks.end(), checks.begin(), checks.end());
    before = std::move(after);
  }
  std::string mismatch;
  if (before.arcs != state.arcs) mismatch = "arc list differs from the rounds";
  if (before.core_vertices != state.core_vertices) mismatch = "core vertices differ from the rounds";
  if (before.witness != state.witness) mismatch = "witness differs from the rounds";
  report.checks.push_back(ClaimCheck{"replay", state.rounds.size(), mismatch.empty(),
                                     mismatch.empty() ? "state matches its rounds" : mismatch});
  return report;
}

std::vector<ClaimSummary> summarize_checks(std::span<const ClaimCheck> checks) {
  std::map<std::string, ClaimSummary> by_id;
  for (const ClaimCheck& c : checks) {
    ClaimSummary& s = by_id[c.id];
    s.id = c.id;
    ++s.total;
    if (!c.pass && s.failures++ == 0) {
      s.first_failure = "round " + std::to_string(c.round) + ": " + c.detail;
    }
  }
  std::vector<ClaimSummary> out;
  for (auto& [id, s] : by_id) out.push_back(std::move(s));
  return out;
}

bool OrientationCertificate::pass() const {
  if (!valid || !strongly_connected) return false;
  for (const ClaimSummary& c : claims) {
    if (c.id.rfind("extension.", 0) == 0 && !c.pass()) return false;
  }
  return fallback || bound_satisfied.value_or(false);
}

OrientationCertificate bound_report(const Graph& g, const BoundInputs& inputs) {
  OrientationCertificate cert;
  cert.n = g.vertex_count();
  cert.m = g.edge_count();
  cert.min_degree = cert.n == 0 ? 0 : min_degree(g);
  cert.epsilon = inputs.epsilon;
  cert.cap = inputs.cap;
  cert.additive_constant = additive_constant(inputs.cap);
  cert.fallback = inputs.fallback;
  cert.rounds = inputs.rounds;
  cert.core_vertices = inputs.core_vertices.size();
  cert.core_diameter = inputs.core_diameter;
  cert.arcs = inputs.arcs;
  cert.claims = summarize_checks(inputs.checks);

  std::vector<VertexId> witness = inputs.witness;
  std::sort(witness.begin(), witness.end());
  witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
  cert.witness_size = witness.size();
  std::vector<char> covered(cert.n, 0);
  for (VertexId v : witness) {
    if (v >= cert.n) fail(ErrorCode::kIndexOutOfRange, "witness vertex out of range");
    covered[v] = 1;
    for (VertexId w : g.neighbors(v)) covered[w] = 1;
  }
  cert.witness_neighborhood = static_cast<std::size_t>(std::count(covered.begin(), covered.end(), 1));

  const ValidationReport v = validate_orientation(g, inputs.arcs, !inputs.measured_diameter.has_value());
  cert.valid = v.bijective;
  cert.strongly_connected = v.strongly_connected;
  cert.problems = v.problems;
  if (cert.valid && cert.strongly_connected) {
    cert.measured_diameter = inputs.measured_diameter ? inputs.measured_diameter : v.diameter;
  }
  cert.undirected_diameter = cert.n == 0 ? 0 : undirected_diameter(g).value_or(0);

  const double three_eps = 3.0 + inputs.epsilon.to_double();
  cert.bound_witness_form = three_eps * static_cast<double>(cert.witness_size) +
                            static_cast<double>(cert.additive_constant);
  if (!cert.fallback && cert.min_degree > 2) {
    cert.bound_value = three_eps * static_cast<double>(cert.n) / (cert.min_degree - 2) +
                       static_cast<double>(cert.additive_constant);
  }
  if (cert.measured_diameter) {
    const std::uint32_t d = *cert.measured_diameter;
    cert.lower_bound_satisfied = d >= cert.undirected_diameter;
    if (!cert.fallback) {
      cert.bound_satisfied =
          within_linear_bound(d, inputs.epsilon, cert.witness_size, cert.additive_constant);
      if (cert.min_degree > 2) {
        cert.bound_value_satisfied =
            within_n_form(d, inputs.epsilon, cert.n, cert.min_degree, cert.additive_constant);
      }
    }
  } else if (!cert.fallback) {
    cert.bound_satisfied = false;
  }
  return cert;
}

namespace {

template <typename T>
nlohmann::json optional_json(const std::optional<T>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

nlohmann::json problems_json(const std::vector<ValidationProblem>& problems) {
  nlohmann::json out = nlohmann::json::array();
  for (const ValidationProblem& p : problems) {
    nlohmann::json entry{{"issue", validation_issue_name(p.issue)}};
    if (p.issue != ValidationIssue::kNotStrong) entry["arc"] = arc_text(p.u, p.v);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

std::string certificate_json(const OrientationCertificate& cert, bool include_arcs) {
  nlohmann::json claims = nlohmann::json::object();
  for (const ClaimSummary& c : cert.claims) {
    nlohmann::json entry{{"pass", c.pass()}, {"total", c.total}, {"failures", c.failures}};
    if (!c.pass()) entry["first_failure"] = c.first_failure;
    claims[c.id] = std::move(entry);
  }
  nlohmann::json j{
      {"n", cert.n},
      {"m", cert.m},
      {"min_degree", cert.min_degree},
      {"epsilon", cert.epsilon.to_string()},
      {"epsilon_value", cert.epsilon.to_double()},
      {"cap_l", cert.cap},
      {"additive_constant", cert.additive_constant},
      {"witness_size", cert.witness_size},
      {"witness_neighborhood", cert.witness_neighborhood},
      {"core_vertices", cert.core_vertices},
      {"core_diameter", cert.core_diameter},
      {"rounds", cert.rounds},
      {"measured_diameter", optional_json(cert.measured_diameter)},
      {"undirected_diameter", cert.undirected_diameter},
      {"bound_witness_form", cert.bound_witness_form},
      {"bound_value", optional_json(cert.bound_value)},
      {"bound_satisfied", optional_json(cert.bound_satisfied)},
      {"bound_value_satisfied", optional_json(cert.bound_value_satisfied)},
      {"lower_bound_satisfied", cert.lower_bound_satisfied},
      {"valid", cert.valid},
      {"strongly_connected", cert.strongly_connected},
      {"fallback", cert.fallback},
      {"pass", cert.pass()},
      {"claim_checks", std::move(claims)},
      {"problems", problems_json(cert.problems)},
  };
  std::string text = j.dump(2);
  if (include_arcs) {
    // One line for the arcs keeps large certificates readable.
    nlohmann::json arcs = nlohmann::json::array();
    for (const Arc& a : cert.arcs) arcs.push_back({a.tail, a.head});
    text.insert(text.rfind('}'), ",\n  \"arcs\": " + arcs.dump() + "\n");
    text.erase(text.rfind('\n', text.rfind(",\n  \"arcs\"")), 1);
  }
  return text;
}

std::string validation_json(const ValidationReport& report) {
  nlohmann::json j{
      {"valid", report.bijective},
      {"strongly_connected", report.strongly_connected},
      {"measured_diameter", optional_json(report.diameter)},
      {"pass", report.ok()},
      {"problems", problems_json(report.problems)},
  };
  return j.dump(2);
}

}  // namespace odiam
