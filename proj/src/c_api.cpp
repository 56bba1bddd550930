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
#include "odiam/odiam.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <sstream>
#include <string>

#include "odiam/edge_list.hpp"
#include "odiam/error.hpp"
#include "odiam/generators.hpp"
#include "odiam/graph.hpp"
#include "odiam/oracle.hpp"
#include "odiam/pipeline.hpp"
#include "odiam/verify.hpp"

struct odiam_graph {
  odiam::Graph graph;
  std::string description;
  std::string text;  // built lazily
};

struct odiam_orientation {
  odiam::OrientResult result;
  std::vector<odiam::Arc> arcs;
  std::string certificate[2];  // without / with arcs, built lazily
};

struct odiam_validation {
  odiam::ValidationReport report;
  std::string json;
};

static_assert(ODIAM_ERR_IO == static_cast<int>(odiam::ErrorCode::kIoError) + 1,
              "odiam_status must follow ErrorCode");

namespace {

thread_local std::string last_error;

odiam_status to_status(odiam::ErrorCode code) {
  // The C enumerators follow ErrorCode order, starting at 1.
  return static_cast<odiam_status>(static_cast<int>(code) + 1);
}

template <typename F>
odiam_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return ODIAM_OK;
  } catch (const odiam::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return ODIAM_ERR_INTERNAL;
  }
}

odiam_status null_argument(const char* name) {
  last_error = std::string(name) + " must not be null";
  return ODIAM_ERR_INVALID_ARGUMENT;
}

std::vector<odiam::Arc> arcs_from(const uint32_t* ids, size_t count) {
  std::vector<odiam::Arc> arcs(count);
  for (size_t i = 0; i < count; ++i) arcs[i] = {ids[2 * i], ids[2 * i + 1]};
  return arcs;
}

}  // namespace

extern "C" {

const char* odiam_version(void) { return "1.0.0"; }

const char* odiam_status_name(odiam_status status) {
  if (status == ODIAM_OK) return "Ok";
  if (status == ODIAM_ERR_INTERNAL) return "Internal";
  const int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(odiam::ErrorCode::kIoError)) return "Unknown";
  return odiam::error_code_name(static_cast<odiam::ErrorCode>(code)).data();
}

const char* odiam_last_error(void) { return last_error.c_str(); }

odiam_status odiam_graph_from_edges(size_t n, const uint32_t* pairs, size_t m, odiam_graph** out) {
  if (!out) return null_argument("out");
  if (!pairs && m > 0) return null_argument("pairs");
  return guarded([&] {
    std::vector<odiam::Edge> edges(m);
    for (size_t i = 0; i < m; ++i) edges[i] = {pairs[2 * i], pairs[2 * i + 1]};
    *out = new odiam_graph{odiam::Graph::from_edges(n, edges), {}, {}};
  });
}

odiam_status odiam_graph_parse(const char* text, odiam_graph** out) {
  if (!out) return null_argument("out");
  if (!text) return null_argument("text");
  return guarded([&] { *out = new odiam_graph{odiam::parse_edge_list_text(text), {}, {}}; });
}

odiam_status odiam_graph_read(const char* path, odiam_graph** out) {
  if (!out) return null_argument("out");
  if (!path) return null_argument("path");
  return guarded([&] { *out = new odiam_graph{odiam::parse_edge_list_text(odiam::read_file(path)), {}, {}}; });
}

odiam_status odiam_graph_generate(const char* family, uint32_t delta, uint32_t k, size_t n,
                                  uint64_t seed, odiam_graph** out) {
  if (!out) return null_argument("out");
  if (!family) return null_argument("family");
  return guarded([&] {
    odiam::FamilySpec spec;
    spec.kind = odiam::parse_family_kind(family);
    spec.delta = delta;
    spec.k = k;
    spec.n = n;
    spec.seed = seed;
    *out = new odiam_graph{odiam::generate(spec), odiam::describe(spec), {}};
  });
}

odiam_status odiam_graph_write(const odiam_graph* g, const char* path, const char* comment) {
  if (!g) return null_argument("graph");
  if (!path) return null_argument("path");
  return guarded([&] {
    std::ostringstream text;
    odiam::write_edge_list(text, g->graph, comment ? comment : "");
    odiam::write_file(path, text.str());
  });
}

const char* odiam_graph_text(const odiam_graph* g) {
  if (!g) return "";
  auto* self = const_cast<odiam_graph*>(g);
  if (self->text.empty()) {
    std::ostringstream text;
    odiam::write_edge_list(text, g->graph, g->description);
    self->text = text.str();
  }
  return self->text.c_str();
}

const char* odiam_graph_description(const odiam_graph* g) { return g ? g->description.c_str() : ""; }

void odiam_graph_destroy(odiam_graph* g) { delete g; }

size_t odiam_graph_vertex_count(const odiam_graph* g) { return g ? g->graph.vertex_count() : 0; }
size_t odiam_graph_edge_count(const odiam_graph* g) { return g ? g->graph.edge_count() : 0; }

uint32_t odiam_graph_min_degree(const odiam_graph* g) {
  return g && g->graph.vertex_count() > 0 ? odiam::min_degree(g->graph) : 0;
}

size_t odiam_graph_bridge_count(const odiam_graph* g) {
  return g ? odiam::find_bridges(g->graph).size() : 0;
}

odiam_status odiam_graph_diameter(const odiam_graph* g, uint32_t* out) {
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto d = odiam::undirected_diameter(g->graph);
    if (!d) odiam::fail(odiam::ErrorCode::kDisconnected, "graph is disconnected");
    *out = *d;
  });
}

void odiam_orient_options_init(odiam_orient_options* options) {
  if (!options) return;
  *options = odiam_orient_options{};
  options->instrument = -1;
  options->start = -1;
}

odiam_status odiam_orient(const odiam_graph* g, const odiam_orient_options* options,
                          odiam_orientation** out) {
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  odiam_orient_options defaults;
  odiam_orient_options_init(&defaults);
  const odiam_orient_options& o = options ? *options : defaults;
  return guarded([&] {
    odiam::OrientOptions opts;
    if (o.epsilon) opts.epsilon = odiam::Rational::parse(o.epsilon);
    if (!opts.epsilon.positive()) {
      odiam::fail(odiam::ErrorCode::kInvalidArgument, "epsilon must be positive");
    }
    if (o.instrument == 0) opts.instrument = odiam::Instrumentation::kOff;
    if (o.instrument > 0) opts.instrument = odiam::Instrumentation::kOn;
    if (o.start >= 0) opts.start = static_cast<odiam::VertexId>(o.start);
    if (o.on_ear) {
      opts.on_ear = [cb = o.on_ear, user = o.user](const odiam::EarRecord& ear) {
        cb(user, ear.path.vertices.data(), ear.path.vertices.size(), ear.layer, ear.reversed ? 1 : 0);
      };
    }
    if (o.on_round) {
      opts.on_round = [cb = o.on_round, user = o.user](std::size_t index, const odiam::RoundRecord& r,
                                                       const std::vector<odiam::ClaimCheck>& checks) {
        const auto failed = std::count_if(checks.begin(), checks.end(),
                                          [](const odiam::ClaimCheck& c) { return !c.pass; });
        cb(user, index, r.p.length(), r.q.length(), r.witness.size(), static_cast<size_t>(failed));
      };
    }
    auto handle = std::make_unique<odiam_orientation>();
    handle->result = odiam::orient(g->graph, opts);
    handle->arcs = handle->result.certificate.arcs;
    *out = handle.release();
  });
}

void odiam_orientation_destroy(odiam_orientation* o) { delete o; }

int odiam_orientation_pass(const odiam_orientation* o) {
  return o && o->result.certificate.pass() ? 1 : 0;
}

size_t odiam_orientation_arc_count(const odiam_orientation* o) { return o ? o->arcs.size() : 0; }

void odiam_orientation_arcs(const odiam_orientation* o, uint32_t* out) {
  if (!o || !out) return;
  for (size_t i = 0; i < o->arcs.size(); ++i) {
    out[2 * i] = o->arcs[i].tail;
    out[2 * i + 1] = o->arcs[i].head;
  }
}

int64_t odiam_orientation_diameter(const odiam_orientation* o) {
  if (!o || !o->result.certificate.measured_diameter) return -1;
  return *o->result.certificate.measured_diameter;
}

double odiam_orientation_bound(const odiam_orientation* o) {
  if (!o) return 0;
  return o->result.certificate.bound_value.value_or(-1.0);
}

const char* odiam_orientation_certificate(const odiam_orientation* o, int include_arcs) {
  if (!o) return "";
  auto* self = const_cast<odiam_orientation*>(o);
  std::string& slot = self->certificate[include_arcs ? 1 : 0];
  if (slot.empty()) slot = odiam::certificate_json(o->result.certificate, include_arcs != 0);
  return slot.c_str();
}

odiam_status odiam_orientation_write_arcs(const odiam_orientation* o, const char* path,
                                          const char* comment) {
  if (!o) return null_argument("orientation");
  if (!path) return null_argument("path");
  return guarded([&] {
    std::ostringstream text;
    odiam::write_arc_list(text, o->result.certificate.n, o->arcs, comment ? comment : "");
    odiam::write_file(path, text.str());
  });
}

odiam_status odiam_validate(const odiam_graph* g, const uint32_t* arcs, size_t count,
                            odiam_validation** out) {
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  if (!arcs && count > 0) return null_argument("arcs");
  return guarded([&] {
    auto handle = std::make_unique<odiam_validation>();
    handle->report = odiam::validate_orientation(g->graph, arcs_from(arcs, count));
    handle->json = odiam::validation_json(handle->report);
    *out = handle.release();
  });
}

odiam_status odiam_validate_file(const odiam_graph* g, const char* arcs_path,
                                 odiam_validation** out) {
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  if (!arcs_path) return null_argument("arcs_path");
  return guarded([&] {
    const odiam::ArcList list = odiam::parse_arc_list_text(odiam::read_file(arcs_path));
    if (list.n != g->graph.vertex_count()) {
      odiam::fail(odiam::ErrorCode::kParseError,
                  "arc list has " + std::to_string(list.n) + " vertices, graph has " +
                      std::to_string(g->graph.vertex_count()));
    }
    auto handle = std::make_unique<odiam_validation>();
    handle->report = odiam::validate_orientation(g->graph, list.arcs);
    handle->json = odiam::validation_json(handle->report);
    *out = handle.release();
  });
}

void odiam_validation_destroy(odiam_validation* v) { delete v; }

int odiam_validation_pass(const odiam_validation* v) { return v && v->report.ok() ? 1 : 0; }

int64_t odiam_validation_diameter(const odiam_validation* v) {
  if (!v || !v->report.diameter) return -1;
  return *v->report.diameter;
}

const char* odiam_validation_report(const odiam_validation* v) { return v ? v->json.c_str() : ""; }

odiam_status odiam_oracle(const odiam_graph* g, size_t max_edges, uint32_t* value,
                          uint32_t* witness) {
  if (!g) return null_argument("graph");
  if (!value) return null_argument("value");
  return guarded([&] {
    odiam::OracleOptions options;
    options.max_edges = max_edges;
    const odiam::OracleResult r = odiam::brute_force_oriented_diameter(g->graph, options);
    *value = r.value;
    if (witness) {
      for (size_t i = 0; i < r.witness.size(); ++i) {
        witness[2 * i] = r.witness[i].tail;
        witness[2 * i + 1] = r.witness[i].head;
      }
    }
  });
}

odiam_status odiam_write_arcs(const char* path, size_t n, const uint32_t* arcs, size_t count,
                              const char* comment) {
  if (!path) return null_argument("path");
  if (!arcs && count > 0) return null_argument("arcs");
  return guarded([&] {
    std::ostringstream text;
    odiam::write_arc_list(text, n, arcs_from(arcs, count), comment ? comment : "");
    odiam::write_file(path, text.str());
  });
}

}  // extern "C"
