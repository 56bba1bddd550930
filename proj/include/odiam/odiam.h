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
#ifndef ODIAM_ODIAM_H_
#define ODIAM_ODIAM_H_

/* C interface to the oriented-diameter library. Every call returns an
 * odiam_status; on failure odiam_last_error() describes the problem for the
 * calling thread. Handles are opaque and owned by the caller, who releases
 * them with the matching *_destroy function. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ODIAM_API __declspec(dllexport)
#else
#define ODIAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum odiam_status {
  ODIAM_OK = 0,
  ODIAM_ERR_INVALID_ARGUMENT = 1,
  ODIAM_ERR_INDEX_OUT_OF_RANGE = 2,
  ODIAM_ERR_SELF_LOOP = 3,
  ODIAM_ERR_EMPTY_SOURCE_SET = 4,
  ODIAM_ERR_EMPTY_GRAPH = 5,
  ODIAM_ERR_UNORIENTED_EDGES_PRESENT = 6,
  ODIAM_ERR_EMPTY_CONTRACTION_SET = 7,
  ODIAM_ERR_SAME_VERTEX = 8,
  ODIAM_ERR_NOT_BRIDGELESS = 9,
  ODIAM_ERR_MIN_DEGREE_TOO_SMALL = 10,
  ODIAM_ERR_DISCONNECTED = 11,
  ODIAM_ERR_NO_FAR_VERTEX = 12,
  ODIAM_ERR_NO_CONSISTENT_PATH = 13,
  ODIAM_ERR_NO_PARTNER = 14,
  ODIAM_ERR_CASE_FALLTHROUGH = 15,
  ODIAM_ERR_INVARIANT_VIOLATION = 16,
  ODIAM_ERR_VERTEX_TOO_FAR = 17,
  ODIAM_ERR_CORE_NOT_STRONG = 18,
  ODIAM_ERR_BOUND_VIOLATED = 19,
  ODIAM_ERR_NO_EAR = 20,
  ODIAM_ERR_TOO_MANY_EDGES = 21,
  ODIAM_ERR_NO_STRONG_ORIENTATION = 22,
  ODIAM_ERR_EMPTY_LIST = 23,
  ODIAM_ERR_DELTA_TOO_SMALL = 24,
  ODIAM_ERR_K_TOO_SMALL = 25,
  ODIAM_ERR_CONSTRUCTION_FAILED = 26,
  ODIAM_ERR_PARSE = 27,
  ODIAM_ERR_IO = 28,
  ODIAM_ERR_INTERNAL = 99
} odiam_status;

typedef struct odiam_graph odiam_graph;
typedef struct odiam_orientation odiam_orientation;
typedef struct odiam_validation odiam_validation;

ODIAM_API const char* odiam_version(void);
ODIAM_API const char* odiam_status_name(odiam_status status);
/* Message of the last failed call on this thread ("" if none). */
ODIAM_API const char* odiam_last_error(void);

/* ---- graphs ---------------------------------------------------------- */

/* `pairs` holds 2*m vertex ids. */
ODIAM_API odiam_status odiam_graph_from_edges(size_t n, const uint32_t* pairs, size_t m,
                                              odiam_graph** out);
/* Edge-list text: "n m" header, then one "u v" pair per line; '#' comments. */
ODIAM_API odiam_status odiam_graph_parse(const char* text, odiam_graph** out);
ODIAM_API odiam_status odiam_graph_read(const char* path, odiam_graph** out);
/* family: "gdk" (delta, k), "random" (n, delta, seed), "cycle" (n),
 * "complete" (n). */
ODIAM_API odiam_status odiam_graph_generate(const char* family, uint32_t delta, uint32_t k,
                                            size_t n, uint64_t seed, odiam_graph** out);
/* Writes the edge list; `comment` (may be NULL) becomes a "# ..." line. */
ODIAM_API odiam_status odiam_graph_write(const odiam_graph* g, const char* path,
                                         const char* comment);
/* Edge-list text of the graph (with the description as a comment when the
 * graph was generated); owned by the handle. */
ODIAM_API const char* odiam_graph_text(const odiam_graph* g);
/* e.g. "family=gdk delta=4 k=2" for generated graphs, else "". */
ODIAM_API const char* odiam_graph_description(const odiam_graph* g);
ODIAM_API void odiam_graph_destroy(odiam_graph* g);

ODIAM_API size_t odiam_graph_vertex_count(const odiam_graph* g);
ODIAM_API size_t odiam_graph_edge_count(const odiam_graph* g);
ODIAM_API uint32_t odiam_graph_min_degree(const odiam_graph* g);
ODIAM_API size_t odiam_graph_bridge_count(const odiam_graph* g);
/* ODIAM_ERR_DISCONNECTED when the graph is not connected. */
ODIAM_API odiam_status odiam_graph_diameter(const odiam_graph* g, uint32_t* out);

/* ---- orientation ----------------------------------------------------- */

typedef void (*odiam_ear_callback)(void* user, const uint32_t* path, size_t length,
                                   uint32_t layer, int reversed);
typedef void (*odiam_round_callback)(void* user, size_t round, size_t p_length,
                                     size_t q_length, size_t witness_size,
                                     size_t failed_checks);

typedef struct odiam_orient_options {
  const char* epsilon;    /* "1", "0.5", "1/3"; NULL means 1 */
  int instrument;         /* -1 automatic, 0 off, 1 on */
  int64_t start;          /* s_0; negative means vertex 0 */
  odiam_ear_callback on_ear;      /* may be NULL */
  odiam_round_callback on_round;  /* may be NULL */
  void* user;
} odiam_orient_options;

ODIAM_API void odiam_orient_options_init(odiam_orient_options* options);

/* Fails only on input problems; a bound or claim failure still yields a
 * handle whose certificate records it (see odiam_orientation_pass). */
ODIAM_API odiam_status odiam_orient(const odiam_graph* g, const odiam_orient_options* options,
                                    odiam_orientation** out);
ODIAM_API void odiam_orientation_destroy(odiam_orientation* o);

/* 1 when valid, strongly connected and within the bound, else 0. */
ODIAM_API int odiam_orientation_pass(const odiam_orientation* o);
ODIAM_API size_t odiam_orientation_arc_count(const odiam_orientation* o);
/* Copies 2*arc_count ids (tail, head, ...) into `out`. */
ODIAM_API void odiam_orientation_arcs(const odiam_orientation* o, uint32_t* out);
/* -1 when not strongly connected. */
ODIAM_API int64_t odiam_orientation_diameter(const odiam_orientation* o);
ODIAM_API double odiam_orientation_bound(const odiam_orientation* o);
/* Certificate JSON, owned by the handle. */
ODIAM_API const char* odiam_orientation_certificate(const odiam_orientation* o,
                                                    int include_arcs);
ODIAM_API odiam_status odiam_orientation_write_arcs(const odiam_orientation* o,
                                                    const char* path, const char* comment);

/* ---- verification and oracle ---------------------------------------- */

ODIAM_API odiam_status odiam_validate(const odiam_graph* g, const uint32_t* arcs, size_t count,
                                      odiam_validation** out);
/* Arc-list text: "n m" header, then one "tail head" pair per line. */
ODIAM_API odiam_status odiam_validate_file(const odiam_graph* g, const char* arcs_path,
                                           odiam_validation** out);
ODIAM_API void odiam_validation_destroy(odiam_validation* v);
ODIAM_API int odiam_validation_pass(const odiam_validation* v);
ODIAM_API int64_t odiam_validation_diameter(const odiam_validation* v);
ODIAM_API const char* odiam_validation_report(const odiam_validation* v);

/* Exact oriented diameter by exhaustive search. `witness` (may be NULL)
 * receives 2*m ids. */
ODIAM_API odiam_status odiam_oracle(const odiam_graph* g, size_t max_edges, uint32_t* value,
                                    uint32_t* witness);
ODIAM_API odiam_status odiam_write_arcs(const char* path, size_t n, const uint32_t* arcs,
                                        size_t count, const char* comment);

#ifdef __cplusplus
}
#endif

#endif /* ODIAM_ODIAM_H_ */
