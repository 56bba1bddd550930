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

#ifndef ODIAM_EDGE_LIST_HPP_
#define ODIAM_EDGE_LIST_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "odiam/graph.hpp"

namespace odiam {

// Text format: first non-comment line "n m", then m lines "u v" (0-based).
// Everything after '#' on a line is ignored. Errors throw kParseError.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(const std::string& text);

struct ArcList {
  std::size_t n = 0;
  std::vector<Arc> arcs;
};

// Same layout; each line "u v" means u -> v.
ArcList parse_arc_list(std::istream& in);
ArcList parse_arc_list_text(const std::string& text);

// `comment` (may be empty) is written as a leading "# ..." line.
void write_edge_list(std::ostream& out, const Graph& g, const std::string& comment = "");
void write_arc_list(std::ostream& out, std::size_t n, const std::vector<Arc>& arcs,
                    const std::string& comment = "");

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace odiam

#endif  // ODIAM_EDGE_LIST_HPP_
