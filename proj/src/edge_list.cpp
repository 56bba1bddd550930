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

#include "odiam/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "odiam/error.hpp"

namespace odiam {

namespace {

// Yields whitespace-separated integer tokens with line numbers, comments removed.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  bool next(long long& value) {
    std::string token;
    while (!(line_stream_ >> token)) {
      std::string line;
      if (!std::getline(in_, line)) return false;
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      line_stream_.clear();
      line_stream_.str(line);
    }
    std::size_t used = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) {
      fail(ErrorCode::kParseError,
           "line " + std::to_string(line_no_) + ": expected an integer, got '" + token + "'");
    }
    return true;
  }

  long long require(const char* what) {
    long long v = 0;
    if (!next(v)) {
      fail(ErrorCode::kParseError, std::string("unexpected end of input while reading ") + what);
    }
    return v;
  }

  std::size_t line() const { return line_no_; }

 private:
  std::istream& in_;
  std::istringstream line_stream_;
  std::size_t line_no_ = 0;
};

template <typename Pair>
std::pair<std::size_t, std::vector<Pair>> parse_pairs(std::istream& in) {
  TokenReader reader(in);
  const long long n = reader.require("vertex count");
  const long long m = reader.require("edge count");
  if (n < 0 || m < 0) fail(ErrorCode::kParseError, "negative vertex or edge count");
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const long long u = reader.require("endpoint");
    const long long v = reader.require("endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(ErrorCode::kIndexOutOfRange, "line " + std::to_string(reader.line()) + ": vertex " +
                                            std::to_string(u < 0 || u >= n ? u : v) +
                                            " out of range for n=" + std::to_string(n));
    }
    pairs.push_back(Pair{static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  long long extra = 0;
  if (reader.next(extra)) {
    fail(ErrorCode::kParseError, "more than the declared " + std::to_string(m) + " lines");
  }
  return {static_cast<std::size_t>(n), std::move(pairs)};
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  auto [n, pairs] = parse_pairs<Edge>(in);
  return Graph::from_edges(n, pairs);
}

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

ArcList parse_arc_list(std::istream& in) {
  auto [n, pairs] = parse_pairs<Arc>(in);
  return ArcList{n, std::move(pairs)};
}

ArcList parse_arc_list_text(const std::string& text) {
  std::istringstream in(text);
  return parse_arc_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_arc_list(std::ostream& out, std::size_t n, const std::vector<Arc>& arcs,
                    const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << n << ' ' << arcs.size() << '\n';
  for (const Arc& a : arcs) out << a.tail << ' ' << a.head << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIoError, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIoError, "cannot open '" + path + "' for writing");
  out << contents;
  if (!out) fail(ErrorCode::kIoError, "failed writing '" + path + "'");
}

}  // namespace odiam
