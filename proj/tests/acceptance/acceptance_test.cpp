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
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Usage: acceptance_test <path to the odiam CLI> [workdir]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "odiam/core.hpp"
#include "odiam/edge_list.hpp"
#include "odiam/extension.hpp"
#include "odiam/generators.hpp"
#include "odiam/graph.hpp"
#include "odiam/oracle.hpp"
#include "odiam/pipeline.hpp"
#include "odiam/rational.hpp"

namespace {

using namespace odiam;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string summary;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o, double seconds, double limit) {
  const bool in_time = seconds < limit;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("[%s] criterion %d %s: %s (%.2f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", id,
              title.c_str(), o.summary.c_str(), seconds, limit, in_time ? "" : ", TOO SLOW");
  std::fflush(stdout);
}

void timed(int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  report(id, title, o, seconds_since(start), limit);
}

// Per-run record shared by criteria 3, 4 and 5.
struct BoundTally {
  std::size_t runs = 0;
  std::size_t within = 0;
  std::string first_miss;

  void add(const OrientationCertificate& c, const std::string& label) {
    ++runs;
    const bool ok = c.measured_diameter &&
                    within_linear_bound(*c.measured_diameter, c.epsilon, c.witness_size, c.additive_constant);
    if (ok) {
      ++within;
    } else if (first_miss.empty()) {
      first_miss = label;
    }
  }
};

BoundTally bound_tally;

// ---- criterion 1 --------------------------------------------------------

Outcome lower_bound_family_exactness() {
  std::size_t good = 0;
  std::size_t total = 0;
  std::string first_bad;
  for (std::uint32_t delta = 4; delta <= 8; ++delta) {
    for (std::uint32_t k = 1; k <= 5; ++k) {
      ++total;
      const Graph g = lower_bound_family(delta, k);
      const bool ok = g.vertex_count() == (delta + 1) * (k + 2) && min_degree(g) == delta &&
                      find_bridges(g).empty() && undirected_diameter(g) == 3 * k + 3;
      if (ok) {
        ++good;
      } else if (first_bad.empty()) {
        first_bad = " first mismatch delta=" + std::to_string(delta) + " k=" + std::to_string(k);
      }
    }
  }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) +
                             " graphs match n, min degree, bridges and diameter" + first_bad};
}

// ---- criterion 2 --------------------------------------------------------

Outcome oracle_ground_truth() {
  struct Case {
    std::string name;
    Graph g;
    std::uint32_t expected;
  };
  std::vector<Case> cases;
  cases.push_back({"C4", cycle_graph(4), 3});
  cases.push_back({"K4", complete_graph(4), 3});
  cases.push_back({"K2,3", Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}), 4});
  for (std::size_t n = 3; n <= 9; ++n) {
    cases.push_back({"C" + std::to_string(n), cycle_graph(n), static_cast<std::uint32_t>(n - 1)});
  }
  std::size_t good = 0;
  std::string bad;
  for (const Case& c : cases) {
    const std::uint32_t value = brute_force_oriented_diameter(c.g).value;
    if (value == c.expected) {
      ++good;
    } else {
      bad += " " + c.name + "=" + std::to_string(value);
    }
  }
  return {good == cases.size(),
          std::to_string(good) + "/" + std::to_string(cases.size()) + " oracle values as frozen" +
              (bad.empty() ? "" : "; wrong:" + bad)};
}

// ---- criterion 3 --------------------------------------------------------

// One representative per isomorphism class: vertex degrees must be
// non-decreasing in label order, and the edge mask must be minimal under all
// relabelings that preserve degrees.
std::vector<Graph> small_min_degree_three_graphs(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 4; n <= max_n; ++n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        index[u][v] = index[v][u] = static_cast<int>(pairs.size());
        pairs.push_back({u, v});
      }
    }
    const std::size_t p = pairs.size();
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
      std::vector<int> deg(n, 0);
      for (std::size_t i = 0; i < p; ++i) {
        if (mask >> i & 1) {
          ++deg[pairs[i].first];
          ++deg[pairs[i].second];
        }
      }
      bool sorted = true;
      for (std::size_t v = 0; v < n && sorted; ++v) sorted = deg[v] >= 3 && (v == 0 || deg[v - 1] <= deg[v]);
      if (!sorted) continue;
      std::vector<VertexId> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      bool canonical = true;
      do {
        bool preserves = true;
        for (std::size_t v = 0; v < n && preserves; ++v) preserves = deg[perm[v]] == deg[v];
        if (!preserves) continue;
        std::uint32_t image = 0;
        for (std::size_t i = 0; i < p; ++i) {
          if (mask >> i & 1) image |= 1u << index[perm[pairs[i].first]][perm[pairs[i].second]];
        }
        canonical = image >= mask;
      } while (canonical && std::next_permutation(perm.begin(), perm.end()));
      if (!canonical) continue;
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < p; ++i) {
        if (mask >> i & 1) edges.push_back({pairs[i].first, pairs[i].second});
      }
      Graph g = Graph::from_edges(n, edges);
      if (is_connected(g) && find_bridges(g).empty()) out.push_back(std::move(g));
    }
  }
  return out;
}

Outcome pipeline_soundness_sweep() {
  const std::vector<Graph> graphs = small_min_degree_three_graphs(7);
  // Independent count of such graphs up to isomorphism on 4..7 vertices:
  // 1 + 3 + 19 + 150.
  constexpr std::size_t kExpectedClasses = 173;
  std::size_t good = 0;
  std::string first_bad;
  OracleOptions oracle;
  oracle.max_edges = 21;
  OrientOptions options;
  options.epsilon = Rational(50, 1);
  options.instrument = Instrumentation::kOn;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const std::uint32_t exact = brute_force_oriented_diameter(g, oracle).value;
    const OrientResult r = orient(g, options);
    const OrientationCertificate& c = r.certificate;
    bound_tally.add(c, "small graph #" + std::to_string(i));
    const bool ok = c.valid && c.strongly_connected && c.measured_diameter &&
                    *c.measured_diameter >= exact && *c.measured_diameter >= c.undirected_diameter;
    if (ok) {
      ++good;
    } else if (first_bad.empty()) {
      first_bad = "; first failure at graph #" + std::to_string(i);
    }
  }
  return {good == graphs.size() && graphs.size() == kExpectedClasses,
          std::to_string(good) + "/" + std::to_string(graphs.size()) + " graphs (expected " +
              std::to_string(kExpectedClasses) + " classes) valid, strong, >= oracle and >= diam(G)" +
              first_bad};
}

// ---- criterion 4 --------------------------------------------------------

Outcome claim_audit_suite() {
  const std::vector<std::string> required = {"claim3",       "claim4.hat",   "claim4.core",
                                             "claim5.gamma", "claim5.union", "disjoint"};
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // id -> (checks, failures)
  std::string first_failure;
  std::mt19937_64 rng(20240601);
  const std::uint32_t deltas[] = {5, 10, 20};
  std::size_t runs = 0;
  std::size_t rounds = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(50, 500)(rng);
    const std::uint32_t delta = deltas[i % 3];
    const std::uint64_t seed = rng();
    const Graph g = random_min_degree_bridgeless(n, delta, seed);
    for (std::int64_t eps : {10, 30}) {
      OrientOptions options;
      options.epsilon = Rational(eps, 1);
      options.instrument = Instrumentation::kOn;
      const OrientResult r = orient(g, options);
      ++runs;
      rounds += r.core.round_count();
      bound_tally.add(r.certificate, "random #" + std::to_string(i) + " eps=" + std::to_string(eps));
      for (const ClaimCheck& c : r.core.checks) {
        auto& [count, failed] = tally[c.id];
        ++count;
        if (!c.pass) {
          ++failed;
          if (first_failure.empty()) {
            first_failure = "; first failure graph #" + std::to_string(i) + " eps=" + std::to_string(eps) +
                            " " + c.id + ": " + c.detail;
          }
        }
      }
    }
  }
  bool pass = true;
  std::ostringstream text;
  text << runs << " runs, " << rounds << " rounds;";
  for (const auto& [id, counts] : tally) {
    const bool named = std::find(required.begin(), required.end(), id) != required.end();
    if (counts.second > 0) pass = false;
    if (named) text << " " << id << " " << counts.second << "/" << counts.first;
  }
  std::size_t other_failures = 0;
  for (const auto& [id, counts] : tally) {
    if (std::find(required.begin(), required.end(), id) == required.end()) other_failures += counts.second;
  }
  text << "; other checks failed " << other_failures;
  for (const std::string& id : required) {
    if (!tally.count(id) && rounds > 0) {
      pass = false;
      text << "; " << id << " never evaluated";
    }
  }
  return {pass, text.str() + first_failure};
}

// ---- criterion 5 --------------------------------------------------------

Outcome theorem_level_bound() {
  return {bound_tally.runs > 0 && bound_tally.within == bound_tally.runs,
          std::to_string(bound_tally.within) + "/" + std::to_string(bound_tally.runs) +
              " runs of criteria 3-4 within (3+eps)|S| + 4 C(L+1,2)" +
              (bound_tally.first_miss.empty() ? "" : "; first miss " + bound_tally.first_miss)};
}

// ---- criterion 6 --------------------------------------------------------

Outcome extension_contract() {
  std::mt19937_64 rng(977);
  const std::int64_t epsilons[] = {20, 30, 50, 100};
  std::size_t instances = 0;
  std::size_t good = 0;
  std::size_t attempts = 0;
  std::string first_bad;
  while (instances < 50 && attempts < 1000) {
    ++attempts;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(40, 400)(rng);
    const std::uint32_t delta = std::uniform_int_distribution<std::uint32_t>(3, 8)(rng);
    const Graph g = random_min_degree_bridgeless(n, delta, rng());
    const Rational eps(epsilons[attempts % 4], 1);
    const CoreState s = run_core(g, eps);
    if (s.core_vertices.size() == g.vertex_count()) continue;  // nothing outside
    ++instances;
    const ExtensionResult r = extend_report(g, s.core_graph(), s.core_vertices, s.cap);
    bool ok = r.orientation.fully_oriented() && r.orientation.entry_count() == g.edge_count();
    for (const Arc& a : s.arcs) ok = ok && r.orientation.has_arc(a.tail, a.head);
    ok = ok && is_strongly_connected(r.orientation);
    const auto d = directed_diameter(r.orientation);
    const std::vector<VertexId> core(s.core_vertices.begin(), s.core_vertices.end());
    std::vector<VertexId> sorted = core;
    std::sort(sorted.begin(), sorted.end());
    const auto core_d = directed_diameter(restrict_to(s.core_graph(), sorted).graph);
    ok = ok && d && core_d && *d <= *core_d + additive_constant(s.cap);
    if (ok) {
      ++good;
    } else if (first_bad.empty()) {
      first_bad = "; first failure at instance " + std::to_string(instances);
    }
  }
  return {instances == 50 && good == instances,
          std::to_string(good) + "/" + std::to_string(instances) +
              " instances preserve the core arc by arc and stay within diam(core) + 4 C(L+1,2)" + first_bad};
}

// ---- criterion 7 --------------------------------------------------------

double time_cli_orient(const std::string& cli, const std::string& graph_path, int& status) {
  const std::string command = "\"" + cli + "\" orient --input \"" + graph_path +
                              "\" --epsilon 1 --no-instrument > /dev/null";
  const auto start = Clock::now();
  status = std::system(command.c_str());
  return seconds_since(start);
}

Outcome scalability(const std::string& cli, const std::filesystem::path& work) {
  std::vector<double> times;
  std::ostringstream text;
  bool pass = true;
  for (std::size_t n : {5000u, 10000u}) {
    const Graph g = random_min_degree_bridgeless(n, 20, 5);
    const std::filesystem::path path = work / ("scale_" + std::to_string(n) + ".txt");
    std::ofstream out(path);
    write_edge_list(out, g);
    out.close();
    int status = 0;
    const double t = time_cli_orient(cli, path.string(), status);
    times.push_back(t);
    text << "n=" << n << " " << t << " s" << (status == 0 ? "" : " (nonzero exit)") << "; ";
    pass = pass && status == 0;
    std::filesystem::remove(path);
  }
  const double ratio = times[1] / std::max(times[0], 1e-3);
  text << "ratio " << ratio << " (limit 10), n=5000 limit 120 s";
  pass = pass && times[0] <= 120 && ratio <= 10;
  return {pass, text.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <odiam cli> [workdir]\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const std::filesystem::path work = argc > 2 ? argv[2] : std::filesystem::temp_directory_path();
  std::filesystem::create_directories(work);

  timed(1, "lower-bound family exactness", 5, lower_bound_family_exactness);
  timed(2, "oracle ground truth", 30, oracle_ground_truth);
  timed(3, "pipeline soundness sweep (<= 7 vertices, eps = 50)", 600, pipeline_soundness_sweep);
  timed(4, "claim audit suite (100 random graphs, eps in {10, 30})", 600, claim_audit_suite);
  timed(5, "bound (3+eps)|S| + 4 C(L+1,2) on every run of criteria 3-4", 1, theorem_level_bound);
  timed(6, "extension contract (50 instances)", 300, extension_contract);
  timed(7, "scalability (n = 5000 and 10000, delta = 20, eps = 1)", 600,
        [&] { return scalability(cli, work); });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
