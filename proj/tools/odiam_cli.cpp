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
// Command-line front end. Talks to the library only through the C API.
//
//   odiam gen    --family gdk --delta 4 --k 2 [--output g.txt]
//   odiam orient --input g.txt [--epsilon 30] [--output arcs.txt] [--stats cert.json]
//   odiam verify --input g.txt --arcs arcs.txt [--stats report.json]
//   odiam oracle --input g.txt [--oracle-max-edges 18] [--output witness.txt]
//   odiam bench  --family gdk --delta 4,5 --k 1..3 [--stats bench.csv]
//
// Exit codes: 0 pass, 1 check failure, 2 input error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "odiam/odiam.h"

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kInputError = 2;

struct InputError {
  std::string message;
};

struct GraphDeleter {
  void operator()(odiam_graph* g) const { odiam_graph_destroy(g); }
};
struct OrientationDeleter {
  void operator()(odiam_orientation* o) const { odiam_orientation_destroy(o); }
};
struct ValidationDeleter {
  void operator()(odiam_validation* v) const { odiam_validation_destroy(v); }
};
using GraphHandle = std::unique_ptr<odiam_graph, GraphDeleter>;
using OrientationHandle = std::unique_ptr<odiam_orientation, OrientationDeleter>;
using ValidationHandle = std::unique_ptr<odiam_validation, ValidationDeleter>;

// Failures inside the algorithm are check failures; everything else is a
// problem with the input.
int exit_code_for(odiam_status status) {
  switch (status) {
    case ODIAM_OK: return kPass;
    case ODIAM_ERR_NO_FAR_VERTEX:
    case ODIAM_ERR_NO_CONSISTENT_PATH:
    case ODIAM_ERR_NO_PARTNER:
    case ODIAM_ERR_CASE_FALLTHROUGH:
    case ODIAM_ERR_INVARIANT_VIOLATION:
    case ODIAM_ERR_BOUND_VIOLATED:
    case ODIAM_ERR_NO_EAR:
    case ODIAM_ERR_INTERNAL:
      return kCheckFailure;
    default:
      return kInputError;
  }
}

struct StatusError {
  odiam_status status;
  std::string message;
};

void check(odiam_status status) {
  if (status != ODIAM_OK) {
    throw StatusError{status, std::string(odiam_status_name(status)) + ": " + odiam_last_error()};
  }
}

GraphHandle read_graph(const std::string& path) {
  odiam_graph* g = nullptr;
  check(odiam_graph_read(path.c_str(), &g));
  return GraphHandle(g);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError{"cannot write " + path};
  out << text;
  if (!out) throw InputError{"cannot write " + path};
}

// "4", "4,5", "1..3" or combinations such as "1..3,7".
std::vector<std::uint64_t> parse_list(const std::string& text, const std::string& flag) {
  std::vector<std::uint64_t> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    try {
      const auto dots = item.find("..");
      if (dots == std::string::npos) {
        out.push_back(std::stoull(item));
        continue;
      }
      const std::uint64_t lo = std::stoull(item.substr(0, dots));
      const std::uint64_t hi = std::stoull(item.substr(dots + 2));
      for (std::uint64_t x = lo; x <= hi; ++x) out.push_back(x);
    } catch (const std::exception&) {
      throw InputError{"bad value '" + item + "' for " + flag};
    }
  }
  return out;
}

struct TraceSink {
  std::ofstream out;
};

void trace_ear(void* user, const uint32_t* path, size_t length, uint32_t layer, int reversed) {
  auto* sink = static_cast<TraceSink*>(user);
  sink->out << "{\"event\":\"ear\",\"length\":" << (length - 1) << ",\"layer\":" << layer
            << ",\"direction\":\"" << (reversed ? "reversed" : "forward") << "\",\"path\":[";
  for (size_t i = 0; i < length; ++i) sink->out << (i ? "," : "") << path[i];
  sink->out << "]}\n";
}

void trace_round(void* user, size_t round, size_t p_length, size_t q_length, size_t witness,
                 size_t failed) {
  auto* sink = static_cast<TraceSink*>(user);
  sink->out << "{\"event\":\"round\",\"round\":" << round << ",\"p\":" << p_length
            << ",\"q\":" << q_length << ",\"witness\":" << witness
            << ",\"failed_checks\":" << failed << "}\n";
}

struct Config {
  std::string input;
  std::string output;
  std::string stats;
  std::string arcs;
  std::string trace;
  std::string epsilon = "1";
  std::optional<bool> instrument;
  std::int64_t start = -1;
  std::uint64_t seed = 0;
  std::size_t oracle_max_edges = 18;
  std::string family;
  std::string delta;
  std::string k;
  std::string n;
  std::size_t seeds = 1;
};

int cmd_gen(const Config& c) {
  if (c.family.empty()) throw InputError{"--family is required"};
  const auto deltas = parse_list(c.delta.empty() ? "0" : c.delta, "--delta");
  const auto ks = parse_list(c.k.empty() ? "0" : c.k, "--k");
  const auto ns = parse_list(c.n.empty() ? "0" : c.n, "--n");
  if (deltas.size() != 1 || ks.size() != 1 || ns.size() != 1) {
    throw InputError{"gen takes single values for --delta, --k and --n"};
  }
  odiam_graph* g = nullptr;
  check(odiam_graph_generate(c.family.c_str(), static_cast<uint32_t>(deltas[0]),
                             static_cast<uint32_t>(ks[0]), ns[0], c.seed, &g));
  GraphHandle graph(g);
  write_text(c.output, odiam_graph_text(graph.get()));
  return kPass;
}

int cmd_orient(const Config& c) {
  if (c.input.empty()) throw InputError{"--input is required"};
  GraphHandle graph = read_graph(c.input);
  odiam_orient_options options;
  odiam_orient_options_init(&options);
  options.epsilon = c.epsilon.c_str();
  if (c.instrument) options.instrument = *c.instrument ? 1 : 0;
  options.start = c.start;
  TraceSink sink;
  if (!c.trace.empty()) {
    sink.out.open(c.trace);
    if (!sink.out) throw InputError{"cannot write " + c.trace};
    options.on_ear = trace_ear;
    options.on_round = trace_round;
    options.user = &sink;
  }
  odiam_orientation* o = nullptr;
  check(odiam_orient(graph.get(), &options, &o));
  OrientationHandle result(o);
  if (!c.output.empty()) {
    check(odiam_orientation_write_arcs(result.get(), c.output.c_str(), "orientation"));
  }
  const std::string certificate = odiam_orientation_certificate(result.get(), 1);
  if (!c.stats.empty()) write_text(c.stats, certificate + "\n");
  const bool pass = odiam_orientation_pass(result.get()) != 0;
  const std::int64_t diameter = odiam_orientation_diameter(result.get());
  std::cout << "n=" << odiam_graph_vertex_count(graph.get())
            << " m=" << odiam_graph_edge_count(graph.get())
            << " min_degree=" << odiam_graph_min_degree(graph.get())
            << " measured_diameter=" << (diameter < 0 ? std::string("unreachable") : std::to_string(diameter))
            << " bound=" << odiam_orientation_bound(result.get())
            << (pass ? " pass" : " FAIL") << "\n";
  if (!pass) std::cerr << odiam_orientation_certificate(result.get(), 0) << "\n";
  return pass ? kPass : kCheckFailure;
}

int cmd_verify(const Config& c) {
  if (c.input.empty()) throw InputError{"--input is required"};
  if (c.arcs.empty()) throw InputError{"--arcs is required"};
  GraphHandle graph = read_graph(c.input);
  odiam_validation* v = nullptr;
  check(odiam_validate_file(graph.get(), c.arcs.c_str(), &v));
  ValidationHandle report(v);
  if (!c.stats.empty()) write_text(c.stats, std::string(odiam_validation_report(report.get())) + "\n");
  const bool pass = odiam_validation_pass(report.get()) != 0;
  if (pass) {
    std::cout << "measured_diameter=" << odiam_validation_diameter(report.get()) << " pass\n";
    return kPass;
  }
  std::cout << "FAIL\n" << odiam_validation_report(report.get()) << "\n";
  return kCheckFailure;
}

int cmd_oracle(const Config& c) {
  if (c.input.empty()) throw InputError{"--input is required"};
  GraphHandle graph = read_graph(c.input);
  const size_t m = odiam_graph_edge_count(graph.get());
  std::vector<uint32_t> witness(2 * m);
  uint32_t value = 0;
  check(odiam_oracle(graph.get(), c.oracle_max_edges, &value, witness.data()));
  if (!c.output.empty()) {
    check(odiam_write_arcs(c.output.c_str(), odiam_graph_vertex_count(graph.get()), witness.data(), m,
                           "oracle witness"));
  }
  std::cout << value << "\n";
  return kPass;
}

int cmd_bench(const Config& c) {
  if (c.family.empty()) throw InputError{"--family is required"};
  const bool gdk = c.family == "gdk";
  const auto deltas = parse_list(c.delta.empty() && !gdk ? "0" : c.delta, "--delta");
  const auto ks = parse_list(gdk ? c.k : "0", "--k");
  const auto ns = parse_list(gdk ? "0" : c.n, "--n");
  const std::size_t seeds = c.family == "random" ? c.seeds : 1;
  if (deltas.empty() || ks.empty() || ns.empty() || seeds == 0) throw InputError{"empty sweep"};

  std::ostringstream csv;
  csv << "family,delta,k,n_param,seed,n,min_degree,undirected_diameter,measured_diameter,bound_value,"
         "runtime_ms,pass\n";
  bool all_pass = true;
  for (std::uint64_t delta : deltas) {
    for (std::uint64_t k : ks) {
      for (std::uint64_t n : ns) {
        for (std::size_t s = 0; s < seeds; ++s) {
          const std::uint64_t seed = c.seed + s;
          odiam_graph* g = nullptr;
          check(odiam_graph_generate(c.family.c_str(), static_cast<uint32_t>(delta),
                                     static_cast<uint32_t>(k), n, seed, &g));
          GraphHandle graph(g);
          uint32_t diameter = 0;
          check(odiam_graph_diameter(graph.get(), &diameter));
          odiam_orient_options options;
          odiam_orient_options_init(&options);
          options.epsilon = c.epsilon.c_str();
          if (c.instrument) options.instrument = *c.instrument ? 1 : 0;
          const auto begin = std::chrono::steady_clock::now();
          odiam_orientation* o = nullptr;
          check(odiam_orient(graph.get(), &options, &o));
          OrientationHandle result(o);
          const double ms =
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - begin).count();
          const bool pass = odiam_orientation_pass(result.get()) != 0;
          all_pass = all_pass && pass;
          const double bound = odiam_orientation_bound(result.get());
          csv << c.family << ',' << (gdk || c.family == "random" ? std::to_string(delta) : "") << ','
              << (gdk ? std::to_string(k) : "") << ',' << (gdk ? "" : std::to_string(n)) << ','
              << (c.family == "random" ? std::to_string(seed) : "") << ','
              << odiam_graph_vertex_count(graph.get()) << ',' << odiam_graph_min_degree(graph.get()) << ','
              << diameter << ',' << odiam_orientation_diameter(result.get()) << ','
              << (bound < 0 ? std::string() : std::to_string(bound)) << ',' << ms << ','
              << (pass ? 1 : 0) << '\n';
        }
      }
    }
  }
  write_text(c.stats, csv.str());
  return all_pass ? kPass : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong orientations of small oriented diameter"};
  app.require_subcommand(1);
  Config c;

  auto add_instrument = [&](CLI::App* sub) {
    sub->add_flag_callback("--instrument", [&] { c.instrument = true; }, "Run every per-round check");
    sub->add_flag_callback("--no-instrument", [&] { c.instrument = false; }, "Skip per-round checks");
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate a graph family member");
  gen->add_option("--family", c.family, "gdk | random | cycle | complete")->required();
  gen->add_option("--delta", c.delta, "Minimum degree");
  gen->add_option("--k", c.k, "Number of repeated blocks (gdk)");
  gen->add_option("--n", c.n, "Vertex count (random, cycle, complete)");
  gen->add_option("--seed", c.seed, "Random seed");
  gen->add_option("--output", c.output, "Edge-list file (default stdout)");

  CLI::App* orient = app.add_subcommand("orient", "Orient a graph and certify the diameter bound");
  orient->add_option("--input", c.input, "Edge-list file")->required();
  orient->add_option("--output", c.output, "Arc-list file");
  orient->add_option("--stats", c.stats, "Certificate JSON file");
  orient->add_option("--epsilon", c.epsilon, "Positive rational, e.g. 1, 0.5, 1/3");
  orient->add_option("--start", c.start, "Starting core vertex (default 0)");
  orient->add_option("--trace", c.trace, "JSON-lines trace of rounds and ears");
  add_instrument(orient);

  CLI::App* verify = app.add_subcommand("verify", "Validate an orientation and measure its diameter");
  verify->add_option("--input", c.input, "Edge-list file")->required();
  verify->add_option("--arcs", c.arcs, "Arc-list file")->required();
  verify->add_option("--stats", c.stats, "Report JSON file");

  CLI::App* oracle = app.add_subcommand("oracle", "Exact oriented diameter by exhaustive search");
  oracle->add_option("--input", c.input, "Edge-list file")->required();
  oracle->add_option("--oracle-max-edges", c.oracle_max_edges, "Refuse larger inputs");
  oracle->add_option("--output", c.output, "Witness arc-list file");

  CLI::App* bench = app.add_subcommand("bench", "Sweep a family and tabulate diameters and runtime");
  bench->add_option("--family", c.family, "gdk | random | cycle | complete")->required();
  bench->add_option("--delta", c.delta, "List such as 4,5 or 4..8");
  bench->add_option("--k", c.k, "List (gdk)");
  bench->add_option("--n", c.n, "List (random, cycle, complete)");
  bench->add_option("--seed", c.seed, "First seed (random)");
  bench->add_option("--seeds", c.seeds, "Seeds per cell (random)");
  bench->add_option("--epsilon", c.epsilon, "Positive rational");
  bench->add_option("--stats", c.stats, "CSV file (default stdout)");
  add_instrument(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*gen) return cmd_gen(c);
    if (*orient) return cmd_orient(c);
    if (*verify) return cmd_verify(c);
    if (*oracle) return cmd_oracle(c);
    if (*bench) return cmd_bench(c);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kInputError;
  } catch (const StatusError& e) {
    std::cerr << "error: " << e.message << "\n";
    return exit_code_for(e.status);
  }
  return kInputError;
}
