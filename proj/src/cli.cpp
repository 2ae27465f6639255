// Copyright 2026 The kended Authors
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

#include "kended/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kended/constructive.hpp"
#include "kended/families.hpp"
#include "kended/formats.hpp"
#include "kended/invariants.hpp"
#include "kended/report.hpp"
#include "kended/verify.hpp"

namespace kended {

namespace {

using Clock = std::chrono::steady_clock;

struct GraphOptions {
  std::string graph;
  std::string family;
  std::string format;
  std::string set = "all";
};

struct GraphInput {
  Graph graph;
  std::optional<VertexSet> distinguished;
  std::string source;
  std::string format;
};

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InvalidArgument("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

std::string detect_format(const std::string& text) {
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line.compare(first, 2, "n ") == 0) return "edgelist";
    return "graph6";
  }
  return "graph6";
}

Graph parse_single_graph6(const std::string& text) {
  std::istringstream lines(text);
  std::optional<Graph> g;
  std::size_t records = read_graph6_stream(lines, [&](Graph parsed) {
    if (!g) g = std::move(parsed);
  });
  if (records == 0) throw ParseError("graph6 input is empty");
  if (records > 1) throw ParseError("expected one graph6 record, got " +
                                    std::to_string(records));
  return *std::move(g);
}

GraphInput load_graph(const GraphOptions& opts, std::istream& in) {
  GraphInput input;
  if (!opts.graph.empty() == !opts.family.empty()) {
    throw InvalidArgument("give exactly one of --graph or --family");
  }
  if (!opts.family.empty()) {
    FamilyGraph fam = make_family(parse_family_spec(opts.family));
    input.graph = std::move(fam.graph);
    input.distinguished = fam.distinguished;
    input.source = "family:" + format_family_spec(parse_family_spec(opts.family));
    input.format = "family";
    return input;
  }
  const std::string text = slurp(opts.graph, in);
  input.format = opts.format.empty() ? detect_format(text) : opts.format;
  input.source = opts.graph;
  if (input.format == "graph6") {
    input.graph = parse_single_graph6(text);
  } else if (input.format == "edgelist") {
    input.graph = parse_edge_list(text);
  } else {
    throw InvalidArgument("unknown format '" + input.format + "'");
  }
  input.graph.check_invariants();
  return input;
}

VertexSet parse_set(const std::string& spec, const GraphInput& input) {
  const int n = input.graph.n();
  if (spec == "all") return VertexSet::all(n);
  if (spec == "B") {
    if (!input.distinguished) {
      throw InvalidArgument("--set B needs a bipartite family (kmm or bipartite)");
    }
    return *input.distinguished;
  }
  VertexSet s = VertexSet::empty_of(n);
  std::istringstream parts(spec);
  for (std::string part; std::getline(parts, part, ',');) {
    const auto first = part.find_first_not_of(' ');
    if (first == std::string::npos) continue;
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(part.substr(first), &used);
    } catch (const std::exception&) {
      throw ParseError("bad vertex '" + part + "' in --set");
    }
    if (first + used != part.find_last_not_of(' ') + 1) {
      throw ParseError("bad vertex '" + part + "' in --set");
    }
    if (v < 0 || v >= n) {
      throw InvalidArgument("vertex " + std::to_string(v) + " in --set outside 0.." +
                            std::to_string(n - 1));
    }
    s.insert(static_cast<Vertex>(v));
  }
  return s;
}

std::pair<int, int> parse_range(const std::string& text, const char* flag) {
  const auto dash = text.find('-');
  try {
    std::size_t used = 0;
    if (dash == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used == text.size()) return {v, v};
    } else {
      const int lo = std::stoi(text.substr(0, dash), &used);
      if (used == dash) {
        const std::string rest = text.substr(dash + 1);
        const int hi = std::stoi(rest, &used);
        if (used == rest.size() && lo <= hi) return {lo, hi};
      }
    }
  } catch (const std::exception&) {
  }
  throw ParseError(std::string("bad range '") + text + "' for " + flag +
                   " (expected N or LO-HI)");
}

Json graph_inputs(const GraphInput& input, const VertexSet& s) {
  Json j;
  j["graph"] = input.source;
  j["format"] = input.format;
  j["graph6"] = emit_graph6(input.graph);
  j["n"] = input.graph.n();
  j["S"] = to_json(s);
  return j;
}

Json elapsed_block(Clock::time_point start) {
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return {{"elapsed_ms", static_cast<double>(ns.count()) / 1e6}};
}

void write_report(const Json& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw InvalidArgument("cannot write '" + out_path + "'");
  file << text;
}

void add_graph_options(CLI::App* cmd, GraphOptions& opts) {
  cmd->add_option("--graph", opts.graph, "Graph file, or - for stdin");
  cmd->add_option("--family", opts.family,
                  "Named graph: \"kmm m k\", \"bipartite a b\", \"cycle n\", "
                  "\"path n\", \"complete n\", \"petersen\", \"gnp n p seed\"");
  cmd->add_option("--format", opts.format, "graph6 or edgelist (default: detect)")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd->add_option("--set", opts.set,
                  "S as a comma list, \"all\", or \"B\" (larger bipartite part)");
}

int cmd_analyze(const GraphOptions& opts, const std::string& out_path, bool timing,
                std::istream& in, std::ostream& out) {
  const auto start = Clock::now();
  const GraphInput input = load_graph(opts, in);
  const Graph& g = input.graph;
  const VertexSet s = parse_set(opts.set, input);

  const IndependenceWitness alpha = independence_number(g, s);
  const SetConnectivity kappa = set_connectivity_detail(g, s);
  Json r;
  r["n"] = g.n();
  r["edges"] = g.edge_count();
  r["connected"] = g.is_connected();
  r["graph_connectivity"] = to_json(set_connectivity(g, g.vertices()));
  r["alpha"] = alpha.size;
  r["alpha_witness"] = to_json(alpha.witness);
  r["kappa"] = to_json(kappa.value);
  r["kappa_pair"] = kappa.minimizing_pair
                        ? Json::array({kappa.minimizing_pair->first, kappa.minimizing_pair->second})
                        : Json(nullptr);
  // Smallest k >= 2 with alpha <= k + kappa - 1, and the largest k >= 2 for
  // which it fails.
  long long threshold = 2;
  Json largest_failing = nullptr;
  if (!kappa.value.is_infinite()) {
    const long long t = static_cast<long long>(alpha.size) - kappa.value.value() + 1;
    threshold = std::max(2LL, t);
    if (t - 1 >= 2) largest_failing = t - 1;
  }
  r["threshold_k"] = threshold;
  r["largest_failing_k"] = largest_failing;
  write_report(make_report("analyze", graph_inputs(input, s), std::move(r),
                           timing ? elapsed_block(start) : Json(nullptr)),
               out_path, out);
  return kExitClean;
}

int cmd_construct(const GraphOptions& opts, int k, int cap, const std::string& out_path,
                  bool timing, std::istream& in, std::ostream& out) {
  const auto start = Clock::now();
  const GraphInput input = load_graph(opts, in);
  const VertexSet s = parse_set(opts.set, input);
  const ConstructionOutcome outcome =
      construct_k_ended_tree(input.graph, s, k, ConstructOptions{cap, kDefaultSubsetCap});
  Json inputs = graph_inputs(input, s);
  inputs["k"] = k;
  inputs["cap"] = cap;
  write_report(make_report("construct", std::move(inputs), to_json(outcome),
                           timing ? elapsed_block(start) : Json(nullptr)),
               out_path, out);
  return kExitClean;
}

int cmd_verify(const std::string& plan_path, std::optional<std::uint64_t> seed,
               std::optional<unsigned> threads, std::optional<int> cap,
               const std::string& out_path, bool timing, std::istream& in,
               std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  SweepPlan plan = plan_path.empty() ? SweepPlan::default_plan()
                                     : parse_sweep_plan(slurp(plan_path, in));
  if (seed) plan.seed = *seed;
  if (threads) plan.threads = *threads;
  if (cap) plan.cap = *cap;
  if (timing) plan.timing = true;
  const SweepReport report = sweep(plan);

  Json inputs;
  inputs["plan"] = plan_path.empty() ? Json("default") : Json(plan_path);
  Json timing_block = nullptr;
  if (plan.timing) {
    timing_block = elapsed_block(start);
    Json worst;
    for (Check c : kAllChecks) {
      worst[std::string(check_name(c))] =
          static_cast<double>(report.tally(c).worst.count()) / 1e6;
    }
    timing_block["worst_instance_ms"] = std::move(worst);
  }
  write_report(make_report("verify", std::move(inputs), to_json(report),
                           std::move(timing_block)),
               out_path, out);
  if (!report.clean()) {
    err << "counterexample: " << check_name(report.counterexample->check)
        << " graph6=" << report.counterexample->graph_id << " k="
        << report.counterexample->k << " detail=" << report.counterexample->detail
        << '\n';
    return kExitCounterexample;
  }
  return kExitClean;
}

int cmd_sharpness(const std::string& m_range, const std::string& k_range, int cap,
                  const std::string& out_path, bool timing, std::ostream& out) {
  const auto start = Clock::now();
  const auto [m_lo, m_hi] = parse_range(m_range, "--m");
  const auto [k_lo, k_hi] = parse_range(k_range, "--k");
  if (m_lo < 1 || k_lo < 1) throw InvalidArgument("sharpness ranges start at 1");
  Json cells = Json::array();
  Json skipped = Json::array();
  bool all_match = true;
  for (int m = m_lo; m <= m_hi; ++m) {
    for (int k = k_lo; k <= k_hi; ++k) {
      if (2 * m + k > cap) {
        skipped.push_back({m, k});
        continue;
      }
      const SharpnessVerdict v = verify_sharpness(m, k, cap);
      all_match = all_match && v.matches_expected;
      cells.push_back(to_json(v));
    }
  }
  Json r;
  r["cells"] = std::move(cells);
  r["skipped"] = std::move(skipped);
  r["all_match"] = all_match;
  r["bound_semantics"] =
      "min_leaves and min_branch are exact minima over all trees covering B: "
      "every covering tree has at least k+1 leaves and at least k-1 branch vertices";
  Json inputs{{"m", m_range}, {"k", k_range}, {"cap", cap}};
  write_report(make_report("sharpness", std::move(inputs), std::move(r),
                           timing ? elapsed_block(start) : Json(nullptr)),
               out_path, out);
  return all_match ? kExitClean : kExitCounterexample;
}

int cmd_generate(const std::string& family, const std::string& format,
                 const std::string& out_path, std::ostream& out) {
  const Graph g = make_family(parse_family_spec(family)).graph;
  const std::string text = format == "edgelist" ? emit_edge_list(g) : emit_graph6(g) + "\n";
  if (out_path.empty() || out_path == "-") {
    out << text;
  } else {
    std::ofstream file(out_path);
    if (!file) throw InvalidArgument("cannot write '" + out_path + "'");
    file << text;
  }
  return kExitClean;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"k-ended covering trees: invariants, construction, verification"};
  app.name("kended");
  app.require_subcommand(1);

  std::string out_path;
  bool timing = false;
  int cap = kDefaultTreeSearchCap;

  GraphOptions analyze_opts;
  CLI::App* analyze = app.add_subcommand("analyze", "alpha_G(S), kappa_G(S) and the k threshold");
  add_graph_options(analyze, analyze_opts);

  GraphOptions construct_opts;
  int k = 2;
  CLI::App* construct = app.add_subcommand("construct", "Build a k-ended tree by path augmentation");
  add_graph_options(construct, construct_opts);
  construct->add_option("--k", k, "Leaf budget (>= 2)")->required()->check(CLI::Range(2, 64));

  std::string plan_path;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::optional<int> verify_cap;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("--plan", plan_path, "Sweep plan file (default: exhaustive n <= 5)");
  verify->add_option("--seed", seed, "Override the plan seed");
  verify->add_option("--threads", threads, "Worker threads (0: all cores)");
  verify->add_option("--cap", verify_cap, "Override the tree-search vertex cap");

  std::string m_range = "1-4";
  std::string k_range = "1-4";
  CLI::App* sharp = app.add_subcommand("sharpness", "Check the K_{m,m+k} family");
  sharp->add_option("--m", m_range, "m range, N or LO-HI");
  sharp->add_option("--k", k_range, "k range, N or LO-HI");

  std::string gen_family;
  std::string gen_format = "graph6";
  CLI::App* generate = app.add_subcommand("generate", "Write a named graph");
  generate->add_option("--family", gen_family, "Family spec")->required();
  generate->add_option("--format", gen_format, "graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  for (CLI::App* cmd : {analyze, construct, verify, sharp, generate}) {
    cmd->add_option("--out", out_path, "Output file (default stdout)");
  }
  for (CLI::App* cmd : {analyze, construct, verify, sharp}) {
    cmd->add_flag("--timing", timing, "Include wall-clock timings");
  }
  for (CLI::App* cmd : {construct, sharp}) {
    cmd->add_option("--cap", cap, "Vertex cap for exhaustive searches")
        ->check(CLI::Range(1, 64));
  }
  analyze->add_option("--cap", cap, "Unused; accepted for uniformity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitClean : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_opts, out_path, timing, in, out);
    if (*construct) return cmd_construct(construct_opts, k, cap, out_path, timing, in, out);
    if (*verify) {
      return cmd_verify(plan_path, seed, threads, verify_cap, out_path, timing, in, out, err);
    }
    if (*sharp) return cmd_sharpness(m_range, k_range, cap, out_path, timing, out);
    if (*generate) return cmd_generate(gen_family, gen_format, out_path, out);
  } catch (const InternalInvariantError& e) {
    err << "kended: internal invariant failed: " << e.what() << '\n';
    return kExitCounterexample;
  } catch (const Error& e) {
    err << "kended: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kended
