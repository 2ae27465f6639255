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

#include "kended/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "kended/formats.hpp"

namespace kended {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<std::string_view, 4> kCheckNames = {
    "covering-tree", "branch-vertices", "residual-bound", "hamiltonian-path"};

void require_connected(const Graph& g) {
  if (!g.is_connected()) throw InvalidArgument("verification needs a connected graph");
}

bool wants(std::span<const Check> checks, Check c) {
  return std::find(checks.begin(), checks.end(), c) != checks.end();
}

// Empty when `tree` is a valid subtree of G covering S.
std::string audit_covering(const Graph& g, const VertexSet& s, const Tree& tree) {
  if (std::string why = audit_tree(g, tree.vertices(), tree.edges()); !why.empty()) {
    return why;
  }
  if (!s.is_subset_of(tree.vertices())) return "tree does not cover S";
  return {};
}

// Leaf and branch counts straight from the edge list.
std::pair<int, int> count_leaves_and_branches(const Tree& tree) {
  std::vector<int> deg(static_cast<std::size_t>(tree.vertices().host_n()), 0);
  for (const Edge& e : tree.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  int leaves = 0;
  int branches = 0;
  for (Vertex v : tree.vertices()) {
    leaves += deg[v] == 1;
    branches += deg[v] >= 3;
  }
  return {leaves, branches};
}

TheoremVerdict blank_verdict(Check check, const Graph& g, const VertexSet& s, int k,
                             int alpha, ConnectivityValue kappa) {
  TheoremVerdict v;
  v.check = check;
  v.graph_id = emit_graph6(g);
  v.s = s.members();
  v.k = k;
  v.alpha = alpha;
  v.kappa = kappa;
  return v;
}

}  // namespace

std::string_view check_name(Check check) {
  return kCheckNames[static_cast<std::size_t>(check)];
}

Check parse_check(std::string_view name) {
  for (Check c : kAllChecks) {
    if (check_name(c) == name) return c;
  }
  throw ParseError("unknown check '" + std::string(name) + "'");
}

bool TheoremVerdict::is_counterexample() const {
  if (!consistent) return true;
  if (!hypothesis_holds) return false;
  return !conclusion_holds || constructive_ok == false;
}

std::vector<TheoremVerdict> verify_instance(const Graph& g, const VertexSet& s, int k,
                                            std::span<const Check> checks,
                                            const VerifyOptions& options) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  require_connected(g);
  const auto start = Clock::now();

  const int alpha = independence_number(g, s).size;
  const ConnectivityValue kappa = set_connectivity(g, s);
  const bool hypothesis = covering_hypothesis_holds(alpha, k, kappa);
  const bool need_covering = wants(checks, Check::kCoveringTree) ||
                             wants(checks, Check::kResidualBound);

  std::optional<Tree> oracle;
  std::string oracle_problem;
  std::optional<ConstructionOutcome> outcome;
  std::string outcome_problem;
  if (need_covering) {
    oracle = find_k_ended_covering_tree(g, s, k, options.cap);
    if (oracle) {
      oracle_problem = audit_covering(g, s, *oracle);
      if (oracle_problem.empty() && count_leaves_and_branches(*oracle).first > k) {
        oracle_problem = "search witness has more than k leaves";
      }
    }
    try {
      outcome = construct_k_ended_tree(g, s, k, {options.cap, options.subset_cap});
    } catch (const InternalInvariantError& e) {
      outcome_problem = std::string("constructive invariant failed: ") + e.what();
    }
    if (outcome) {
      const Tree& t = outcome->tree;
      if (std::string why = audit_tree(g, t.vertices(), t.edges()); !why.empty()) {
        outcome_problem = "constructive tree invalid: " + why;
      } else if (count_leaves_and_branches(t).first > k) {
        outcome_problem = "constructive tree has more than k leaves";
      } else if (outcome->kind == OutcomeKind::kCovering && !s.is_subset_of(t.vertices())) {
        outcome_problem = "constructive tree claims coverage but misses S";
      } else if (outcome->kind == OutcomeKind::kResidualBound) {
        const int fresh = independence_number(g, s - t.vertices()).size;
        if (fresh != outcome->residual_alpha) {
          outcome_problem = "constructive residual alpha misreported";
        } else if (!outcome->bound || fresh > *outcome->bound) {
          outcome_problem = "constructive residual alpha exceeds bound";
        }
      }
    }
  }
  const bool oracle_found = oracle && oracle_problem.empty();
  const bool outcome_ok = outcome && outcome_problem.empty();
  const bool outcome_covers = outcome_ok && outcome->kind == OutcomeKind::kCovering;

  std::vector<TheoremVerdict> out;
  if (wants(checks, Check::kCoveringTree)) {
    TheoremVerdict v = blank_verdict(Check::kCoveringTree, g, s, k, alpha, kappa);
    v.hypothesis_holds = hypothesis;
    v.conclusion_holds = oracle_found;
    v.witness = oracle;
    v.constructive_ok = outcome_covers;
    v.detail = !oracle_problem.empty() ? oracle_problem : outcome_problem;
    if (outcome_covers && !oracle_found) {
      v.consistent = false;
      v.detail = "constructive tree covers S but exhaustive search found none";
    }
    if (hypothesis && !outcome_covers && v.detail.empty()) {
      v.detail = "constructive route ended without covering S";
    }
    out.push_back(std::move(v));
  }
  if (wants(checks, Check::kBranchVertices)) {
    TheoremVerdict v = blank_verdict(Check::kBranchVertices, g, s, k, alpha, kappa);
    v.hypothesis_holds = hypothesis;
    v.witness = find_bounded_branch_covering_tree(g, s, k - 2, options.cap);
    if (v.witness) {
      v.detail = audit_covering(g, s, *v.witness);
      if (v.detail.empty() && count_leaves_and_branches(*v.witness).second > k - 2) {
        v.detail = "search witness has more than k - 2 branch vertices";
      }
    }
    v.conclusion_holds = v.witness && v.detail.empty();
    // At most k leaves forces at most k - 2 branch vertices.
    if (oracle_found && !v.conclusion_holds) {
      v.consistent = false;
      v.detail = "k-ended covering tree exists but no tree with k - 2 branch vertices";
    }
    out.push_back(std::move(v));
  }
  if (wants(checks, Check::kResidualBound)) {
    TheoremVerdict v = blank_verdict(Check::kResidualBound, g, s, k, alpha, kappa);
    v.hypothesis_holds = true;
    v.constructive_ok = outcome_ok;
    v.conclusion_holds = oracle_found || outcome_ok;
    v.witness = outcome ? std::optional<Tree>(outcome->tree) : oracle;
    v.detail = outcome_problem;
    if (outcome_covers && !oracle_found) {
      v.consistent = false;
      v.detail = "constructive tree covers S but exhaustive search found none";
    }
    out.push_back(std::move(v));
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      Clock::now() - start);
  for (TheoremVerdict& v : out) v.elapsed = elapsed;
  return out;
}

TheoremVerdict verify_covering_tree(const Graph& g, const VertexSet& s, int k,
                                    const VerifyOptions& options) {
  const Check c = Check::kCoveringTree;
  return verify_instance(g, s, k, std::span<const Check>(&c, 1), options).front();
}

TheoremVerdict verify_branch_vertices(const Graph& g, const VertexSet& s, int k,
                                      const VerifyOptions& options) {
  const Check c = Check::kBranchVertices;
  return verify_instance(g, s, k, std::span<const Check>(&c, 1), options).front();
}

TheoremVerdict verify_residual_bound(const Graph& g, const VertexSet& s, int k,
                                     const VerifyOptions& options) {
  const Check c = Check::kResidualBound;
  return verify_instance(g, s, k, std::span<const Check>(&c, 1), options).front();
}

TheoremVerdict verify_hamiltonian_path(const Graph& g, const VerifyOptions& options) {
  require_connected(g);
  const auto start = Clock::now();
  const VertexSet all = g.vertices();
  const int alpha = independence_number(g, all).size;
  const ConnectivityValue kappa = set_connectivity(g, all);
  TheoremVerdict v = blank_verdict(Check::kHamiltonianPath, g, all, 2, alpha, kappa);
  v.hypothesis_holds = covering_hypothesis_holds(alpha, 2, kappa);
  std::optional<Path> path = hamiltonian_path_exists(g, options.cap);
  if (path) {
    v.witness = Tree::from_path(g, *path);
    v.detail = audit_covering(g, all, *v.witness);
  }
  v.conclusion_holds = path && v.detail.empty();
  // A Hamiltonian path is exactly a spanning 2-ended tree.
  const bool spanning_two_ended = find_k_ended_covering_tree(g, all, 2, options.cap).has_value();
  if (spanning_two_ended != path.has_value()) {
    v.consistent = false;
    v.detail = "Hamiltonian path search and spanning 2-ended tree search disagree";
  }
  v.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return v;
}

std::string audit_verdict(const Graph& g, const TheoremVerdict& verdict) {
  if (!verdict.witness) return {};
  const VertexSet s(g.n(), std::span<const Vertex>(verdict.s));
  const Tree& t = *verdict.witness;
  if (std::string why = audit_tree(g, t.vertices(), t.edges()); !why.empty()) return why;
  const auto [leaf_count, branch_count] = count_leaves_and_branches(t);
  switch (verdict.check) {
    case Check::kCoveringTree:
    case Check::kHamiltonianPath:
      if (!s.is_subset_of(t.vertices())) return "witness does not cover S";
      if (leaf_count > verdict.k) return "witness has more than k leaves";
      break;
    case Check::kBranchVertices:
      if (!s.is_subset_of(t.vertices())) return "witness does not cover S";
      if (branch_count > verdict.k - 2) return "witness has more than k - 2 branch vertices";
      break;
    case Check::kResidualBound: {
      if (leaf_count > verdict.k) return "witness has more than k leaves";
      if (s.is_subset_of(t.vertices())) break;
      if (verdict.kappa.is_infinite()) return "witness misses S with infinite kappa";
      const int residual = independence_number(g, s - t.vertices()).size;
      const auto bound = residual_bound(verdict.alpha, verdict.kappa, verdict.k);
      if (residual > *bound) return "witness residual alpha exceeds bound";
      break;
    }
  }
  return {};
}

SharpnessVerdict verify_sharpness(int m, int k, int cap) {
  if (m < 1 || k < 1) throw InvalidArgument("sharpness needs m >= 1 and k >= 1");
  if (2 * m + k > cap) {
    throw CapExceeded("K_{" + std::to_string(m) + "," + std::to_string(m + k) +
                      "} has more than " + std::to_string(cap) + " vertices");
  }
  const FamilyGraph family = make_family(GraphFamilySpec::sharpness(m, k));
  const Graph& g = family.graph;
  const VertexSet& b = *family.distinguished;

  SharpnessVerdict v;
  v.m = m;
  v.k = k;
  v.alpha = independence_number(g, b).size;
  v.kappa = set_connectivity(g, b).value();
  CoveringTreeOptimum leaves = minimum_leaf_covering_tree(g, b, cap);
  CoveringTreeOptimum branches = min_branch_covering_tree(g, b, cap);
  v.min_leaves = leaves.value;
  v.min_branch = branches.value;
  v.leaf_witness = std::move(leaves.tree);
  v.branch_witness = std::move(branches.tree);
  v.matches_expected = v.alpha == m + k && v.kappa == m && v.min_leaves == k + 1 &&
                       v.min_branch == k - 1;
  return v;
}

// ---------------------------------------------------------------------------
// Sweep plans
// ---------------------------------------------------------------------------

SweepPlan SweepPlan::default_plan() {
  SweepPlan plan;
  plan.mode = SweepMode::kExhaustive;
  plan.n_min = 1;
  plan.n_max = 5;
  plan.k_min = 2;
  plan.k_max = 4;
  plan.subsets = SubsetPolicy::kAllSubsets;
  return plan;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

long long plan_integer(std::string_view key, std::string_view value, long long lo,
                       long long hi) {
  long long out = 0;
  std::size_t used = 0;
  const std::string text(value);
  try {
    out = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != text.size() || out < lo || out > hi) {
    throw ParseError("plan key '" + std::string(key) + "': expected an integer in [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "], got '" +
                     text + "'");
  }
  return out;
}

bool plan_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ParseError("plan key '" + std::string(key) + "': expected true or false");
}

}  // namespace

SweepPlan parse_sweep_plan(std::string_view text) {
  SweepPlan plan;
  bool any_key = false;
  bool mode_set = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("plan line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    any_key = true;
    if (key == "mode") {
      mode_set = true;
      if (value == "exhaustive") plan.mode = SweepMode::kExhaustive;
      else if (value == "random") plan.mode = SweepMode::kRandom;
      else if (value == "graph6") plan.mode = SweepMode::kGraph6;
      else throw ParseError("plan: unknown mode '" + std::string(value) + "'");
    } else if (key == "n") {
      plan.n_min = plan.n_max = static_cast<int>(plan_integer(key, value, 1, kMaxVertices));
    } else if (key == "n_min") {
      plan.n_min = static_cast<int>(plan_integer(key, value, 1, kMaxVertices));
    } else if (key == "n_max") {
      plan.n_max = static_cast<int>(plan_integer(key, value, 1, kMaxVertices));
    } else if (key == "p") {
      std::size_t used = 0;
      const std::string v(value);
      try {
        plan.p = std::stod(v, &used);
      } catch (const std::exception&) {
        used = std::string::npos;
      }
      if (used != v.size() || !(plan.p >= 0.0 && plan.p <= 1.0)) {
        throw ParseError("plan key 'p': expected a probability in [0, 1]");
      }
    } else if (key == "count") {
      plan.count = static_cast<std::size_t>(plan_integer(key, value, 0, 1'000'000'000));
    } else if (key == "seed") {
      plan.seed = static_cast<std::uint64_t>(
          plan_integer(key, value, 0, std::numeric_limits<long long>::max()));
    } else if (key == "k") {
      plan.k_min = plan.k_max = static_cast<int>(plan_integer(key, value, 2, kMaxVertices));
    } else if (key == "k_min") {
      plan.k_min = static_cast<int>(plan_integer(key, value, 2, kMaxVertices));
    } else if (key == "k_max") {
      plan.k_max = static_cast<int>(plan_integer(key, value, 2, kMaxVertices));
    } else if (key == "subsets") {
      if (value == "all-subsets") plan.subsets = SubsetPolicy::kAllSubsets;
      else if (value == "random-subsets") plan.subsets = SubsetPolicy::kRandomSubsets;
      else if (value == "all-vertices") plan.subsets = SubsetPolicy::kAllVertices;
      else throw ParseError("plan: unknown subset policy '" + std::string(value) + "'");
    } else if (key == "subset_samples") {
      plan.subset_samples = static_cast<int>(plan_integer(key, value, 1, 1'000'000));
    } else if (key == "checks") {
      plan.checks.clear();
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view name = trim(rest.substr(0, comma));
        if (!name.empty()) plan.checks.push_back(parse_check(name));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
      std::sort(plan.checks.begin(), plan.checks.end());
      plan.checks.erase(std::unique(plan.checks.begin(), plan.checks.end()),
                        plan.checks.end());
    } else if (key == "source") {
      plan.source = std::string(value);
    } else if (key == "threads") {
      plan.threads = static_cast<unsigned>(plan_integer(key, value, 0, 1024));
    } else if (key == "cap") {
      plan.cap = static_cast<int>(plan_integer(key, value, 1, kMaxVertices));
    } else if (key == "enumeration_cap") {
      plan.enumeration_cap = static_cast<int>(plan_integer(key, value, 1, 8));
    } else if (key == "subset_cap") {
      plan.subset_cap = static_cast<std::size_t>(plan_integer(key, value, 1, 1'000'000'000));
    } else if (key == "record_verdicts") {
      plan.record_verdicts = plan_bool(key, value);
    } else if (key == "timing") {
      plan.timing = plan_bool(key, value);
    } else {
      throw ParseError("plan: unknown key '" + std::string(key) + "'");
    }
  }
  if (!any_key) return plan;
  if (!mode_set) throw ParseError("plan: missing 'mode'");
  if (plan.mode != SweepMode::kGraph6 && plan.n_max < plan.n_min) {
    throw ParseError("plan: n_max below n_min (set n or n_max)");
  }
  if (plan.k_max < plan.k_min) throw ParseError("plan: k_max below k_min");
  if (plan.mode == SweepMode::kRandom && plan.count == 0) {
    throw ParseError("plan: random mode needs count > 0");
  }
  if (plan.mode == SweepMode::kGraph6 && plan.source.empty()) {
    throw ParseError("plan: graph6 mode needs source");
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Sweep execution
// ---------------------------------------------------------------------------

namespace {

struct WorkItem {
  Graph graph;
  std::vector<VertexSet> subsets;
};

struct ItemResult {
  std::array<CheckTally, kAllChecks.size()> tallies{};
  std::size_t instances = 0;
  std::vector<TheoremVerdict> verdicts;
  std::optional<TheoremVerdict> counterexample;
  std::exception_ptr error;
};

std::vector<VertexSet> subsets_for(const Graph& g, const SweepPlan& plan, Rng& rng) {
  std::vector<VertexSet> out;
  const int n = g.n();
  switch (plan.subsets) {
    case SubsetPolicy::kAllSubsets:
      if (n > kAllSubsetsMaxN) {
        throw CapExceeded("all-subsets policy limited to n <= " +
                          std::to_string(kAllSubsetsMaxN));
      }
      for (std::uint64_t mask = 1; mask <= low_mask(n); ++mask) out.emplace_back(n, mask);
      break;
    case SubsetPolicy::kRandomSubsets:
      for (int i = 0; i < plan.subset_samples; ++i) {
        std::uint64_t mask = 0;
        while (mask == 0) mask = rng() & low_mask(n);
        out.emplace_back(n, mask);
      }
      break;
    case SubsetPolicy::kAllVertices:
      out.push_back(g.vertices());
      break;
  }
  return out;
}

void tally(ItemResult& result, const TheoremVerdict& v, bool keep) {
  CheckTally& t = result.tallies[static_cast<std::size_t>(v.check)];
  ++t.instances;
  t.hypothesis_true += v.hypothesis_holds;
  t.conclusion_true += v.conclusion_holds;
  t.worst = std::max(t.worst, v.elapsed);
  if (v.is_counterexample()) {
    ++t.counterexamples;
    if (!result.counterexample) result.counterexample = v;
  }
  if (keep) result.verdicts.push_back(v);
}

ItemResult evaluate(const WorkItem& item, const SweepPlan& plan, bool keep) {
  ItemResult result;
  const VerifyOptions options{plan.cap, plan.subset_cap};
  std::vector<Check> instance_checks;
  for (Check c : plan.checks) {
    if (c != Check::kHamiltonianPath) instance_checks.push_back(c);
  }
  try {
    if (wants(plan.checks, Check::kHamiltonianPath)) {
      tally(result, verify_hamiltonian_path(item.graph, options), keep);
      ++result.instances;
      if (result.counterexample) return result;
    }
    if (instance_checks.empty()) return result;
    for (const VertexSet& s : item.subsets) {
      for (int k = plan.k_min; k <= plan.k_max; ++k) {
        for (const TheoremVerdict& v :
             verify_instance(item.graph, s, k, instance_checks, options)) {
          tally(result, v, keep);
        }
        ++result.instances;
        if (result.counterexample) return result;
      }
    }
  } catch (...) {
    result.error = std::current_exception();
  }
  return result;
}

}  // namespace

SweepReport sweep(const SweepPlan& plan,
                  const std::function<void(const TheoremVerdict&)>& sink) {
  SweepReport report;
  report.plan = plan;
  if (plan.mode == SweepMode::kNone) return report;

  // Instances are produced sequentially so seeded draws do not depend on
  // the worker count.
  std::vector<WorkItem> items;
  Rng rng(plan.seed);
  switch (plan.mode) {
    case SweepMode::kNone:
      break;
    case SweepMode::kExhaustive:
      for (int n = plan.n_min; n <= plan.n_max; ++n) {
        ConnectedGraphEnumerator it(n, plan.enumeration_cap);
        while (auto g = it.next()) {
          std::vector<VertexSet> subsets = subsets_for(*g, plan, rng);
          items.push_back({*std::move(g), std::move(subsets)});
        }
      }
      break;
    case SweepMode::kRandom: {
      const std::size_t max_attempts = plan.count * 1000;
      std::size_t attempts = 0;
      while (items.size() < plan.count) {
        if (++attempts > max_attempts) {
          throw InvalidArgument("random sweep: too few connected samples at p = " +
                                std::to_string(plan.p));
        }
        const int n = plan.n_min + static_cast<int>(uniform_below(
                                       rng, static_cast<std::uint64_t>(plan.n_max - plan.n_min + 1)));
        Graph g = random_gnp(n, plan.p, rng);
        if (!g.is_connected()) {
          ++report.skipped_disconnected;
          continue;
        }
        std::vector<VertexSet> subsets = subsets_for(g, plan, rng);
        items.push_back({std::move(g), std::move(subsets)});
      }
      break;
    }
    case SweepMode::kGraph6: {
      std::ifstream in(plan.source);
      if (!in) throw InvalidArgument("cannot open graph6 source '" + plan.source + "'");
      read_graph6_stream(in, [&](Graph g) {
        if (g.n() == 0 || !g.is_connected()) {
          ++report.skipped_disconnected;
          return;
        }
        std::vector<VertexSet> subsets = subsets_for(g, plan, rng);
        items.push_back({std::move(g), std::move(subsets)});
      });
      break;
    }
  }

  const bool keep = plan.record_verdicts || static_cast<bool>(sink);
  std::vector<ItemResult> results(items.size());
  std::vector<char> done(items.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      results[i] = evaluate(items[i], plan, keep);
      done[i] = 1;
      if (results[i].counterexample || results[i].error) stop.store(true);
    }
  };
  unsigned threads = plan.threads != 0 ? plan.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(
                                                         std::max<std::size_t>(items.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  // Items are claimed in index order, so every item before the first
  // failure has been evaluated.
  for (std::size_t i = 0; i < items.size() && done[i]; ++i) {
    ItemResult& r = results[i];
    if (r.error) std::rethrow_exception(r.error);
    ++report.graphs;
    report.instances += r.instances;
    for (std::size_t c = 0; c < kAllChecks.size(); ++c) {
      CheckTally& into = report.tallies[c];
      into.instances += r.tallies[c].instances;
      into.hypothesis_true += r.tallies[c].hypothesis_true;
      into.conclusion_true += r.tallies[c].conclusion_true;
      into.counterexamples += r.tallies[c].counterexamples;
      into.worst = std::max(into.worst, r.tallies[c].worst);
    }
    for (const TheoremVerdict& v : r.verdicts) {
      if (sink) sink(v);
      if (plan.record_verdicts) report.verdicts.push_back(v);
    }
    if (r.counterexample) {
      report.counterexample = std::move(r.counterexample);
      break;
    }
  }
  return report;
}

}  // namespace kended
