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

// Acceptance suite: one PASS/FAIL line per criterion, exact tolerances.
//
// Exit status is nonzero when any criterion fails, except criteria listed as
// unattainable below; those still print FAIL with the measured values.

#include <chrono>
#include <climits>
#include <cstdio>
#include <exception>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kended/constructive.hpp"
#include "kended/families.hpp"
#include "kended/formats.hpp"
#include "kended/invariants.hpp"
#include "kended/tree_search.hpp"
#include "kended/verify.hpp"
#include "oracles.hpp"

namespace {

using namespace kended;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;
int known_failures = 0;

void report(const char* id, const char* title, const Outcome& o, bool unattainable,
            Clock::time_point start) {
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("[%s] %-4s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, title, secs);
  if (!o.detail.empty()) std::printf("       %s\n", o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) (unattainable ? known_failures : failures) += 1;
}

// Independent audit: edges in G, vertex set spanned, connected, acyclic.
bool audit(const Graph& g, const Tree& t, std::uint64_t must_cover, int max_leaves) {
  const std::uint64_t verts = t.vertices().bits();
  if ((verts & must_cover) != must_cover) return false;
  std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
  std::uint64_t touched = 0;
  for (const Edge& e : t.edges()) {
    if (!g.adjacent(e.u, e.v)) return false;
    if (!((verts >> e.u) & 1U) || !((verts >> e.v) & 1U)) return false;
    ++deg[e.u];
    ++deg[e.v];
    touched |= bit(e.u) | bit(e.v);
  }
  const int nv = std::popcount(verts);
  if (static_cast<int>(t.edges().size()) != nv - 1) return false;
  if (nv > 1 && touched != verts) return false;
  // Connected with nv - 1 edges means a tree.
  std::uint64_t seen = verts & (~verts + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (const Edge& e : t.edges()) {
      const bool a = (seen >> e.u) & 1U, b = (seen >> e.v) & 1U;
      if (a != b) {
        seen |= bit(e.u) | bit(e.v);
        grew = true;
      }
    }
  }
  if (seen != verts) return false;
  int leaves = 0;
  for (int d : deg) leaves += d == 1;
  return leaves <= max_leaves;
}

int oracle_set_kappa(const Graph& g, std::uint64_t s) {
  int best = INT_MAX;
  const std::vector<Vertex> m = oracle::members_of(s);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      best = std::min(best, oracle::local_connectivity_by_paths(g, m[i], m[j]));
    }
  }
  return best;  // INT_MAX for |S| <= 1
}

struct Cell {
  int m, k;
  SharpnessVerdict v;
  int oracle_alpha, oracle_kappa, oracle_leaves, oracle_branch;
};

std::vector<Cell> sharpness_cells() {
  std::vector<Cell> cells;
  for (int m = 1; m <= 4; ++m) {
    for (int k = 1; k <= 4; ++k) {
      if (m + (m + k) > 10) continue;
      FamilyGraph fg = make_family(GraphFamilySpec::sharpness(m, k));
      const std::uint64_t b = fg.distinguished->bits();
      const oracle::CoveringMinima minima = oracle::covering_minima_by_edge_subsets(fg.graph);
      cells.push_back({m, k, verify_sharpness(m, k),
                       oracle::independence_by_subsets(fg.graph, b),
                       oracle_set_kappa(fg.graph, b), minima.min_leaves[b],
                       minima.min_branch[b]});
    }
  }
  return cells;
}

Outcome criterion_1a(const std::vector<Cell>& cells) {
  Outcome o;
  std::ostringstream bad;
  for (const Cell& c : cells) {
    const bool lib_ok = c.v.alpha == c.m + c.k && c.v.kappa == c.m && c.v.min_leaves == c.k + 1;
    const bool agree = c.v.alpha == c.oracle_alpha && c.v.kappa == c.oracle_kappa &&
                       c.v.min_leaves == c.oracle_leaves;
    if (!lib_ok || !agree) {
      o.pass = false;
      bad << " (" << c.m << "," << c.k << "): alpha " << c.v.alpha << " kappa " << c.v.kappa
          << " leaves " << c.v.min_leaves << " oracle " << c.oracle_alpha << "/"
          << c.oracle_kappa << "/" << c.oracle_leaves << ";";
    }
  }
  o.detail = std::to_string(cells.size()) + " cells, exact, oracle-confirmed" +
             (o.pass ? std::string() : ";" + bad.str());
  return o;
}

Outcome criterion_1b(const std::vector<Cell>& cells) {
  Outcome o;
  std::ostringstream bad;
  int mismatched = 0;
  bool oracle_agrees = true;
  for (const Cell& c : cells) {
    oracle_agrees = oracle_agrees && c.v.min_branch == c.oracle_branch;
    if (c.v.min_branch != c.k - 1) {
      ++mismatched;
      bad << " (" << c.m << "," << c.k << ")=" << c.v.min_branch;
    }
  }
  o.pass = mismatched == 0 && oracle_agrees;
  std::ostringstream d;
  d << "oracle " << (oracle_agrees ? "agrees" : "DISAGREES") << " with exact minima";
  if (mismatched) {
    d << "; " << mismatched << " of " << cells.size() << " cells differ from k-1, measured"
      << bad.str() << " (a star centered in A covers B with one branch vertex)";
  }
  o.detail = d.str();
  return o;
}

Outcome criterion_2_exhaustive() {
  SweepPlan plan = SweepPlan::default_plan();
  plan.n_min = 1;
  plan.n_max = 5;
  plan.k_min = 2;
  plan.k_max = 4;
  plan.subsets = SubsetPolicy::kAllSubsets;
  const SweepReport r = sweep(plan);
  Outcome o;
  o.pass = r.clean();
  std::ostringstream d;
  d << r.graphs << " graphs, " << r.instances << " instances;";
  for (Check c : kAllChecks) {
    d << " " << check_name(c) << " " << r.tally(c).counterexamples << "/"
      << r.tally(c).hypothesis_true;
  }
  d << " (counterexamples/hypothesis-true)";
  if (!r.clean()) d << "; first: " << r.counterexample->graph_id << " " << r.counterexample->detail;
  o.pass = o.pass && r.graphs == 1 + 1 + 4 + 38 + 728;
  o.detail = d.str();
  return o;
}

Outcome criterion_2_sampled() {
  SweepPlan plan;
  plan.mode = SweepMode::kRandom;
  plan.n_min = 6;
  plan.n_max = 8;
  plan.p = 0.45;
  plan.count = 10'000;
  plan.seed = 20261014;
  plan.subsets = SubsetPolicy::kRandomSubsets;
  plan.subset_samples = 1;
  plan.k_min = 2;
  plan.k_max = 4;
  const SweepReport r = sweep(plan);
  Outcome o;
  o.pass = r.clean() && r.graphs >= 10'000;
  std::ostringstream d;
  d << r.graphs << " connected graphs (" << r.skipped_disconnected << " disconnected skipped), "
    << r.instances << " instances;";
  for (Check c : kAllChecks) d << " " << check_name(c) << " " << r.tally(c).counterexamples;
  if (!r.clean()) d << "; first: " << r.counterexample->graph_id << " " << r.counterexample->detail;
  o.detail = d.str();
  return o;
}

Outcome criterion_3() {
  Outcome o;
  std::size_t hypothesis_true = 0, covering = 0;
  std::ostringstream bad;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected_labeled_graphs(n)) {
      for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        const int alpha = oracle::independence_by_subsets(g, s);
        const int kappa = oracle_set_kappa(g, s);
        for (int k = 2; k <= 4; ++k) {
          if (kappa != INT_MAX && alpha > k + kappa - 1) continue;
          ++hypothesis_true;
          try {
            const ConstructionOutcome out = construct_k_ended_tree(g, VertexSet(n, s), k);
            bool ok = out.kind == OutcomeKind::kCovering && audit(g, out.tree, s, k);
            for (std::size_t i = 1; i < out.residual_history.size(); ++i) {
              ok = ok && out.residual_history[i] <= out.residual_history[i - 1] - 1;
            }
            if (ok) {
              ++covering;
            } else if (o.pass) {
              o.pass = false;
              bad << "; first failure " << emit_graph6(g) << " S=" << VertexSet(n, s).to_string()
                  << " k=" << k;
            }
          } catch (const std::exception& e) {
            if (o.pass) bad << "; " << emit_graph6(g) << " k=" << k << ": " << e.what();
            o.pass = false;
          }
        }
      }
    }
  }
  o.detail = std::to_string(covering) + " of " + std::to_string(hypothesis_true) +
             " hypothesis-true instances covered by an audited k-ended tree" + bad.str();
  return o;
}

Outcome criterion_4() {
  Outcome o;
  std::size_t qualifying = 0, found = 0, oracle_mismatch = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_labeled_graphs(n)) {
      const std::optional<Path> p = hamiltonian_path_exists(g);
      if (p.has_value() != oracle::hamiltonian_by_permutations(g)) ++oracle_mismatch;
      if (p && (p->size() != n || p->vertex_set() != g.vertices())) ++oracle_mismatch;
      const int alpha = independence_number(g, g.vertices()).size;
      const ConnectivityValue kappa = set_connectivity(g, g.vertices());
      if (!kappa.is_infinite() && alpha > kappa.value() + 1) continue;
      ++qualifying;
      found += p.has_value();
    }
  }
  const Graph pg = petersen_graph();
  const int pa = independence_number(pg, pg.vertices()).size;
  const ConnectivityValue pk = set_connectivity(pg, pg.vertices());
  const std::optional<Path> pp = hamiltonian_path_exists(pg);
  const bool petersen_ok = pa == 4 && pk == ConnectivityValue::finite(3) && pp &&
                           pp->vertex_set() == pg.vertices();
  o.pass = found == qualifying && oracle_mismatch == 0 && petersen_ok;
  o.detail = std::to_string(found) + " of " + std::to_string(qualifying) +
             " qualifying graphs have a Hamiltonian path; permutation-oracle mismatches " +
             std::to_string(oracle_mismatch) + "; Petersen alpha " + std::to_string(pa) +
             " kappa " + pk.to_string() + (pp ? " path found" : " NO PATH");
  return o;
}

struct AgreeCount {
  std::size_t graphs = 0, alpha = 0, local = 0, global = 0, bad = 0;
};

void agree_on(const Graph& g, bool all_subsets, std::mt19937_64& rng, AgreeCount& c) {
  const int n = g.n();
  ++c.graphs;
  if (all_subsets) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      ++c.alpha;
      c.bad += independence_number(g, VertexSet(n, s)).size != oracle::independence_by_subsets(g, s);
    }
  } else {
    const std::uint64_t s = rng() & low_mask(n);
    ++c.alpha;
    c.bad += independence_number(g, VertexSet(n, s)).size != oracle::independence_by_subsets(g, s);
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      ++c.local;
      c.bad += local_connectivity(g, x, y) != oracle::local_connectivity_by_paths(g, x, y);
    }
  }
  if (n >= 2) {
    ++c.global;
    c.bad += set_connectivity(g, g.vertices()).value() != oracle::vertex_connectivity_by_cuts(g);
  }
}

Outcome criterion_5() {
  AgreeCount c;
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      agree_on(oracle::graph_from_mask(n, mask), true, rng, c);
    }
  }
  Rng gen(55);
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + static_cast<int>(uniform_below(gen, 6));
    agree_on(random_gnp(n, unit_double(gen), gen), false, rng, c);
  }
  Outcome o;
  o.pass = c.bad == 0;
  o.detail = std::to_string(c.graphs) + " graphs; " + std::to_string(c.alpha) + " alpha, " +
             std::to_string(c.local) + " local kappa, " + std::to_string(c.global) +
             " global kappa comparisons; " + std::to_string(c.bad) + " disagreements";
  return o;
}

Outcome criterion_6() {
  std::size_t checked = 0, bad = 0;
  for (int n = 0; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = oracle::graph_from_mask(n, mask);
      bad += parse_graph6(emit_graph6(g)) != g;
      bad += parse_edge_list(emit_edge_list(g)) != g;
      ++checked;
    }
  }
  Rng rng(66);
  for (int i = 0; i < 10'000; ++i) {
    const Graph g = random_gnp(1 + static_cast<int>(uniform_below(rng, 8)), unit_double(rng), rng);
    bad += parse_graph6(emit_graph6(g)) != g;
    bad += parse_edge_list(emit_edge_list(g)) != g;
    ++checked;
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(checked) + " graphs, both formats; " + std::to_string(bad) +
             " mismatches";
  return o;
}

Outcome criterion_7() {
  std::mt19937_64 rng(77);
  Rng gen(78);
  std::size_t trees = 0, bad = 0;
  while (trees < 10'000) {
    const int n = 2 + static_cast<int>(uniform_below(gen, 11));
    const Graph g = random_gnp(n, 0.2 + 0.6 * unit_double(gen), gen);
    if (!g.is_connected()) continue;
    const Tree t(g, g.vertices(), oracle::random_spanning_tree(g, rng));
    bad += t.leaf_count() < t.branch_count() + 2;
    ++trees;
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(trees) + " spanning trees, n in 2..12; " + std::to_string(bad) +
             " violations";
  return o;
}

template <typename F>
void run(const char* id, const char* title, F&& f, bool unattainable = false) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  report(id, title, o, unattainable, start);
}

}  // namespace

int main() {
  const auto start = Clock::now();
  std::vector<Cell> cells;
  run("1a", "sharpness grid: alpha = m+k, kappa = m, min leaves = k+1", [&] {
    cells = sharpness_cells();
    return criterion_1a(cells);
  });
  run("1b", "sharpness grid: min branch vertices = k-1", [&] { return criterion_1b(cells); },
      /*unattainable=*/true);
  run("2a", "exhaustive n <= 5, all S, k in 2..4: zero counterexamples", criterion_2_exhaustive);
  run("2b", "sampled n in 6..8, 10^4 connected graphs: zero counterexamples",
      criterion_2_sampled);
  run("3", "construction covers S on every hypothesis-true instance", criterion_3);
  run("4", "alpha <= kappa + 1 implies a Hamiltonian path (n <= 6, Petersen)", criterion_4);
  run("5", "invariants agree with brute-force oracles", criterion_5);
  run("6", "graph6 and edge-list round trips", criterion_6);
  run("7", "leaves >= branch vertices + 2 on random spanning trees", criterion_7);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("acceptance: %d unexpected failure(s), %d known unattainable, %.1fs\n", failures,
              known_failures, secs);
  return failures == 0 ? 0 : 1;
}
