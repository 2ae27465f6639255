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

#ifndef KENDED_VERIFY_HPP_
#define KENDED_VERIFY_HPP_

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kended/constructive.hpp"
#include "kended/families.hpp"
#include "kended/graph.hpp"
#include "kended/invariants.hpp"
#include "kended/tree_search.hpp"

namespace kended {

// The statements checked per instance.
//   kCoveringTree:    alpha <= k + kappa - 1  =>  a k-ended tree covers S.
//   kBranchVertices:  same hypothesis  =>  a tree covering S has <= k-2
//                     branch vertices.
//   kResidualBound:   unconditional: a k-ended tree covers S, or some k-ended
//                     tree T has alpha(S - V(T)) <= alpha - kappa - k + 1.
//   kHamiltonianPath: S = V, k = 2, alpha(G) <= kappa(G) + 1  =>  G has a
//                     Hamiltonian path.
enum class Check { kCoveringTree, kBranchVertices, kResidualBound, kHamiltonianPath };

inline constexpr std::array<Check, 4> kAllChecks = {
    Check::kCoveringTree, Check::kBranchVertices, Check::kResidualBound,
    Check::kHamiltonianPath};

std::string_view check_name(Check check);
Check parse_check(std::string_view name);

struct VerifyOptions {
  int cap = kDefaultTreeSearchCap;
  std::size_t subset_cap = kDefaultSubsetCap;
};

struct TheoremVerdict {
  Check check = Check::kCoveringTree;
  std::string graph_id;  // graph6
  std::vector<Vertex> s;
  int k = 2;
  int alpha = 0;
  ConnectivityValue kappa = ConnectivityValue::infinite();
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  // Set when the constructive route was run: whether it produced a tree that
  // passed an independent audit (covering for kCoveringTree).
  std::optional<bool> constructive_ok;
  std::optional<Tree> witness;
  // False when two routes that must agree disagreed (e.g. the constructive
  // tree covers S but the exhaustive search found none).
  bool consistent = true;
  // Why a conclusion, audit or consistency check failed.
  std::string detail;
  std::chrono::nanoseconds elapsed{0};

  // The hypothesis holds but the conclusion or the constructive route fails,
  // or the routes disagree.
  bool is_counterexample() const;
};

TheoremVerdict verify_covering_tree(const Graph& g, const VertexSet& s, int k,
                                    const VerifyOptions& options = {});
TheoremVerdict verify_branch_vertices(const Graph& g, const VertexSet& s, int k,
                                      const VerifyOptions& options = {});
TheoremVerdict verify_residual_bound(const Graph& g, const VertexSet& s, int k,
                                     const VerifyOptions& options = {});
TheoremVerdict verify_hamiltonian_path(const Graph& g,
                                       const VerifyOptions& options = {});

// All instance checks in `checks` for one (G, S, k), sharing alpha, kappa and
// the constructive run. kHamiltonianPath is ignored here.
std::vector<TheoremVerdict> verify_instance(const Graph& g, const VertexSet& s, int k,
                                            std::span<const Check> checks,
                                            const VerifyOptions& options = {});

// Re-audits the stored witness against G and S from scratch. Empty string
// when it holds up, else the first problem found.
std::string audit_verdict(const Graph& g, const TheoremVerdict& verdict);

struct SharpnessVerdict {
  int m = 1;
  int k = 1;
  int alpha = 0;
  int kappa = 0;
  int min_leaves = 0;
  int min_branch = 0;
  Tree leaf_witness;
  Tree branch_witness;
  // alpha = m + k, kappa = m, min_leaves = k + 1, min_branch = k - 1.
  bool matches_expected = false;
};

// K_{m,m+k} with S the larger part. Throws CapExceeded when 2m + k > cap.
SharpnessVerdict verify_sharpness(int m, int k, int cap = kDefaultTreeSearchCap);

enum class SweepMode { kNone, kExhaustive, kRandom, kGraph6 };
enum class SubsetPolicy { kAllSubsets, kRandomSubsets, kAllVertices };

// Largest n for which the all-subsets policy is allowed.
inline constexpr int kAllSubsetsMaxN = 6;

struct SweepPlan {
  SweepMode mode = SweepMode::kNone;
  int n_min = 1;
  int n_max = 0;
  double p = 0.5;
  // Connected graphs to draw in random mode.
  std::size_t count = 0;
  std::uint64_t seed = 0;
  int k_min = 2;
  int k_max = 3;
  SubsetPolicy subsets = SubsetPolicy::kAllSubsets;
  int subset_samples = 1;
  std::vector<Check> checks{kAllChecks.begin(), kAllChecks.end()};
  // graph6 file, one record per line, for kGraph6.
  std::string source;
  unsigned threads = 0;  // 0: hardware concurrency
  int cap = kDefaultTreeSearchCap;
  int enumeration_cap = kDefaultEnumerationCap;
  std::size_t subset_cap = kDefaultSubsetCap;
  bool record_verdicts = false;
  bool timing = false;

  // Exhaustive over connected graphs with n <= 5, all nonempty S, k in 2..4.
  static SweepPlan default_plan();
};

// Key-value text, one "key = value" per line, '#' comments. Keys: mode,
// n, n_min, n_max, p, count, seed, k, k_min, k_max, subsets, subset_samples,
// checks, source, threads, cap, enumeration_cap, subset_cap,
// record_verdicts, timing. Empty text gives an empty plan.
SweepPlan parse_sweep_plan(std::string_view text);

struct CheckTally {
  std::size_t instances = 0;
  std::size_t hypothesis_true = 0;
  std::size_t conclusion_true = 0;
  std::size_t counterexamples = 0;
  std::chrono::nanoseconds worst{0};
};

struct SweepReport {
  SweepPlan plan;
  std::size_t graphs = 0;
  std::size_t skipped_disconnected = 0;
  std::size_t instances = 0;
  std::array<CheckTally, kAllChecks.size()> tallies{};
  std::optional<TheoremVerdict> counterexample;
  std::vector<TheoremVerdict> verdicts;  // only with plan.record_verdicts

  const CheckTally& tally(Check check) const {
    return tallies[static_cast<std::size_t>(check)];
  }
  bool clean() const { return !counterexample.has_value(); }
};

// Runs the plan on a worker pool. Verdicts reach `sink` and the report in
// canonical instance order; the sweep stops at the first counterexample.
SweepReport sweep(const SweepPlan& plan,
                  const std::function<void(const TheoremVerdict&)>& sink = {});

}  // namespace kended

#endif  // KENDED_VERIFY_HPP_
