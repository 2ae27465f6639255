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

#ifndef KENDED_CONSTRUCTIVE_HPP_
#define KENDED_CONSTRUCTIVE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "kended/graph.hpp"
#include "kended/invariants.hpp"
#include "kended/tree_search.hpp"

namespace kended {

// Builds a k-ended tree by growing a base path with longest attachment paths.
// Each attachment starts inside every maximum independent subset of the
// uncovered part of S, so the independence number of what remains drops by
// at least one per added leaf.

struct ConstructOptions {
  // Vertex cap for the exhaustive base-path search.
  int cap = kDefaultTreeSearchCap;
  std::size_t subset_cap = kDefaultSubsetCap;
};

enum class BasePathKind { kCoversS, kResidualBound };

struct BasePathResult {
  Path path;
  BasePathKind kind = BasePathKind::kCoversS;
  // Independence number of S - V(path).
  int residual_alpha = 0;
};

// A path covering S if one exists, else a path P with
// alpha(S - V(P)) <= alpha(S) - kappa(S) - 1. Candidates are scanned longest
// first, ties lexicographic. G connected, S nonempty. Throws
// InternalInvariantError if neither kind exists.
BasePathResult base_path(const Graph& g, const VertexSet& s,
                         const ConstructOptions& options = {});

// Calls `visit` with every vertex sequence s, v1, ..., t where s is in
// `sources`, the vertices before t avoid V(tree), and t is in V(tree).
void for_each_attachment_path(
    const Graph& g, const Tree& tree, const VertexSet& sources,
    const std::function<void(const std::vector<Vertex>&)>& visit);

struct AttachmentPath {
  Path path;
  Vertex s0 = 0;
  // The maximum independent subsets of S - V(T) the path was checked against.
  std::vector<VertexSet> maximum_subsets;
};

// Longest attachment path (ties lexicographic) from the union of all maximum
// independent subsets of S - V(T). Throws InternalInvariantError if the path
// misses one of those subsets.
AttachmentPath maximal_attachment_path(const Graph& g, const Tree& tree,
                                       const VertexSet& s,
                                       std::size_t subset_cap = kDefaultSubsetCap);

// T + P where P meets T only at its last vertex.
Tree augment(const Graph& g, const Tree& tree, const Path& attachment);

struct AugmentationState {
  Tree tree;
  // The tree is `budget`-ended.
  int budget = 2;
  int residual_alpha = 0;
  // Base path first, then each attachment path in order.
  std::vector<Path> trace;
};

enum class OutcomeKind { kCovering, kResidualBound };

struct ConstructionOutcome {
  OutcomeKind kind = OutcomeKind::kCovering;
  Tree tree;
  int residual_alpha = 0;
  // alpha - kappa - k + 1; absent when kappa is infinite.
  std::optional<long long> bound;
  int alpha = 0;
  ConnectivityValue kappa = ConnectivityValue::infinite();
  int k = 2;
  std::vector<Path> trace;
  // Residual independence number after the base path and each attachment.
  std::vector<int> residual_history;
};

// Covering when S fits in a k-ended tree found this way, else ResidualBound
// with residual_alpha <= bound. Whenever alpha <= k + kappa - 1 the outcome
// is Covering.
ConstructionOutcome construct_k_ended_tree(const Graph& g, const VertexSet& s, int k,
                                           const ConstructOptions& options = {});

}  // namespace kended

#endif  // KENDED_CONSTRUCTIVE_HPP_
