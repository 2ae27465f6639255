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

#ifndef KENDED_TREE_SEARCH_HPP_
#define KENDED_TREE_SEARCH_HPP_

#include <optional>

#include "kended/graph.hpp"

namespace kended {

// Exhaustive searches over subtrees of G. Exponential; every entry point
// refuses graphs with more than `cap` vertices.
inline constexpr int kDefaultTreeSearchCap = 10;

// Some subtree T with S within V(T) and at most k leaves, or nullopt. The
// witness is the minimal subtree spanning S inside the first tree met in
// search order, so all of its leaves lie in S. Empty S yields the one-vertex
// tree on vertex 0.
std::optional<Tree> find_k_ended_covering_tree(const Graph& g, const VertexSet& s,
                                               int k,
                                               int cap = kDefaultTreeSearchCap);

// As above with at most `max_branch` branch vertices instead of a leaf bound.
std::optional<Tree> find_bounded_branch_covering_tree(
    const Graph& g, const VertexSet& s, int max_branch,
    int cap = kDefaultTreeSearchCap);

struct CoveringTreeOptimum {
  int value = 0;
  Tree tree;
};

// Minimum leaf count over trees covering S. S must be nonempty and inside
// one component. A single vertex gives (0, that vertex).
CoveringTreeOptimum minimum_leaf_covering_tree(const Graph& g, const VertexSet& s,
                                               int cap = kDefaultTreeSearchCap);

// Minimum branch-vertex count over trees covering S.
CoveringTreeOptimum min_branch_covering_tree(const Graph& g, const VertexSet& s,
                                             int cap = kDefaultTreeSearchCap);

// Backtracking search for a path through every vertex.
std::optional<Path> hamiltonian_path_exists(const Graph& g,
                                            int cap = kDefaultTreeSearchCap);

enum class CoveringMode { kExistence, kMinimizeLeaves, kMinimizeBranchVertices };

struct CoveringTreeQuery {
  VertexSet s;
  // Leaf budget for kExistence; must be >= 2.
  int k = 2;
  CoveringMode mode = CoveringMode::kExistence;
};

struct CoveringTreeAnswer {
  // Leaf count of the witness for kExistence, the optimum otherwise.
  std::optional<int> value;
  std::optional<Tree> tree;
};

CoveringTreeAnswer answer_query(const Graph& g, const CoveringTreeQuery& query,
                                int cap = kDefaultTreeSearchCap);

}  // namespace kended

#endif  // KENDED_TREE_SEARCH_HPP_
