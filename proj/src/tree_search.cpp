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

#include "kended/tree_search.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace kended {

namespace {

enum class Budget { kLeaves, kBranches };

void check_cap(const Graph& g, int cap) {
  if (g.n() > cap) {
    throw CapExceeded("exhaustive tree search on n = " + std::to_string(g.n()) +
                      " exceeds cap " + std::to_string(cap));
  }
}

void check_host(const Graph& g, const VertexSet& s) {
  if (s.host_n() != g.n()) throw InvalidArgument("vertex set host differs from graph");
}

// Enumerates the subtrees containing a fixed root of S exactly once each by
// branching on one frontier edge at a time: take it, or forbid it for the
// rest of the branch. Degrees only grow along a branch, so the leaf lower
// bound 2 + sum(max(0, deg - 2)) and the branch-vertex count are monotone and
// prune safely. Once S is covered no extension changes the minimal subtree
// spanning S, so the branch is decided there.
class CoveringSearch {
 public:
  CoveringSearch(const Graph& g, const VertexSet& s, Budget budget, int limit)
      : g_(g),
        s_(s.bits()),
        budget_(budget),
        limit_(limit),
        degree_(static_cast<std::size_t>(g.n()), 0),
        excluded_(static_cast<std::size_t>(g.n()), 0) {}

  std::optional<Tree> run() {
    const Vertex root = std::countr_zero(s_);
    in_tree_ = bit(root);
    if (descend()) return std::move(found_);
    return std::nullopt;
  }

 private:
  bool descend() {
    if ((s_ & ~in_tree_) == 0) return accept();
    if (!uncovered_reachable()) return false;

    Vertex u = -1;
    Vertex v = -1;
    for (Vertex w : VertexSet(g_.n(), in_tree_)) {
      const std::uint64_t open = g_.row(w) & ~in_tree_ & ~excluded_[w];
      if (open != 0) {
        u = w;
        v = std::countr_zero(open);
        break;
      }
    }
    if (u < 0) return false;

    // Take u-v.
    ++degree_[u];
    degree_[v] = 1;
    in_tree_ |= bit(v);
    edges_.push_back(Edge::of(u, v));
    if (degree_[u] >= 3) {
      ++excess_;
      if (degree_[u] == 3) ++branches_;
    }
    const bool within = budget_ == Budget::kLeaves ? 2 + excess_ <= limit_
                                                   : branches_ <= limit_;
    bool done = within && descend();
    if (degree_[u] >= 3) {
      --excess_;
      if (degree_[u] == 3) --branches_;
    }
    edges_.pop_back();
    in_tree_ &= ~bit(v);
    degree_[v] = 0;
    --degree_[u];
    if (done) return true;

    // Forbid u-v.
    excluded_[u] |= bit(v);
    excluded_[v] |= bit(u);
    done = descend();
    excluded_[u] &= ~bit(v);
    excluded_[v] &= ~bit(u);
    return done;
  }

  bool uncovered_reachable() const {
    std::uint64_t reach = 0;
    for (Vertex w : VertexSet(g_.n(), in_tree_)) {
      reach |= g_.row(w) & ~excluded_[w];
    }
    reach &= ~in_tree_;
    std::uint64_t frontier = reach;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (Vertex w : VertexSet(g_.n(), frontier)) next |= g_.row(w);
      next &= ~in_tree_ & ~reach;
      reach |= next;
      frontier = next;
    }
    return (s_ & ~in_tree_ & ~reach) == 0;
  }

  bool accept() {
    // Strip leaves outside S until none remain.
    std::vector<int> deg = degree_;
    std::uint64_t keep = in_tree_;
    std::vector<Edge> kept = edges_;
    bool changed = std::popcount(keep) > 1;
    while (changed) {
      changed = false;
      for (auto it = kept.begin(); it != kept.end();) {
        const bool drop_u = deg[it->u] == 1 && ((s_ >> it->u) & 1U) == 0;
        const bool drop_v = deg[it->v] == 1 && ((s_ >> it->v) & 1U) == 0;
        if (drop_u || drop_v) {
          const Vertex gone = drop_u ? it->u : it->v;
          keep &= ~bit(gone);
          --deg[it->u];
          --deg[it->v];
          it = kept.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
    }
    Tree tree(g_, VertexSet(g_.n(), keep), std::move(kept));
    const bool ok = budget_ == Budget::kLeaves ? tree.leaf_count() <= limit_
                                               : tree.branch_count() <= limit_;
    if (ok) found_ = std::move(tree);
    return ok;
  }

  const Graph& g_;
  std::uint64_t s_;
  Budget budget_;
  int limit_;
  std::uint64_t in_tree_ = 0;
  std::vector<int> degree_;
  std::vector<std::uint64_t> excluded_;
  std::vector<Edge> edges_;
  int excess_ = 0;
  int branches_ = 0;
  std::optional<Tree> found_;
};

std::optional<Tree> bounded_search(const Graph& g, const VertexSet& s,
                                   Budget budget, int limit, int cap) {
  check_host(g, s);
  check_cap(g, cap);
  if (s.empty()) {
    if (g.n() == 0) throw InvalidArgument("graph has no vertices");
    return Tree::single(g, 0);
  }
  if (!g.in_one_component(s)) return std::nullopt;
  return CoveringSearch(g, s, budget, limit).run();
}

CoveringTreeOptimum minimize(const Graph& g, const VertexSet& s, Budget budget,
                             int cap) {
  check_host(g, s);
  check_cap(g, cap);
  if (s.empty()) throw InvalidArgument("covering-tree minimum needs nonempty S");
  if (!g.in_one_component(s)) {
    throw InvalidArgument("S does not lie in one component; no covering tree");
  }
  if (s.size() == 1) return {0, Tree::single(g, s.first())};
  // The minimal subtree spanning S has all leaves in S, so |S| leaves and
  // |S| - 2 branch vertices always suffice.
  const int first = budget == Budget::kLeaves ? 2 : 0;
  const int last = budget == Budget::kLeaves ? s.size() : s.size() - 2;
  for (int limit = first; limit <= last; ++limit) {
    if (auto tree = CoveringSearch(g, s, budget, limit).run()) {
      return {limit, *std::move(tree)};
    }
  }
  throw InternalInvariantError("no covering tree within |S| leaves");
}

}  // namespace

std::optional<Tree> find_k_ended_covering_tree(const Graph& g, const VertexSet& s,
                                               int k, int cap) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  return bounded_search(g, s, Budget::kLeaves, k, cap);
}

std::optional<Tree> find_bounded_branch_covering_tree(const Graph& g,
                                                      const VertexSet& s,
                                                      int max_branch, int cap) {
  if (max_branch < 0) throw InvalidArgument("branch bound must be non-negative");
  return bounded_search(g, s, Budget::kBranches, max_branch, cap);
}

CoveringTreeOptimum minimum_leaf_covering_tree(const Graph& g, const VertexSet& s,
                                               int cap) {
  return minimize(g, s, Budget::kLeaves, cap);
}

CoveringTreeOptimum min_branch_covering_tree(const Graph& g, const VertexSet& s,
                                             int cap) {
  return minimize(g, s, Budget::kBranches, cap);
}

namespace {

bool extend_hamiltonian(const Graph& g, std::vector<Vertex>& seq,
                        std::uint64_t visited) {
  const std::uint64_t all = low_mask(g.n());
  if (visited == all) return true;
  const Vertex end = seq.back();
  // Unvisited vertices must stay reachable from the current end.
  const std::uint64_t rest = all & ~visited;
  const VertexSet reachable =
      g.component_of(end, VertexSet(g.n(), rest | bit(end)));
  if ((reachable.bits() & rest) != rest) return false;
  for (Vertex w : VertexSet(g.n(), g.row(end) & rest)) {
    seq.push_back(w);
    if (extend_hamiltonian(g, seq, visited | bit(w))) return true;
    seq.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Path> hamiltonian_path_exists(const Graph& g, int cap) {
  check_cap(g, cap);
  if (g.n() == 0 || !g.is_connected()) return std::nullopt;
  std::vector<Vertex> seq;
  for (Vertex start = 0; start < g.n(); ++start) {
    seq.assign(1, start);
    if (extend_hamiltonian(g, seq, bit(start))) return Path(g, seq);
  }
  return std::nullopt;
}

CoveringTreeAnswer answer_query(const Graph& g, const CoveringTreeQuery& query,
                                int cap) {
  CoveringTreeAnswer answer;
  switch (query.mode) {
    case CoveringMode::kExistence:
      answer.tree = find_k_ended_covering_tree(g, query.s, query.k, cap);
      if (answer.tree) answer.value = answer.tree->leaf_count();
      break;
    case CoveringMode::kMinimizeLeaves: {
      auto best = minimum_leaf_covering_tree(g, query.s, cap);
      answer.value = best.value;
      answer.tree = std::move(best.tree);
      break;
    }
    case CoveringMode::kMinimizeBranchVertices: {
      auto best = min_branch_covering_tree(g, query.s, cap);
      answer.value = best.value;
      answer.tree = std::move(best.tree);
      break;
    }
  }
  return answer;
}

}  // namespace kended
