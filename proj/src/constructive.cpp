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

#include "kended/constructive.hpp"

#include <string>
#include <unordered_map>

namespace kended {

namespace {

void require_instance(const Graph& g, const VertexSet& s) {
  if (s.host_n() != g.n()) throw InvalidArgument("vertex set host differs from graph");
  if (!g.is_connected()) throw InvalidArgument("graph is not connected");
}

// Longer wins; equal lengths compare lexicographically.
bool better_sequence(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

class PathScan {
 public:
  PathScan(const Graph& g, const VertexSet& s, long long target)
      : g_(g), s_(s), target_(target) {}

  void run() {
    for (Vertex start = 0; start < g_.n(); ++start) {
      seq_.assign(1, start);
      visit(bit(start));
    }
  }

  std::optional<std::vector<Vertex>> covering;
  std::optional<std::vector<Vertex>> bounded;

 private:
  void visit(std::uint64_t used) {
    if ((s_.bits() & ~used) == 0) {
      if (!covering || better_sequence(seq_, *covering)) covering = seq_;
    } else if (!covering && residual(used) <= target_) {
      if (!bounded || better_sequence(seq_, *bounded)) bounded = seq_;
    }
    for (Vertex w : VertexSet(g_.n(), g_.row(seq_.back()) & ~used)) {
      seq_.push_back(w);
      visit(used | bit(w));
      seq_.pop_back();
    }
  }

  int residual(std::uint64_t used) {
    const std::uint64_t rest = s_.bits() & ~used;
    auto [it, fresh] = memo_.try_emplace(rest, 0);
    if (fresh) it->second = independence_number(g_, VertexSet(g_.n(), rest)).size;
    return it->second;
  }

  const Graph& g_;
  VertexSet s_;
  long long target_;
  std::vector<Vertex> seq_;
  std::unordered_map<std::uint64_t, int> memo_;
};

void attachment_walk(const Graph& g, std::uint64_t tree_bits,
                     std::vector<Vertex>& seq, std::uint64_t used,
                     const std::function<void(const std::vector<Vertex>&)>& visit) {
  const std::uint64_t row = g.row(seq.back());
  for (Vertex t : VertexSet(g.n(), row & tree_bits)) {
    seq.push_back(t);
    visit(seq);
    seq.pop_back();
  }
  for (Vertex w : VertexSet(g.n(), row & ~tree_bits & ~used)) {
    seq.push_back(w);
    attachment_walk(g, tree_bits, seq, used | bit(w), visit);
    seq.pop_back();
  }
}

}  // namespace

BasePathResult base_path(const Graph& g, const VertexSet& s,
                         const ConstructOptions& options) {
  require_instance(g, s);
  if (s.empty()) throw InvalidArgument("base path needs nonempty S");
  if (g.n() > options.cap) {
    throw CapExceeded("path search on n = " + std::to_string(g.n()) +
                      " exceeds cap " + std::to_string(options.cap));
  }
  if (s.size() == 1) return {Path(g, {s.first()}), BasePathKind::kCoversS, 0};

  const int alpha = independence_number(g, s).size;
  const ConnectivityValue kappa = set_connectivity(g, s);
  PathScan scan(g, s, static_cast<long long>(alpha) - kappa.value() - 1);
  scan.run();
  if (scan.covering) return {Path(g, *scan.covering), BasePathKind::kCoversS, 0};
  if (scan.bounded) {
    Path path(g, *scan.bounded);
    const int residual = independence_number(g, s - path.vertex_set()).size;
    return {std::move(path), BasePathKind::kResidualBound, residual};
  }
  throw InternalInvariantError(
      "no path covers S or meets the residual bound alpha(S) - kappa(S) - 1");
}

void for_each_attachment_path(
    const Graph& g, const Tree& tree, const VertexSet& sources,
    const std::function<void(const std::vector<Vertex>&)>& visit) {
  const std::uint64_t tree_bits = tree.vertices().bits();
  std::vector<Vertex> seq;
  for (Vertex s : sources) {
    if ((tree_bits >> s) & 1U) continue;
    seq.assign(1, s);
    attachment_walk(g, tree_bits, seq, bit(s), visit);
  }
}

AttachmentPath maximal_attachment_path(const Graph& g, const Tree& tree,
                                       const VertexSet& s, std::size_t subset_cap) {
  if (s.host_n() != g.n()) throw InvalidArgument("vertex set host differs from graph");
  const VertexSet rest = s - tree.vertices();
  if (rest.empty()) throw InvalidArgument("S already lies in the tree");

  std::vector<VertexSet> subsets =
      enumerate_maximum_independent_subsets(g, rest, subset_cap);
  VertexSet sources = VertexSet::empty_of(g.n());
  for (const VertexSet& si : subsets) sources = sources | si;

  std::optional<std::vector<Vertex>> best;
  for_each_attachment_path(g, tree, sources, [&](const std::vector<Vertex>& seq) {
    if (!best || better_sequence(seq, *best)) best = seq;
  });
  if (!best) throw InvalidArgument("no path joins S - V(T) to the tree");

  Path path(g, *best);
  for (const VertexSet& si : subsets) {
    if (!si.intersects(path.vertex_set())) {
      throw InternalInvariantError("longest attachment path misses maximum subset " +
                                   si.to_string());
    }
  }
  return {std::move(path), best->front(), std::move(subsets)};
}

Tree augment(const Graph& g, const Tree& tree, const Path& attachment) {
  const auto& seq = attachment.vertices();
  if (!tree.vertices().contains(attachment.back())) {
    throw InvalidArgument("attachment path does not end in the tree");
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (tree.vertices().contains(seq[i])) {
      throw InvalidArgument("attachment path meets the tree before its end");
    }
  }
  std::vector<Edge> edges = tree.edges();
  for (std::size_t i = 1; i < seq.size(); ++i) {
    edges.push_back(Edge::of(seq[i - 1], seq[i]));
  }
  Tree out(g, tree.vertices() | attachment.vertex_set(), std::move(edges));
  // A one-vertex tree contributes two leaves at once when it becomes a path.
  const int before = std::max(tree.leaf_count(), 1);
  if (out.leaf_count() > before + 1) {
    throw InternalInvariantError("augmentation added more than one leaf");
  }
  return out;
}

ConstructionOutcome construct_k_ended_tree(const Graph& g, const VertexSet& s, int k,
                                           const ConstructOptions& options) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  require_instance(g, s);

  ConstructionOutcome out;
  out.k = k;
  if (s.size() <= 1) {
    if (g.n() == 0) throw InvalidArgument("graph has no vertices");
    const Vertex v = s.empty() ? 0 : s.first();
    out.tree = Tree::single(g, v);
    out.alpha = s.size();
    out.trace.push_back(Path(g, {v}));
    out.residual_history.push_back(0);
    return out;
  }

  out.alpha = independence_number(g, s).size;
  out.kappa = set_connectivity(g, s);
  out.bound = residual_bound(out.alpha, out.kappa, k);

  BasePathResult base = base_path(g, s, options);
  AugmentationState state{Tree::from_path(g, base.path), 2, base.residual_alpha,
                          {base.path}};
  out.residual_history.push_back(state.residual_alpha);

  while (!state.tree.covers(s) && state.budget < k) {
    AttachmentPath step = maximal_attachment_path(g, state.tree, s, options.subset_cap);
    Tree next = augment(g, state.tree, step.path);
    if (next.leaf_count() > state.budget + 1) {
      throw InternalInvariantError("augmented tree exceeds its leaf budget");
    }
    const int residual = independence_number(g, s - next.vertices()).size;
    if (residual > state.residual_alpha - 1) {
      throw InternalInvariantError(
          "residual independence number did not drop after augmentation");
    }
    state.tree = std::move(next);
    state.budget += 1;
    state.residual_alpha = residual;
    state.trace.push_back(std::move(step.path));
    out.residual_history.push_back(residual);
  }

  out.residual_alpha = state.residual_alpha;
  out.trace = std::move(state.trace);
  if (state.tree.covers(s)) {
    out.kind = OutcomeKind::kCovering;
  } else {
    out.kind = OutcomeKind::kResidualBound;
    if (state.residual_alpha > *out.bound) {
      throw InternalInvariantError("residual independence number exceeds bound");
    }
  }
  if (state.tree.leaf_count() > k) {
    throw InternalInvariantError("constructed tree has more than k leaves");
  }
  out.tree = std::move(state.tree);
  return out;
}

}  // namespace kended
