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

#include "kended/invariants.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace kended {

namespace {

void check_subset(const Graph& g, const VertexSet& s) {
  if (s.host_n() != g.n()) {
    throw InvalidArgument("vertex set indexes " + std::to_string(s.host_n()) +
                          " vertices, graph has " + std::to_string(g.n()));
  }
}

// Branch and bound on the lowest candidate. Candidates with no neighbor among
// the remaining candidates are always taken.
struct MaxIndependentSearch {
  const Graph& g;
  int best = -1;
  std::uint64_t best_set = 0;

  void run(std::uint64_t cand, std::uint64_t chosen, int size) {
    if (size + std::popcount(cand) <= best) return;
    if (cand == 0) {
      best = size;
      best_set = chosen;
      return;
    }
    const Vertex v = std::countr_zero(cand);
    const std::uint64_t nb = g.row(v) & cand;
    run(cand & ~nb & ~bit(v), chosen | bit(v), size + 1);
    if (nb != 0) run(cand & ~bit(v), chosen, size);
  }
};

struct MaxIndependentEnumeration {
  const Graph& g;
  int target;
  std::size_t cap;
  int host_n;
  std::vector<VertexSet> out;

  void run(std::uint64_t cand, std::uint64_t chosen, int size) {
    if (size + std::popcount(cand) < target) return;
    if (size == target) {
      if (out.size() == cap) {
        throw CapExceeded("more than " + std::to_string(cap) +
                          " maximum independent subsets");
      }
      out.emplace_back(host_n, chosen);
      return;
    }
    const Vertex v = std::countr_zero(cand);
    run(cand & ~g.row(v) & ~bit(v), chosen | bit(v), size + 1);
    run(cand & ~bit(v), chosen, size);
  }
};

}  // namespace

ConnectivityValue ConnectivityValue::finite(int value) {
  if (value < 0) throw InvalidArgument("connectivity must be non-negative");
  return ConnectivityValue(false, value);
}

int ConnectivityValue::value() const {
  if (infinite_) throw InvalidArgument("connectivity is infinite");
  return value_;
}

std::strong_ordering ConnectivityValue::operator<=>(
    const ConnectivityValue& other) const {
  if (infinite_ || other.infinite_) return infinite_ <=> other.infinite_;
  return value_ <=> other.value_;
}

std::string ConnectivityValue::to_string() const {
  return infinite_ ? "infinity" : std::to_string(value_);
}

bool is_independent(const Graph& g, const VertexSet& set) {
  check_subset(g, set);
  for (Vertex v : set) {
    if ((g.row(v) & set.bits()) != 0) return false;
  }
  return true;
}

IndependenceWitness independence_number(const Graph& g, const VertexSet& s) {
  check_subset(g, s);
  MaxIndependentSearch search{g};
  search.run(s.bits(), 0, 0);
  return {search.best, VertexSet(g.n(), search.best_set)};
}

std::vector<VertexSet> enumerate_maximum_independent_subsets(
    const Graph& g, const VertexSet& s, std::size_t cap) {
  const int alpha = independence_number(g, s).size;
  MaxIndependentEnumeration e{g, alpha, cap, g.n(), {}};
  e.run(s.bits(), 0, 0);
  return std::move(e.out);
}

int local_connectivity(const Graph& g, Vertex x, Vertex y) {
  const int n = g.n();
  if (x < 0 || y < 0 || x >= n || y >= n) {
    throw InvalidArgument("local connectivity vertex out of range");
  }
  if (x == y) throw InvalidArgument("local connectivity needs x != y");

  // Node 2v is the entry of v, 2v+1 its exit. Interior vertices carry one
  // unit from entry to exit; every edge is a pair of unit arcs exit -> entry.
  const int nodes = 2 * n;
  std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
  auto arc = [&](int a, int b) -> int& {
    return cap[static_cast<std::size_t>(a) * nodes + b];
  };
  for (Vertex v = 0; v < n; ++v) {
    if (v != x && v != y) arc(2 * v, 2 * v + 1) = 1;
    for (Vertex w : g.neighbors(v)) arc(2 * v + 1, 2 * w) = 1;
  }
  const int source = 2 * x + 1;
  const int sink = 2 * y;

  int flow = 0;
  std::vector<int> prev(static_cast<std::size_t>(nodes));
  for (;;) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && prev[sink] < 0) {
      const int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < nodes; ++b) {
        if (prev[b] < 0 && arc(a, b) > 0) {
          prev[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (prev[sink] < 0) break;
    for (int b = sink; b != source; b = prev[b]) {
      --arc(prev[b], b);
      ++arc(b, prev[b]);
    }
    ++flow;
  }
  return flow;
}

SetConnectivity set_connectivity_detail(const Graph& g, const VertexSet& s) {
  check_subset(g, s);
  SetConnectivity out;
  const std::vector<Vertex> members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto value =
          ConnectivityValue::finite(local_connectivity(g, members[i], members[j]));
      if (value < out.value) {
        out.value = value;
        out.minimizing_pair = {members[i], members[j]};
      }
    }
  }
  return out;
}

ConnectivityValue set_connectivity(const Graph& g, const VertexSet& s) {
  return set_connectivity_detail(g, s).value;
}

bool covering_hypothesis_holds(int alpha, int k, ConnectivityValue kappa) {
  if (kappa.is_infinite()) return true;
  return static_cast<long long>(alpha) <=
         static_cast<long long>(k) + kappa.value() - 1;
}

std::optional<long long> residual_bound(int alpha, ConnectivityValue kappa, int k) {
  if (kappa.is_infinite()) return std::nullopt;
  return static_cast<long long>(alpha) - kappa.value() - k + 1;
}

}  // namespace kended
