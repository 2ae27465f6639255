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

#ifndef KENDED_INVARIANTS_HPP_
#define KENDED_INVARIANTS_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kended/graph.hpp"

namespace kended {

// A connectivity value: a non-negative integer or Infinite. Infinite compares
// greater than every integer and only arises for vertex sets of size <= 1.
class ConnectivityValue {
 public:
  static ConnectivityValue infinite() { return ConnectivityValue(true, 0); }
  static ConnectivityValue finite(int value);

  bool is_infinite() const { return infinite_; }
  // Throws InvalidArgument when infinite.
  int value() const;

  std::strong_ordering operator<=>(const ConnectivityValue& other) const;
  bool operator==(const ConnectivityValue& other) const = default;

  std::string to_string() const;

 private:
  ConnectivityValue(bool infinite, int value) : infinite_(infinite), value_(value) {}

  bool infinite_;
  int value_;
};

struct IndependenceWitness {
  int size = 0;
  VertexSet witness;
};

bool is_independent(const Graph& g, const VertexSet& set);

// Exact maximum size of a G-independent subset of S, with one maximizer.
IndependenceWitness independence_number(const Graph& g, const VertexSet& s);

inline constexpr std::size_t kDefaultSubsetCap = 1'000'000;

// Every maximum independent subset of S, ordered lexicographically by sorted
// member list. Throws CapExceeded past `cap` results rather than truncating.
std::vector<VertexSet> enumerate_maximum_independent_subsets(
    const Graph& g, const VertexSet& s, std::size_t cap = kDefaultSubsetCap);

// Maximum number of internally disjoint x-y paths (Menger), by unit-capacity
// max flow on the vertex-split digraph. A direct edge counts as one path.
int local_connectivity(const Graph& g, Vertex x, Vertex y);

struct SetConnectivity {
  ConnectivityValue value = ConnectivityValue::infinite();
  // Lexicographically first pair attaining the minimum; absent for |S| <= 1.
  std::optional<std::pair<Vertex, Vertex>> minimizing_pair;
};

SetConnectivity set_connectivity_detail(const Graph& g, const VertexSet& s);
ConnectivityValue set_connectivity(const Graph& g, const VertexSet& s);

// alpha <= k + kappa - 1, automatically true for infinite kappa.
bool covering_hypothesis_holds(int alpha, int k, ConnectivityValue kappa);

// alpha - kappa - k + 1; absent for infinite kappa.
std::optional<long long> residual_bound(int alpha, ConnectivityValue kappa, int k);

}  // namespace kended

#endif  // KENDED_INVARIANTS_HPP_
