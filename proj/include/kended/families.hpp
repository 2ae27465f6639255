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

#ifndef KENDED_FAMILIES_HPP_
#define KENDED_FAMILIES_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kended/graph.hpp"

namespace kended {

enum class Family {
  kComplete,
  kCycle,
  kPath,
  kCompleteBipartite,
  kPetersen,
  kRandomGnp,
};

// Parameters of a named graph family. Unused fields are ignored.
struct GraphFamilySpec {
  Family family = Family::kComplete;
  int n = 0;
  // Part sizes for complete-bipartite: A = 0..a-1, B = a..a+b-1.
  int a = 0;
  int b = 0;
  double p = 0.0;
  std::uint64_t seed = 0;

  // K_{m,m+k}.
  static GraphFamilySpec sharpness(int m, int k);
};

struct FamilyGraph {
  Graph graph;
  // Part B for complete-bipartite families.
  std::optional<VertexSet> distinguished;
};

FamilyGraph make_family(const GraphFamilySpec& spec);

// Accepts "complete n", "cycle n", "path n", "bipartite a b", "kmm m k"
// (= K_{m,m+k}), "petersen", and "gnp n p seed".
GraphFamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const GraphFamilySpec& spec);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph petersen_graph();
Graph star_graph(int leaves);

using Rng = std::mt19937_64;

// Uniform double in [0, 1) from the top 53 bits. Stable across standard
// library implementations, unlike std::uniform_real_distribution.
inline double unit_double(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection; stable across implementations.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Each pair (i < j) in lexicographic order is an edge with probability p.
Graph random_gnp(int n, double p, Rng& rng);

inline constexpr int kDefaultEnumerationCap = 6;

// Yields every connected labeled graph on n vertices once, ordered by the
// edge bitmask whose bit e is the e-th pair (i < j) in lexicographic order.
class ConnectedGraphEnumerator {
 public:
  explicit ConnectedGraphEnumerator(int n, int cap = kDefaultEnumerationCap);
  std::optional<Graph> next();

 private:
  int n_;
  std::vector<Edge> pairs_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_ = 0;
};

std::vector<Graph> enumerate_connected_labeled_graphs(
    int n, int cap = kDefaultEnumerationCap);

}  // namespace kended

#endif  // KENDED_FAMILIES_HPP_
