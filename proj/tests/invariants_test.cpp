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

#include <gtest/gtest.h>

#include "kended/families.hpp"
#include "oracles.hpp"

namespace kended {
namespace {

TEST(ConnectivityValueTest, InfinityOrdersLast) {
  EXPECT_LT(ConnectivityValue::finite(100), ConnectivityValue::infinite());
  EXPECT_LT(ConnectivityValue::finite(1), ConnectivityValue::finite(2));
  EXPECT_EQ(ConnectivityValue::infinite(), ConnectivityValue::infinite());
  EXPECT_EQ(ConnectivityValue::infinite().to_string(), "infinity");
  EXPECT_EQ(ConnectivityValue::finite(3).to_string(), "3");
  EXPECT_THROW(ConnectivityValue::infinite().value(), InvalidArgument);
  EXPECT_THROW(ConnectivityValue::finite(-1), InvalidArgument);
}

TEST(IndependenceTest, C5) {
  Graph g = cycle_graph(5);
  IndependenceWitness w = independence_number(g, g.vertices());
  EXPECT_EQ(w.size, 2);
  EXPECT_EQ(w.witness.members(), (std::vector<Vertex>{0, 2}));
  EXPECT_TRUE(is_independent(g, w.witness));
}

TEST(IndependenceTest, EmptySet) {
  Graph g = complete_graph(3);
  IndependenceWitness w = independence_number(g, VertexSet::empty_of(3));
  EXPECT_EQ(w.size, 0);
  EXPECT_TRUE(w.witness.empty());
}

TEST(IndependenceTest, SubsetOnly) {
  Graph g = path_graph(5);
  EXPECT_EQ(independence_number(g, VertexSet(5, {1, 2, 3})).size, 2);
  EXPECT_EQ(independence_number(g, g.vertices()).size, 3);
}

TEST(IndependenceTest, Petersen) {
  Graph g = petersen_graph();
  EXPECT_EQ(independence_number(g, g.vertices()).size, 4);
}

TEST(MaximumSubsetsTest, C4) {
  Graph g = cycle_graph(4);
  std::vector<VertexSet> all = enumerate_maximum_independent_subsets(g, g.vertices());
  ASSERT_EQ(all.size(), 2U);
  EXPECT_EQ(all[0].members(), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(all[1].members(), (std::vector<Vertex>{1, 3}));
}

TEST(MaximumSubsetsTest, CapThrows) {
  Graph g(12);  // edgeless: the whole set is the only maximum subset
  Graph m(8);
  for (Vertex v = 0; v < 8; v += 2) m.add_edge(v, v + 1);
  // 4 disjoint edges: 2^4 maximum independent sets.
  EXPECT_EQ(enumerate_maximum_independent_subsets(m, m.vertices()).size(), 16U);
  EXPECT_THROW(enumerate_maximum_independent_subsets(m, m.vertices(), 15), CapExceeded);
  EXPECT_EQ(enumerate_maximum_independent_subsets(g, g.vertices()).size(), 1U);
}

TEST(LocalConnectivityTest, Examples) {
  EXPECT_EQ(local_connectivity(complete_graph(4), 0, 3), 3);
  EXPECT_EQ(local_connectivity(cycle_graph(6), 0, 3), 2);
  EXPECT_EQ(local_connectivity(path_graph(4), 0, 3), 1);
  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  EXPECT_EQ(local_connectivity(two, 0, 3), 0);
  EXPECT_THROW(local_connectivity(two, 1, 1), InvalidArgument);
}

TEST(SetConnectivityTest, Examples) {
  Graph k4 = complete_graph(4);
  EXPECT_EQ(set_connectivity(k4, k4.vertices()), ConnectivityValue::finite(3));
  EXPECT_TRUE(set_connectivity(k4, VertexSet(4, {2})).is_infinite());
  EXPECT_TRUE(set_connectivity(k4, VertexSet::empty_of(4)).is_infinite());

  Graph star = star_graph(3);
  SetConnectivity d = set_connectivity_detail(star, VertexSet(4, {1, 2, 3}));
  EXPECT_EQ(d.value, ConnectivityValue::finite(1));
  ASSERT_TRUE(d.minimizing_pair.has_value());
  EXPECT_EQ(*d.minimizing_pair, (std::pair<Vertex, Vertex>{1, 2}));

  Graph c6 = cycle_graph(6);
  EXPECT_EQ(set_connectivity(c6, VertexSet(6, {0, 3})), ConnectivityValue::finite(2));
}

TEST(SetConnectivityTest, SharpnessFamily) {
  for (int m = 1; m <= 3; ++m) {
    for (int k = 1; k <= 3; ++k) {
      FamilyGraph fg = make_family(GraphFamilySpec::sharpness(m, k));
      EXPECT_EQ(independence_number(fg.graph, *fg.distinguished).size, m + k);
      EXPECT_EQ(set_connectivity(fg.graph, *fg.distinguished), ConnectivityValue::finite(m));
    }
  }
}

TEST(HypothesisTest, Predicates) {
  EXPECT_TRUE(covering_hypothesis_holds(3, 2, ConnectivityValue::finite(2)));
  EXPECT_FALSE(covering_hypothesis_holds(4, 2, ConnectivityValue::finite(2)));
  EXPECT_TRUE(covering_hypothesis_holds(50, 2, ConnectivityValue::infinite()));
  EXPECT_EQ(residual_bound(5, ConnectivityValue::finite(1), 2), 3);
  EXPECT_FALSE(residual_bound(5, ConnectivityValue::infinite(), 2).has_value());
}

// Oracle agreement over every connected graph on up to 5 vertices.
TEST(InvariantsProperty, ExhaustiveAgainstOracles) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected_labeled_graphs(n)) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        VertexSet set(n, s);
        IndependenceWitness w = independence_number(g, set);
        ASSERT_EQ(w.size, oracle::independence_by_subsets(g, s));
        ASSERT_TRUE(is_independent(g, w.witness));
        ASSERT_TRUE(w.witness.is_subset_of(set));
        std::vector<VertexSet> subsets = enumerate_maximum_independent_subsets(g, set);
        std::vector<std::uint64_t> expected = oracle::maximum_independent_by_subsets(g, s);
        ASSERT_EQ(subsets.size(), expected.size());
        for (std::size_t i = 0; i < subsets.size(); ++i) ASSERT_EQ(subsets[i].bits(), expected[i]);
      }
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
          ASSERT_EQ(local_connectivity(g, x, y), oracle::local_connectivity_by_paths(g, x, y));
        }
      }
    }
  }
}

// The global connectivity via pairwise minimum agrees with the cut oracle
// for non-complete graphs.
TEST(InvariantsProperty, RandomAgainstOracles) {
  Rng rng(424242);
  int checked = 0;
  while (checked < 300) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 6));
    Graph g = random_gnp(n, 0.2 + 0.6 * unit_double(rng), rng);
    if (!g.is_connected()) continue;
    ++checked;
    const std::uint64_t s = rng() & low_mask(n);
    ASSERT_EQ(independence_number(g, VertexSet(n, s)).size, oracle::independence_by_subsets(g, s));
    const Vertex x = static_cast<Vertex>(uniform_below(rng, n));
    const Vertex y = static_cast<Vertex>((x + 1 + uniform_below(rng, n - 1)) % n);
    ASSERT_EQ(local_connectivity(g, x, y), oracle::local_connectivity_by_paths(g, x, y));
    if (g.edge_count() < n * (n - 1) / 2) {
      ASSERT_EQ(set_connectivity(g, g.vertices()).value(), oracle::vertex_connectivity_by_cuts(g));
    }
  }
}

}  // namespace
}  // namespace kended
