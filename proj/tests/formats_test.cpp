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

#include "kended/formats.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "kended/families.hpp"
#include "oracles.hpp"

namespace kended {
namespace {

TEST(Graph6Test, EmptyGraphIsHeaderOnly) {
  EXPECT_EQ(emit_graph6(Graph(0)), "?");
  EXPECT_EQ(parse_graph6("?").n(), 0);
}

TEST(Graph6Test, KnownRecords) {
  // Star centered at 4: bits x(0,1) x(0,2) x(1,2) x(0,3) x(1,3) x(2,3) are 0,
  // then x(0,4)..x(3,4) are 1 -> 000000 111100 -> '?' '{'.
  EXPECT_EQ(emit_graph6(parse_graph6("D?{")), "D?{");
  Graph star = parse_graph6("D?{");
  EXPECT_EQ(star.degree(4), 4);
  EXPECT_EQ(star.edge_count(), 4);
  // Published examples: K4 is "C~", the 5-cycle 0-1-2-3-4 is "Dhc".
  EXPECT_EQ(emit_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(emit_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(emit_graph6(petersen_graph()).size(), 9U);
}

TEST(Graph6Test, K2RoundTrip) {
  Graph k2 = complete_graph(2);
  EXPECT_EQ(emit_graph6(k2), "A_");
  EXPECT_EQ(parse_graph6(emit_graph6(k2)), k2);
}

TEST(Graph6Test, RejectsMalformed) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6(" "), ParseError);      // size byte out of range
  EXPECT_THROW(parse_graph6("D?"), ParseError);     // truncated body
  EXPECT_THROW(parse_graph6("D?{?"), ParseError);   // trailing byte
  EXPECT_THROW(parse_graph6("D?\x7f"), ParseError); // body byte out of range
  EXPECT_THROW(parse_graph6("D?|"), ParseError);    // padding bit set
  EXPECT_THROW(parse_graph6("~???"), ParseError);   // long form
}

TEST(Graph6Test, ToleratesHeaderAndNewline) {
  EXPECT_EQ(parse_graph6(">>graph6<<D?{\n"), parse_graph6("D?{"));
}

TEST(Graph6Test, EmitRejectsLargeGraphs) {
  EXPECT_THROW(emit_graph6(Graph(63)), InvalidArgument);
  EXPECT_NO_THROW(emit_graph6(Graph(62)));
}

TEST(Graph6Test, StreamReadsOneRecordPerLine) {
  std::istringstream in("A_\n\nD?{\nC~\n");
  std::vector<Graph> got;
  EXPECT_EQ(read_graph6_stream(in, [&](Graph g) { got.push_back(std::move(g)); }), 3U);
  EXPECT_EQ(got[2], complete_graph(4));
}

TEST(EdgeListTest, ParsesPath) {
  Graph g = parse_edge_list("n 3\n0 1\n1 2");
  EXPECT_EQ(g, path_graph(3));
}

TEST(EdgeListTest, RejectsBadInput) {
  EXPECT_THROW(parse_edge_list("n 2\n0 0"), ParseError);
  EXPECT_THROW(parse_edge_list("n 3\n0 1\n1 0"), ParseError);
  EXPECT_THROW(parse_edge_list("n 3\n0 3"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1"), ParseError);
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("n 3\n0 1 2"), ParseError);
  EXPECT_THROW(parse_edge_list("n -1"), ParseError);
}

TEST(EdgeListTest, CommentsAndBlankLines) {
  EXPECT_EQ(parse_edge_list("# c4\n\nn 4\n0 1\n# mid\n1 2\n2 3\n3 0\n"), cycle_graph(4));
}

TEST(EdgeListTest, C4RoundTrip) {
  Graph c4 = cycle_graph(4);
  EXPECT_EQ(emit_edge_list(c4), "n 4\n0 1\n0 3\n1 2\n2 3\n");
  EXPECT_EQ(parse_edge_list(emit_edge_list(c4)), c4);
}

// Both formats round-trip every labeled graph on up to 5 vertices.
TEST(FormatProperty, ExhaustiveRoundTripUpToFive) {
  for (int n = 0; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      Graph g = oracle::graph_from_mask(n, mask);
      ASSERT_EQ(parse_graph6(emit_graph6(g)), g);
      ASSERT_EQ(parse_edge_list(emit_edge_list(g)), g);
    }
  }
}

TEST(FormatProperty, SampledRoundTripUpToEight) {
  Rng rng(99);
  for (int i = 0; i < 3000; ++i) {
    Graph g = random_gnp(6 + static_cast<int>(uniform_below(rng, 3)), unit_double(rng), rng);
    ASSERT_EQ(parse_graph6(emit_graph6(g)), g);
    ASSERT_EQ(parse_edge_list(emit_edge_list(g)), g);
  }
}

}  // namespace
}  // namespace kended
