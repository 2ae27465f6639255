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

#ifndef KENDED_GRAPH_HPP_
#define KENDED_GRAPH_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kended {

using Vertex = int;

// Every vertex set is one machine word.
inline constexpr int kMaxVertices = 64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments or inputs that violate an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine was asked to run on an instance above its cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A property that a proved statement guarantees failed to hold. Always a bug.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

constexpr std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

// A subset of the vertices 0..host_n-1 of some graph.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  VertexSet() = default;
  VertexSet(int host_n, std::uint64_t bits);
  VertexSet(int host_n, std::initializer_list<Vertex> members);
  VertexSet(int host_n, std::span<const Vertex> members);

  static VertexSet empty_of(int host_n) { return VertexSet(host_n, 0); }
  static VertexSet all(int host_n) { return VertexSet(host_n, low_mask(host_n)); }

  int host_n() const { return host_n_; }
  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(Vertex v) const {
    return v >= 0 && v < host_n_ && ((bits_ >> v) & 1U) != 0;
  }
  // Smallest member; the set must be nonempty.
  Vertex first() const;

  void insert(Vertex v);
  void erase(Vertex v);
  VertexSet with(Vertex v) const;
  VertexSet without(Vertex v) const;

  bool is_subset_of(const VertexSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(const VertexSet& other) const {
    return (bits_ & other.bits_) != 0;
  }

  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  // Set difference.
  VertexSet operator-(const VertexSet& other) const;

  std::vector<Vertex> members() const;
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  bool operator==(const VertexSet&) const = default;

  // Lexicographic order on the sorted member lists.
  static bool lex_less(const VertexSet& a, const VertexSet& b);

  std::string to_string() const;

 private:
  void check_same_host(const VertexSet& other) const;

  int host_n_ = 0;
  std::uint64_t bits_ = 0;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  // Normalizes so that u < v.
  static Edge of(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  auto operator<=>(const Edge&) const = default;
};

// Finite simple undirected graph on vertices 0..n-1, stored as bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws InvalidArgument on self-loops, duplicates, or labels out of range.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::all(n_); }

  bool adjacent(Vertex u, Vertex v) const {
    return ((rows_[u] >> v) & 1U) != 0;
  }
  std::uint64_t row(Vertex v) const { return rows_[v]; }
  VertexSet neighbors(Vertex v) const { return VertexSet(n_, rows_[v]); }
  int degree(Vertex v) const { return std::popcount(rows_[v]); }

  // Construction only. Rejects self-loops and duplicate edges.
  void add_edge(Vertex u, Vertex v);

  // Edges sorted lexicographically, u < v.
  std::vector<Edge> edges() const;

  bool is_connected() const;
  // Vertices reachable from `source` inside `within`.
  VertexSet component_of(Vertex source, const VertexSet& within) const;
  // True when every vertex of `set` lies in one component of G.
  bool in_one_component(const VertexSet& set) const;

  // Symmetric, irreflexive, no stray bits. Throws InternalInvariantError.
  void check_invariants() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Sequence of distinct vertices with consecutive ones adjacent.
class Path {
 public:
  Path() = default;
  // Validates against `g`; throws InvalidArgument.
  Path(const Graph& g, std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  const VertexSet& vertex_set() const { return set_; }

  bool operator==(const Path& other) const {
    return vertices_ == other.vertices_;
  }

 private:
  std::vector<Vertex> vertices_;
  VertexSet set_;
};

// A subtree of a host graph.
class Tree {
 public:
  Tree() = default;
  // Validates against `g`; throws InvalidArgument when the edges do not form
  // a tree on `vertices` inside `g`.
  Tree(const Graph& g, VertexSet vertices, std::vector<Edge> edges);

  static Tree single(const Graph& g, Vertex v);
  static Tree from_path(const Graph& g, const Path& path);

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_count() const { return vertices_.size(); }
  int degree(Vertex v) const { return degree_.empty() ? 0 : degree_[v]; }

  VertexSet leaves() const;
  VertexSet branch_vertices() const;
  int leaf_count() const { return leaves().size(); }
  int branch_count() const { return branch_vertices().size(); }

  // At most k leaves. A one-vertex tree has no leaves and qualifies for all k.
  bool is_k_ended(int k) const { return leaf_count() <= k; }
  bool covers(const VertexSet& s) const { return s.is_subset_of(vertices_); }

  bool operator==(const Tree& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  VertexSet vertices_;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
};

// Checks the tree axioms from scratch. Returns an empty string when valid,
// else a description of the first violation.
std::string audit_tree(const Graph& g, const VertexSet& vertices,
                       std::span<const Edge> edges);

VertexSet leaves(const Tree& t);
VertexSet branch_vertices(const Tree& t);

}  // namespace kended

#endif  // KENDED_GRAPH_HPP_
