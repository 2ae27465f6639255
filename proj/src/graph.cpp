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

#include "kended/graph.hpp"

#include <algorithm>
#include <sstream>

namespace kended {

namespace {

void check_host(int host_n) {
  if (host_n < 0 || host_n > kMaxVertices) {
    throw InvalidArgument("vertex count " + std::to_string(host_n) +
                          " outside [0, 64]");
  }
}

void check_member(int host_n, Vertex v) {
  if (v < 0 || v >= host_n) {
    throw InvalidArgument("vertex " + std::to_string(v) +
                          " outside 0.." + std::to_string(host_n - 1));
  }
}

}  // namespace

VertexSet::VertexSet(int host_n, std::uint64_t bits)
    : host_n_(host_n), bits_(bits) {
  check_host(host_n);
  if ((bits & ~low_mask(host_n)) != 0) {
    throw InvalidArgument("vertex set has members beyond host range");
  }
}

VertexSet::VertexSet(int host_n, std::initializer_list<Vertex> members)
    : VertexSet(host_n, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(int host_n, std::span<const Vertex> members)
    : host_n_(host_n) {
  check_host(host_n);
  for (Vertex v : members) insert(v);
}

Vertex VertexSet::first() const {
  if (bits_ == 0) throw InvalidArgument("first() of an empty vertex set");
  return std::countr_zero(bits_);
}

void VertexSet::insert(Vertex v) {
  check_member(host_n_, v);
  bits_ |= bit(v);
}

void VertexSet::erase(Vertex v) {
  check_member(host_n_, v);
  bits_ &= ~bit(v);
}

VertexSet VertexSet::with(Vertex v) const {
  VertexSet out = *this;
  out.insert(v);
  return out;
}

VertexSet VertexSet::without(Vertex v) const {
  VertexSet out = *this;
  out.erase(v);
  return out;
}

void VertexSet::check_same_host(const VertexSet& other) const {
  if (host_n_ != other.host_n_) {
    throw InvalidArgument("vertex sets over different hosts");
  }
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  check_same_host(other);
  return VertexSet(host_n_, bits_ | other.bits_);
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  check_same_host(other);
  return VertexSet(host_n_, bits_ & other.bits_);
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
  check_same_host(other);
  return VertexSet(host_n_, bits_ & ~other.bits_);
}

std::vector<Vertex> VertexSet::members() const {
  return std::vector<Vertex>(begin(), end());
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> ma = a.members();
  std::vector<Vertex> mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_member = true;
  for (Vertex v : *this) {
    if (!first_member) os << ',';
    os << v;
    first_member = false;
  }
  os << '}';
  return os.str();
}

Graph::Graph(int n) : n_(n) {
  check_host(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::check_vertex(Vertex v) const { check_member(n_, v); }

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  }
  if (adjacent(u, v)) {
    throw InvalidArgument("duplicate edge " + std::to_string(u) + " " +
                          std::to_string(v));
  }
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (std::uint64_t r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : VertexSet(n_, rows_[u] & ~low_mask(u + 1))) {
      out.push_back({u, v});
    }
  }
  return out;
}

VertexSet Graph::component_of(Vertex source, const VertexSet& within) const {
  check_vertex(source);
  std::uint64_t allowed = within.bits();
  std::uint64_t seen = bit(source) & allowed;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (Vertex v : VertexSet(n_, frontier)) next |= rows_[v];
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return VertexSet(n_, seen);
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  return component_of(0, vertices()).size() == n_;
}

bool Graph::in_one_component(const VertexSet& set) const {
  if (set.size() <= 1) return true;
  return set.is_subset_of(component_of(set.first(), vertices()));
}

void Graph::check_invariants() const {
  if (static_cast<int>(rows_.size()) != n_) {
    throw InternalInvariantError("row count differs from vertex count");
  }
  for (Vertex u = 0; u < n_; ++u) {
    if ((rows_[u] & ~low_mask(n_)) != 0) {
      throw InternalInvariantError("adjacency bits beyond vertex range");
    }
    if (adjacent(u, u)) throw InternalInvariantError("self-loop in adjacency");
    for (Vertex v : VertexSet(n_, rows_[u])) {
      if (!adjacent(v, u)) {
        throw InternalInvariantError("asymmetric adjacency");
      }
    }
  }
}

Path::Path(const Graph& g, std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)), set_(VertexSet::empty_of(g.n())) {
  if (vertices_.empty()) throw InvalidArgument("path must have a vertex");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    Vertex v = vertices_[i];
    check_member(g.n(), v);
    if (set_.contains(v)) {
      throw InvalidArgument("path repeats vertex " + std::to_string(v));
    }
    if (i > 0 && !g.adjacent(vertices_[i - 1], v)) {
      throw InvalidArgument("path step " + std::to_string(vertices_[i - 1]) +
                            "-" + std::to_string(v) + " is not an edge");
    }
    set_.insert(v);
  }
}

std::string audit_tree(const Graph& g, const VertexSet& vertices,
                       std::span<const Edge> edges) {
  if (vertices.host_n() != g.n()) return "vertex set host differs from graph";
  if (vertices.empty()) return "tree has no vertices";
  if (static_cast<int>(edges.size()) != vertices.size() - 1) {
    return "edge count " + std::to_string(edges.size()) +
           " is not vertex count - 1";
  }
  // Union-find over the tree vertices; a cycle shows up as a merge of two
  // vertices already joined.
  std::vector<Vertex> parent(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : edges) {
    if (!vertices.contains(e.u) || !vertices.contains(e.v)) {
      return "edge endpoint outside tree vertices";
    }
    if (e.u == e.v || !g.adjacent(e.u, e.v)) {
      return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
             " is not a graph edge";
    }
    Vertex a = find(e.u);
    Vertex b = find(e.v);
    if (a == b) return "edges contain a cycle";
    parent[a] = b;
  }
  return {};
}

Tree::Tree(const Graph& g, VertexSet vertices, std::vector<Edge> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  for (Edge& e : edges_) e = Edge::of(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());
  if (std::string why = audit_tree(g, vertices_, edges_); !why.empty()) {
    throw InvalidArgument("invalid tree: " + why);
  }
  degree_.assign(static_cast<std::size_t>(g.n()), 0);
  for (const Edge& e : edges_) {
    ++degree_[e.u];
    ++degree_[e.v];
  }
}

Tree Tree::single(const Graph& g, Vertex v) {
  return Tree(g, VertexSet(g.n(), {v}), {});
}

Tree Tree::from_path(const Graph& g, const Path& path) {
  std::vector<Edge> edges;
  const auto& seq = path.vertices();
  for (std::size_t i = 1; i < seq.size(); ++i) {
    edges.push_back(Edge::of(seq[i - 1], seq[i]));
  }
  return Tree(g, path.vertex_set(), std::move(edges));
}

VertexSet Tree::leaves() const {
  VertexSet out = VertexSet::empty_of(vertices_.host_n());
  for (Vertex v : vertices_) {
    if (degree_[v] == 1) out.insert(v);
  }
  return out;
}

VertexSet Tree::branch_vertices() const {
  VertexSet out = VertexSet::empty_of(vertices_.host_n());
  for (Vertex v : vertices_) {
    if (degree_[v] >= 3) out.insert(v);
  }
  return out;
}

VertexSet leaves(const Tree& t) { return t.leaves(); }
VertexSet branch_vertices(const Tree& t) { return t.branch_vertices(); }

}  // namespace kended
