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

#include "kended/families.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace kended {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

long long to_integer(const std::string& word) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError("expected an integer, got '" + word + "'");
  }
  return value;
}

double to_real(const std::string& word) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(word, &used);
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + word + "'");
  }
  if (used != word.size()) throw ParseError("expected a number, got '" + word + "'");
  return value;
}

int to_count(const std::string& word) {
  long long v = to_integer(word);
  if (v < 0 || v > kMaxVertices) {
    throw ParseError("count '" + word + "' outside [0, 64]");
  }
  return static_cast<int>(v);
}

}  // namespace

GraphFamilySpec GraphFamilySpec::sharpness(int m, int k) {
  GraphFamilySpec spec;
  spec.family = Family::kCompleteBipartite;
  spec.a = m;
  spec.b = m + k;
  return spec;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  require(n >= 1, "path needs at least 1 vertex");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_bipartite_graph(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite needs two positive parts");
  require(a + b <= kMaxVertices, "complete bipartite graph too large");
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

Graph star_graph(int leaves) { return complete_bipartite_graph(1, leaves); }

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform_below(0)");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Graph random_gnp(int n, double p, Rng& rng) {
  require(n >= 0 && n <= kMaxVertices, "gnp vertex count outside [0, 64]");
  require(p >= 0.0 && p <= 1.0 && !std::isnan(p), "gnp p outside [0, 1]");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit_double(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

FamilyGraph make_family(const GraphFamilySpec& spec) {
  FamilyGraph out;
  switch (spec.family) {
    case Family::kComplete:
      require(spec.n >= 1, "complete graph needs at least 1 vertex");
      out.graph = complete_graph(spec.n);
      break;
    case Family::kCycle:
      out.graph = cycle_graph(spec.n);
      break;
    case Family::kPath:
      out.graph = path_graph(spec.n);
      break;
    case Family::kCompleteBipartite: {
      out.graph = complete_bipartite_graph(spec.a, spec.b);
      out.distinguished =
          VertexSet(spec.a + spec.b, low_mask(spec.a + spec.b) & ~low_mask(spec.a));
      break;
    }
    case Family::kPetersen:
      out.graph = petersen_graph();
      break;
    case Family::kRandomGnp: {
      Rng rng(spec.seed);
      out.graph = random_gnp(spec.n, spec.p, rng);
      break;
    }
  }
  out.graph.check_invariants();
  return out;
}

GraphFamilySpec parse_family_spec(std::string_view text) {
  std::vector<std::string> w = split_words(text);
  if (w.empty()) throw ParseError("empty family spec");
  auto arity = [&](std::size_t count) {
    if (w.size() != count + 1) {
      throw ParseError("family '" + w[0] + "' takes " + std::to_string(count) +
                       " parameter(s)");
    }
  };
  GraphFamilySpec spec;
  const std::string& name = w[0];
  if (name == "complete") {
    arity(1);
    spec.family = Family::kComplete;
    spec.n = to_count(w[1]);
  } else if (name == "cycle") {
    arity(1);
    spec.family = Family::kCycle;
    spec.n = to_count(w[1]);
  } else if (name == "path") {
    arity(1);
    spec.family = Family::kPath;
    spec.n = to_count(w[1]);
  } else if (name == "bipartite") {
    arity(2);
    spec.family = Family::kCompleteBipartite;
    spec.a = to_count(w[1]);
    spec.b = to_count(w[2]);
  } else if (name == "kmm") {
    arity(2);
    spec = GraphFamilySpec::sharpness(to_count(w[1]), to_count(w[2]));
  } else if (name == "petersen") {
    arity(0);
    spec.family = Family::kPetersen;
  } else if (name == "gnp") {
    arity(3);
    spec.family = Family::kRandomGnp;
    spec.n = to_count(w[1]);
    spec.p = to_real(w[2]);
    long long seed = to_integer(w[3]);
    if (seed < 0) throw ParseError("gnp seed must be non-negative");
    spec.seed = static_cast<std::uint64_t>(seed);
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
      throw ParseError("gnp p outside [0, 1]");
    }
  } else {
    throw ParseError("unknown graph family '" + name + "'");
  }
  return spec;
}

std::string format_family_spec(const GraphFamilySpec& spec) {
  std::ostringstream os;
  switch (spec.family) {
    case Family::kComplete: os << "complete " << spec.n; break;
    case Family::kCycle: os << "cycle " << spec.n; break;
    case Family::kPath: os << "path " << spec.n; break;
    case Family::kCompleteBipartite: os << "bipartite " << spec.a << ' ' << spec.b; break;
    case Family::kPetersen: os << "petersen"; break;
    case Family::kRandomGnp: os << "gnp " << spec.n << ' ' << spec.p << ' ' << spec.seed; break;
  }
  return os.str();
}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n, int cap) : n_(n) {
  if (n < 1) throw InvalidArgument("enumeration needs n >= 1");
  if (n > cap) {
    throw CapExceeded("enumeration of n = " + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
  }
  if (n * (n - 1) / 2 >= 63) throw CapExceeded("edge bitmask does not fit");
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs_.push_back({u, v});
  }
  end_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
  while (mask_ < end_) {
    std::uint64_t m = mask_++;
    Graph g(n_);
    for (std::size_t e = 0; e < pairs_.size(); ++e) {
      if ((m >> e) & 1U) g.add_edge(pairs_[e].u, pairs_[e].v);
    }
    if (g.is_connected()) return g;
  }
  return std::nullopt;
}

std::vector<Graph> enumerate_connected_labeled_graphs(int n, int cap) {
  std::vector<Graph> out;
  ConnectedGraphEnumerator it(n, cap);
  while (auto g = it.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace kended
