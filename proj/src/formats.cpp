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

#include <charconv>
#include <optional>
#include <sstream>

namespace kended {

namespace {

constexpr int kGraph6ShortMax = 62;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw ParseError("graph6: missing size header");

  const auto header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw ParseError("graph6: long form (n > 62) unsupported");
  if (header < 63 || header > 63 + kGraph6ShortMax) {
    throw ParseError("graph6: size byte out of range");
  }
  const int n = header - 63;
  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  std::string_view body = text.substr(1);
  if (body.size() < byte_count) throw ParseError("graph6: truncated body");
  if (body.size() > byte_count) throw ParseError("graph6: trailing bytes");

  Graph g(n);
  std::size_t index = 0;
  auto bit_at = [&](std::size_t k) {
    const auto c = static_cast<unsigned char>(body[k / 6]);
    return ((c - 63) >> (5 - k % 6)) & 1;
  };
  for (unsigned char c : body) {
    if (c < 63 || c > 126) throw ParseError("graph6: body byte out of range");
  }
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++index) {
      if (bit_at(index)) g.add_edge(i, j);
    }
  }
  for (; index < byte_count * 6; ++index) {
    if (bit_at(index)) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  if (g.n() > kGraph6ShortMax) {
    throw InvalidArgument("graph6 short form needs n <= 62");
  }
  std::string out(1, static_cast<char>(63 + g.n()));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.n(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<Graph> g;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("edge list line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    std::istringstream fields{std::string(view)};
    if (!g) {
      std::string tag;
      long long n = -1;
      std::string extra;
      if (!(fields >> tag >> n) || tag != "n" || (fields >> extra)) {
        throw fail("expected 'n <count>' header");
      }
      if (n < 0 || n > kMaxVertices) throw fail("vertex count outside [0, 64]");
      g.emplace(static_cast<int>(n));
      continue;
    }
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) throw fail("expected 'u v'");
    if (u < 0 || v < 0 || u >= g->n() || v >= g->n()) {
      throw fail("label outside 0.." + std::to_string(g->n() - 1));
    }
    if (u == v) throw fail("self-loop at " + std::to_string(u));
    if (g->adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!g) throw ParseError("edge list: missing 'n <count>' header");
  return *std::move(g);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.n() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::size_t read_graph6_stream(std::istream& in,
                               const std::function<void(Graph)>& sink) {
  std::size_t count = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    sink(parse_graph6(trim(line)));
    ++count;
  }
  return count;
}

}  // namespace kended
