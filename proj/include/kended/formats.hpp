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

#ifndef KENDED_FORMATS_HPP_
#define KENDED_FORMATS_HPP_

#include <functional>
#include <istream>
#include <string>
#include <string_view>

#include "kended/graph.hpp"

namespace kended {

// graph6, short form only (n <= 62). A leading ">>graph6<<" header and one
// trailing newline are tolerated on input. Nonzero padding bits are rejected.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// First non-blank line "n <count>", then one "u v" line per edge. Blank lines
// and lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// Calls `sink` for every non-blank graph6 line; returns the record count.
std::size_t read_graph6_stream(std::istream& in,
                               const std::function<void(Graph)>& sink);

}  // namespace kended

#endif  // KENDED_FORMATS_HPP_
