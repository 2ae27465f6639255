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

#ifndef KENDED_REPORT_HPP_
#define KENDED_REPORT_HPP_

#include <string>
#include <string_view>

#include "json.hpp"
#include "kended/constructive.hpp"
#include "kended/graph.hpp"
#include "kended/invariants.hpp"
#include "kended/verify.hpp"

namespace kended {

// Insertion-ordered so that reports serialize byte-identically.
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "kended-report/1";

// Integer, or the string "infinity".
Json to_json(const ConnectivityValue& value);
ConnectivityValue connectivity_from_json(const Json& j);

Json to_json(const VertexSet& set);
Json to_json(const Path& path);
// {"vertices": [...], "edges": [[u, v], ...], "leaves": L, "branch_vertices": B}
// with edges sorted.
Json to_json(const Tree& tree);
Tree tree_from_json(const Graph& g, const Json& j);

Json to_json(const TheoremVerdict& verdict, bool timing);
Json to_json(const SharpnessVerdict& verdict);
Json to_json(const ConstructionOutcome& outcome);
Json to_json(const SweepPlan& plan);
Json to_json(const SweepReport& report);

// The document envelope. `timing` is omitted when null.
Json make_report(std::string_view command, Json inputs, Json results,
                 Json timing = nullptr);

// Structural check of a report document against the published schema.
// Returns an empty string when valid, else the first violation.
std::string validate_report(const Json& doc);

}  // namespace kended

#endif  // KENDED_REPORT_HPP_
