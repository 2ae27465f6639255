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

#include "kended/report.hpp"

#include <algorithm>

namespace kended {

namespace {

std::string_view outcome_name(OutcomeKind kind) {
  return kind == OutcomeKind::kCovering ? "covering" : "residual-bound";
}

std::string_view mode_name(SweepMode mode) {
  switch (mode) {
    case SweepMode::kNone: return "none";
    case SweepMode::kExhaustive: return "exhaustive";
    case SweepMode::kRandom: return "random";
    case SweepMode::kGraph6: return "graph6";
  }
  return "none";
}

std::string_view policy_name(SubsetPolicy policy) {
  switch (policy) {
    case SubsetPolicy::kAllSubsets: return "all-subsets";
    case SubsetPolicy::kRandomSubsets: return "random-subsets";
    case SubsetPolicy::kAllVertices: return "all-vertices";
  }
  return "all-subsets";
}

double millis(std::chrono::nanoseconds d) {
  return static_cast<double>(d.count()) / 1e6;
}

}  // namespace

Json to_json(const ConnectivityValue& value) {
  if (value.is_infinite()) return "infinity";
  return value.value();
}

ConnectivityValue connectivity_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "infinity") {
    return ConnectivityValue::infinite();
  }
  if (j.is_number_integer() && j.get<long long>() >= 0) {
    return ConnectivityValue::finite(j.get<int>());
  }
  throw ParseError("connectivity must be a non-negative integer or \"infinity\"");
}

Json to_json(const VertexSet& set) { return Json(set.members()); }

Json to_json(const Path& path) { return Json(path.vertices()); }

Json to_json(const Tree& tree) {
  Json edges = Json::array();
  for (const Edge& e : tree.edges()) edges.push_back({e.u, e.v});
  Json j;
  j["vertices"] = to_json(tree.vertices());
  j["edges"] = std::move(edges);
  j["leaves"] = tree.leaf_count();
  j["branch_vertices"] = tree.branch_count();
  return j;
}

Tree tree_from_json(const Graph& g, const Json& j) {
  try {
    VertexSet vertices = VertexSet::empty_of(g.n());
    for (const Json& v : j.at("vertices")) vertices.insert(v.get<Vertex>());
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("tree edge must be a pair");
      edges.push_back(Edge::of(e[0].get<Vertex>(), e[1].get<Vertex>()));
    }
    return Tree(g, vertices, std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed tree: ") + e.what());
  }
}

Json to_json(const TheoremVerdict& verdict, bool timing) {
  Json j;
  j["check"] = check_name(verdict.check);
  j["graph6"] = verdict.graph_id;
  j["S"] = verdict.s;
  j["k"] = verdict.k;
  j["alpha"] = verdict.alpha;
  j["kappa"] = to_json(verdict.kappa);
  j["hypothesis_holds"] = verdict.hypothesis_holds;
  j["conclusion_holds"] = verdict.conclusion_holds;
  j["constructive_ok"] =
      verdict.constructive_ok ? Json(*verdict.constructive_ok) : Json(nullptr);
  j["consistent"] = verdict.consistent;
  j["counterexample"] = verdict.is_counterexample();
  j["witness"] = verdict.witness ? to_json(*verdict.witness) : Json(nullptr);
  if (!verdict.detail.empty()) j["detail"] = verdict.detail;
  if (timing) j["elapsed_ms"] = millis(verdict.elapsed);
  return j;
}

Json to_json(const SharpnessVerdict& v) {
  Json j;
  j["m"] = v.m;
  j["k"] = v.k;
  j["alpha"] = v.alpha;
  j["kappa"] = v.kappa;
  j["min_leaves"] = v.min_leaves;
  j["min_branch"] = v.min_branch;
  j["expected"] = {{"alpha", v.m + v.k},
                   {"kappa", v.m},
                   {"min_leaves", v.k + 1},
                   {"min_branch", v.k - 1}};
  j["matches_expected"] = v.matches_expected;
  j["leaf_witness"] = to_json(v.leaf_witness);
  j["branch_witness"] = to_json(v.branch_witness);
  return j;
}

Json to_json(const ConstructionOutcome& outcome) {
  Json j;
  j["kind"] = outcome_name(outcome.kind);
  j["k"] = outcome.k;
  j["alpha"] = outcome.alpha;
  j["kappa"] = to_json(outcome.kappa);
  j["tree"] = to_json(outcome.tree);
  j["leaves"] = outcome.tree.leaf_count();
  j["residual_alpha"] = outcome.residual_alpha;
  j["bound"] = outcome.bound ? Json(*outcome.bound) : Json(nullptr);
  j["base_path"] = outcome.trace.empty() ? Json::array() : to_json(outcome.trace.front());
  Json attachments = Json::array();
  for (std::size_t i = 1; i < outcome.trace.size(); ++i) {
    attachments.push_back(to_json(outcome.trace[i]));
  }
  j["attachments"] = std::move(attachments);
  j["residual_history"] = outcome.residual_history;
  return j;
}

Json to_json(const SweepPlan& plan) {
  Json j;
  j["mode"] = mode_name(plan.mode);
  j["n_min"] = plan.n_min;
  j["n_max"] = plan.n_max;
  if (plan.mode == SweepMode::kRandom) {
    j["p"] = plan.p;
    j["count"] = plan.count;
  }
  j["seed"] = plan.seed;
  j["k_min"] = plan.k_min;
  j["k_max"] = plan.k_max;
  j["subsets"] = policy_name(plan.subsets);
  if (plan.subsets == SubsetPolicy::kRandomSubsets) j["subset_samples"] = plan.subset_samples;
  Json checks = Json::array();
  for (Check c : plan.checks) checks.push_back(check_name(c));
  j["checks"] = std::move(checks);
  if (plan.mode == SweepMode::kGraph6) j["source"] = plan.source;
  j["cap"] = plan.cap;
  return j;
}

Json to_json(const SweepReport& report) {
  Json j;
  j["plan"] = to_json(report.plan);
  j["graphs"] = report.graphs;
  j["skipped_disconnected"] = report.skipped_disconnected;
  j["instances"] = report.instances;
  Json checks = Json::object();
  for (Check c : kAllChecks) {
    const CheckTally& t = report.tally(c);
    checks[std::string(check_name(c))] = {{"instances", t.instances},
                                          {"hypothesis_true", t.hypothesis_true},
                                          {"conclusion_true", t.conclusion_true},
                                          {"counterexamples", t.counterexamples}};
  }
  j["checks"] = std::move(checks);
  j["clean"] = report.clean();
  j["counterexample"] = report.counterexample
                            ? to_json(*report.counterexample, report.plan.timing)
                            : Json(nullptr);
  if (report.plan.record_verdicts) {
    Json verdicts = Json::array();
    for (const TheoremVerdict& v : report.verdicts) {
      verdicts.push_back(to_json(v, report.plan.timing));
    }
    j["verdicts"] = std::move(verdicts);
  }
  return j;
}

Json make_report(std::string_view command, Json inputs, Json results, Json timing) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["results"] = std::move(results);
  if (!timing.is_null()) doc["timing"] = std::move(timing);
  return doc;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

struct Violation {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Violation{what};
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  expect(obj.is_object(), where + " is not an object");
  auto it = obj.find(key);
  expect(it != obj.end(), where + "." + key + " missing");
  return *it;
}

void expect_count(const Json& j, const std::string& where) {
  expect(j.is_number_integer() && j.get<long long>() >= 0,
         where + " is not a non-negative integer");
}

void expect_connectivity(const Json& j, const std::string& where) {
  const bool ok = (j.is_string() && j.get<std::string>() == "infinity") ||
                  (j.is_number_integer() && j.get<long long>() >= 0);
  expect(ok, where + " is neither a non-negative integer nor \"infinity\"");
}

void expect_vertex_list(const Json& j, const std::string& where) {
  expect(j.is_array(), where + " is not an array");
  for (const Json& v : j) expect_count(v, where + "[]");
}

void expect_tree(const Json& j, const std::string& where) {
  expect_vertex_list(field(j, "vertices", where), where + ".vertices");
  const Json& edges = field(j, "edges", where);
  expect(edges.is_array(), where + ".edges is not an array");
  for (const Json& e : edges) {
    expect(e.is_array() && e.size() == 2, where + ".edges[] is not a pair");
    expect_count(e[0], where + ".edges[][0]");
    expect_count(e[1], where + ".edges[][1]");
    expect(e[0].get<long long>() < e[1].get<long long>(),
           where + ".edges[] not normalized u < v");
  }
  expect(std::is_sorted(edges.begin(), edges.end()), where + ".edges not sorted");
  expect_count(field(j, "leaves", where), where + ".leaves");
  expect_count(field(j, "branch_vertices", where), where + ".branch_vertices");
}

void expect_verdict(const Json& j, const std::string& where) {
  expect(field(j, "check", where).is_string(), where + ".check is not a string");
  expect(field(j, "graph6", where).is_string(), where + ".graph6 is not a string");
  expect_vertex_list(field(j, "S", where), where + ".S");
  expect_count(field(j, "k", where), where + ".k");
  expect_count(field(j, "alpha", where), where + ".alpha");
  expect_connectivity(field(j, "kappa", where), where + ".kappa");
  for (const char* key : {"hypothesis_holds", "conclusion_holds", "consistent",
                          "counterexample"}) {
    expect(field(j, key, where).is_boolean(), where + "." + key + " is not a boolean");
  }
  const Json& witness = field(j, "witness", where);
  if (!witness.is_null()) expect_tree(witness, where + ".witness");
}

void validate_results(std::string_view command, const Json& r) {
  const std::string where = "results";
  if (command == "analyze") {
    expect_count(field(r, "n", where), "results.n");
    expect(field(r, "connected", where).is_boolean(), "results.connected is not a boolean");
    expect_connectivity(field(r, "graph_connectivity", where), "results.graph_connectivity");
    expect_count(field(r, "alpha", where), "results.alpha");
    expect_vertex_list(field(r, "alpha_witness", where), "results.alpha_witness");
    expect_connectivity(field(r, "kappa", where), "results.kappa");
    const Json& pair = field(r, "kappa_pair", where);
    expect(pair.is_null() || (pair.is_array() && pair.size() == 2),
           "results.kappa_pair is neither null nor a pair");
    expect_count(field(r, "threshold_k", where), "results.threshold_k");
    const Json& failing = field(r, "largest_failing_k", where);
    expect(failing.is_null() || failing.is_number_integer(),
           "results.largest_failing_k is neither null nor an integer");
  } else if (command == "construct") {
    const Json& kind = field(r, "kind", where);
    expect(kind == "covering" || kind == "residual-bound", "results.kind unknown");
    expect_count(field(r, "k", where), "results.k");
    expect_count(field(r, "alpha", where), "results.alpha");
    expect_connectivity(field(r, "kappa", where), "results.kappa");
    expect_tree(field(r, "tree", where), "results.tree");
    expect_count(field(r, "leaves", where), "results.leaves");
    expect_count(field(r, "residual_alpha", where), "results.residual_alpha");
    const Json& bound = field(r, "bound", where);
    expect(bound.is_null() || bound.is_number_integer(), "results.bound not integer or null");
    expect_vertex_list(field(r, "base_path", where), "results.base_path");
    const Json& att = field(r, "attachments", where);
    expect(att.is_array(), "results.attachments is not an array");
    for (const Json& a : att) expect_vertex_list(a, "results.attachments[]");
    expect_vertex_list(field(r, "residual_history", where), "results.residual_history");
  } else if (command == "verify") {
    expect(field(r, "plan", where).is_object(), "results.plan is not an object");
    for (const char* key : {"graphs", "skipped_disconnected", "instances"}) {
      expect_count(field(r, key, where), std::string("results.") + key);
    }
    const Json& checks = field(r, "checks", where);
    expect(checks.is_object(), "results.checks is not an object");
    for (const auto& [name, t] : checks.items()) {
      for (const char* key : {"instances", "hypothesis_true", "conclusion_true",
                              "counterexamples"}) {
        expect_count(field(t, key, "results.checks." + name),
                     "results.checks." + name + "." + key);
      }
    }
    for (Check c : kAllChecks) {
      expect(checks.contains(std::string(check_name(c))),
             "results.checks lacks " + std::string(check_name(c)));
    }
    expect(field(r, "clean", where).is_boolean(), "results.clean is not a boolean");
    const Json& cx = field(r, "counterexample", where);
    if (!cx.is_null()) expect_verdict(cx, "results.counterexample");
    if (auto it = r.find("verdicts"); it != r.end()) {
      expect(it->is_array(), "results.verdicts is not an array");
      for (const Json& v : *it) expect_verdict(v, "results.verdicts[]");
    }
  } else if (command == "sharpness") {
    const Json& cells = field(r, "cells", where);
    expect(cells.is_array(), "results.cells is not an array");
    for (const Json& c : cells) {
      for (const char* key : {"m", "k", "alpha", "kappa", "min_leaves", "min_branch"}) {
        expect_count(field(c, key, "results.cells[]"), std::string("results.cells[].") + key);
      }
      expect(field(c, "matches_expected", "results.cells[]").is_boolean(),
             "results.cells[].matches_expected is not a boolean");
      expect_tree(field(c, "leaf_witness", "results.cells[]"), "results.cells[].leaf_witness");
      expect_tree(field(c, "branch_witness", "results.cells[]"),
                  "results.cells[].branch_witness");
    }
    expect(field(r, "skipped", where).is_array(), "results.skipped is not an array");
    expect(field(r, "all_match", where).is_boolean(), "results.all_match is not a boolean");
  } else {
    expect(false, "unknown command '" + std::string(command) + "'");
  }
}

}  // namespace

std::string validate_report(const Json& doc) {
  try {
    const Json& version = field(doc, "schema_version", "report");
    expect(version.is_string() && version.get<std::string>() == kSchemaVersion,
           "report.schema_version is not " + std::string(kSchemaVersion));
    const Json& command = field(doc, "command", "report");
    expect(command.is_string(), "report.command is not a string");
    expect(field(doc, "inputs", "report").is_object(), "report.inputs is not an object");
    validate_results(command.get<std::string>(), field(doc, "results", "report"));
    if (auto it = doc.find("timing"); it != doc.end()) {
      expect(it->is_object(), "report.timing is not an object");
    }
  } catch (const Violation& v) {
    return v.what;
  }
  return {};
}

}  // namespace kended
