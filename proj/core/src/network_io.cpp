/*
 * Copyright 2026 The evprop Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "evprop/network_io.hpp"

#include <regex>

#include "json_format.hpp"

namespace evprop {

using detail::Json;

namespace {

std::string regex_escape(std::string_view s) {
  static const std::string special = R"(\^$.|?*+()[]{})";
  std::string out;
  for (char c : s) {
    if (special.find(c) != std::string::npos) out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

/// Line of the first `"key": "value"` pair, if any.
std::optional<std::size_t> line_of(std::string_view text, std::string_view key, std::string_view value) {
  const std::regex re("\"" + regex_escape(key) + "\"\\s*:\\s*\"" + regex_escape(value) + "\"");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_search(text.begin(), text.end(), m, re)) return std::nullopt;
  return detail::line_at(text, static_cast<std::size_t>(m.position(0)));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::string message = e.what();
    if (auto pos = message.find("syntax error"); pos != std::string::npos) message = message.substr(pos);
    throw ValidationError(std::vector<Issue>{{"document", message, detail::line_at(text, e.byte == 0 ? 0 : e.byte - 1)}});
  }
}

std::optional<std::vector<std::string>> name_list(const Json& j, const std::string& path, std::vector<Issue>& issues) {
  if (!j.is_array() || j.empty()) {
    issues.push_back({path, "expected a non-empty array of variable names", {}});
    return std::nullopt;
  }
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) {
      issues.push_back({path, "variable names must be strings", {}});
      return std::nullopt;
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

void parse_variables(const Json& doc, std::string_view text, Network& net, std::vector<Issue>& issues) {
  if (!doc.contains("variables") || !doc["variables"].is_array()) {
    issues.push_back({"variables", "expected an array of variables", {}});
    return;
  }
  const Json& vars = doc["variables"];
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string path = "variables[" + std::to_string(i) + "]";
    const Json& v = vars[i];
    if (!v.is_object() || !v.contains("name") || !v["name"].is_string() || !v.contains("frame") ||
        !v["frame"].is_array()) {
      issues.push_back({path, "a variable needs a string \"name\" and a \"frame\" array", {}});
      continue;
    }
    Variable var{v["name"].get<std::string>(), {}};
    bool ok = true;
    for (const auto& label : v["frame"]) {
      auto s = detail::label_from_json(label);
      if (!s) {
        issues.push_back({path + ".frame", "a label must be a string or an integer", line_of(text, "name", var.name)});
        ok = false;
        break;
      }
      var.frame.push_back(*s);
    }
    if (!ok) continue;
    try {
      net.variables.add(std::move(var));
    } catch (const ValidationError& e) {
      for (auto issue : e.issues()) {
        issue.context = path + " (" + issue.context + ")";
        issue.line = line_of(text, "name", v["name"].get<std::string>());
        issues.push_back(std::move(issue));
      }
    }
  }
}

void parse_beliefs(const Json& doc, std::string_view text, Network& net, std::vector<Issue>& issues) {
  if (!doc.contains("beliefs") || !doc["beliefs"].is_array()) {
    issues.push_back({"beliefs", "expected an array of beliefs", {}});
    return;
  }
  const Json& beliefs = doc["beliefs"];
  for (std::size_t i = 0; i < beliefs.size(); ++i) {
    std::string path = "beliefs[" + std::to_string(i) + "]";
    const Json& b = beliefs[i];
    if (!b.is_object() || !b.contains("id") || !b["id"].is_string()) {
      issues.push_back({path, "a belief needs a string \"id\"", {}});
      continue;
    }
    const std::string id = b["id"].get<std::string>();
    const auto line = line_of(text, "id", id);
    path = "beliefs[" + std::to_string(i) + "] '" + id + "'";
    if (!b.contains("scope") || !b.contains("focal")) {
      issues.push_back({path, "a belief needs \"scope\" and \"focal\"", line});
      continue;
    }
    auto declared = name_list(b["scope"], path + ".scope", issues);
    if (!declared) continue;
    VarSet vars(*declared);
    if (vars.size() != declared->size()) {
      issues.push_back({path + ".scope", "variable listed twice", line});
      continue;
    }
    bool known = true;
    for (const auto& name : *declared) {
      if (!net.variables.contains(name)) {
        issues.push_back({path + ".scope", "unknown variable '" + name + "'", line});
        known = false;
      }
    }
    if (!known) continue;
    const Scope scope = net.variables.scope(vars);

    const std::size_t before = issues.size();
    auto raw = detail::parse_focal(b["focal"], scope, *declared, net.variables, path + ".focal", issues);
    for (std::size_t k = before; k < issues.size(); ++k) issues[k].line = line;
    if (!raw) continue;
    auto violations = validate_mass(scope, *raw);
    if (!violations.empty()) {
      for (auto& v : violations) issues.push_back({id, std::move(v.detail), line});
      continue;
    }
    net.beliefs.push_back({id, make_mass(scope, *raw)});
  }
}

void parse_tree(const Json& doc, Network& net, std::vector<Issue>& issues) {
  if (doc.contains("tree")) {
    const Json& t = doc["tree"];
    if (!t.is_object() || !t.contains("nodes") || !t["nodes"].is_array() || !t.contains("edges") ||
        !t["edges"].is_array()) {
      issues.push_back({"tree", "a tree needs \"nodes\" and \"edges\" arrays", {}});
    } else {
      TreeSpec spec;
      bool ok = true;
      for (std::size_t i = 0; i < t["nodes"].size(); ++i) {
        auto names = name_list(t["nodes"][i], "tree.nodes[" + std::to_string(i) + "]", issues);
        if (!names) {
          ok = false;
          continue;
        }
        spec.nodes.emplace_back(*names);
      }
      for (std::size_t i = 0; i < t["edges"].size(); ++i) {
        const Json& e = t["edges"][i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
          issues.push_back({"tree.edges[" + std::to_string(i) + "]", "an edge is a pair of node indices", {}});
          ok = false;
          continue;
        }
        spec.edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
      }
      if (ok) net.tree = std::move(spec);
    }
  }
  if (doc.contains("root")) {
    auto names = name_list(doc["root"], "root", issues);
    if (names) net.root = VarSet(*names);
  }
}

}  // namespace

Network parse_network(std::string_view text, std::size_t frame_cap) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw ValidationError(std::vector<Issue>{{"document", "expected a JSON object", 1}});

  Network net{VariableTable(frame_cap), {}, {}, {}};
  std::vector<Issue> issues;
  parse_variables(doc, text, net, issues);
  parse_beliefs(doc, text, net, issues);
  parse_tree(doc, net, issues);
  if (!issues.empty()) throw ValidationError(std::move(issues));

  for (auto issue : validate_network(net)) {
    if (!issue.line) {
      issue.line = line_of(text, "id", issue.context);
      if (!issue.line) issue.line = line_of(text, "name", issue.context);
    }
    issues.push_back(std::move(issue));
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return net;
}

std::string render_network(const Network& network) {
  Json doc;
  Json vars = Json::array();
  for (const auto& v : network.variables.variables()) {
    Json frame = Json::array();
    for (const auto& label : v.frame) frame.push_back(detail::label_json(label));
    vars.push_back(Json{{"name", v.name}, {"frame", std::move(frame)}});
  }
  doc["variables"] = std::move(vars);

  Json beliefs = Json::array();
  for (const auto& b : network.beliefs) {
    Json entry;
    entry["id"] = b.id;
    entry["scope"] = detail::var_set_json(b.mass.scope().vars());
    entry["focal"] = detail::mass_json(b.mass, network.variables, false);
    beliefs.push_back(std::move(entry));
  }
  doc["beliefs"] = std::move(beliefs);

  if (network.tree) {
    Json nodes = Json::array();
    for (const auto& n : network.tree->nodes) nodes.push_back(detail::var_set_json(n));
    Json edges = Json::array();
    for (const auto& e : network.tree->edges) edges.push_back(Json::array({e.a, e.b}));
    doc["tree"] = Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  }
  if (network.root) doc["root"] = detail::var_set_json(*network.root);
  return doc.dump(2) + "\n";
}

MassFunction parse_belief_update(const Network& network, std::string_view belief_id, std::string_view text) {
  const auto& belief = network.beliefs.at(network.belief_index(belief_id));
  const Json doc = parse_json(text);
  const std::string path(belief_id);
  if (!doc.is_object() || !doc.contains("focal")) {
    throw ValidationError(std::vector<Issue>{{path, "expected an object with \"focal\"", {}}});
  }
  const Scope& scope = belief.mass.scope();
  std::vector<Issue> issues;
  std::vector<std::string> declared = scope.vars().names();
  if (doc.contains("scope")) {
    auto names = name_list(doc["scope"], path + ".scope", issues);
    if (names && !(VarSet(*names) == scope.vars() && names->size() == scope.arity())) {
      issues.push_back({path + ".scope", "scope must list the variables of " + scope.to_string(), {}});
    }
    if (!issues.empty()) throw ValidationError(std::move(issues));
    declared = *names;
  }
  auto raw = detail::parse_focal(doc["focal"], scope, declared, network.variables, path + ".focal", issues);
  if (!raw) throw ValidationError(std::move(issues));
  auto violations = validate_mass(scope, *raw);
  if (!violations.empty()) {
    for (auto& v : violations) issues.push_back({path, std::move(v.detail), {}});
    throw ValidationError(std::move(issues));
  }
  return make_mass(scope, *raw);
}

VarSet parse_var_list(std::string_view text) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view part = text.substr(start, comma - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty()) names.emplace_back(part);
    start = comma + 1;
  }
  if (names.empty()) throw ValidationError(std::vector<Issue>{{"root", "expected a comma-separated list of variables", {}}});
  return VarSet(std::move(names));
}

}  // namespace evprop
