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

#include "json_format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace evprop::detail {

double round_mass(double m) {
  const double scale = std::pow(10.0, kMachineDecimals);
  double r = std::round(m * scale) / scale;
  return r == 0.0 ? 0.0 : r;
}

Json label_json(const std::string& label) {
  long long value = 0;
  auto [end, ec] = std::from_chars(label.data(), label.data() + label.size(), value);
  if (ec == std::errc() && end == label.data() + label.size() && std::to_string(value) == label) return value;
  return label;
}

std::optional<std::string> label_from_json(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_unsigned()) return std::to_string(j.get<unsigned long long>());
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  return std::nullopt;
}

Json set_json(const ConfigSet& set, const VariableTable& table) {
  if (set.is_full()) return "*";
  const Scope& scope = set.scope();
  Json tuples = Json::array();
  for (std::size_t index : set.members()) {
    const auto digits = scope.decode(index);
    Json tuple = Json::array();
    for (std::size_t p = 0; p < digits.size(); ++p) tuple.push_back(label_json(table.label(scope.name(p), digits[p])));
    tuples.push_back(std::move(tuple));
  }
  return tuples;
}

Json mass_json(const MassFunction& m, const VariableTable& table, bool rounded) {
  Json out = Json::array();
  for (const auto& f : m.canonical()) {
    Json entry;
    entry["set"] = set_json(f.set, table);
    entry["mass"] = rounded ? round_mass(f.mass) : f.mass;
    out.push_back(std::move(entry));
  }
  return out;
}

Json var_set_json(const VarSet& vars) {
  Json out = Json::array();
  for (const auto& v : vars) out.push_back(v);
  return out;
}

Json tree_json(const RootedTree& tree) {
  Json nodes = Json::array();
  for (NodeId v = 0; v < tree.size(); ++v) {
    Json node;
    node["id"] = v;
    node["scope"] = var_set_json(tree.vars(v));
    node["synthetic"] = tree.tree().node(v).synthetic;
    if (auto p = tree.parent(v)) {
      node["parent"] = *p;
    } else {
      node["parent"] = nullptr;
    }
    Json kids = Json::array();
    for (NodeId k : tree.children(v)) kids.push_back(k);
    node["children"] = std::move(kids);
    nodes.push_back(std::move(node));
  }
  Json out;
  out["root"] = tree.root();
  out["nodes"] = std::move(nodes);
  return out;
}

Json counter_json(const CombinationCounter& counter) {
  Json nodes = Json::array();
  for (NodeId v = 0; v < counter.size(); ++v) {
    const auto& t = counter.node(v);
    nodes.push_back(Json{{"id", v}, {"up", t.up}, {"down", t.down}, {"total", t.total()}});
  }
  return Json{{"total", counter.total()}, {"setup", counter.setup()}, {"nodes", std::move(nodes)}};
}

namespace {

/// Digits of one tuple in scope order, or nullopt after reporting.
std::optional<Configuration> parse_tuple(const Json& tuple, const Scope& scope, const std::vector<std::string>& declared,
                                         const VariableTable& table, const std::string& path,
                                         std::vector<Issue>& issues) {
  Configuration digits(scope.arity(), 0);
  std::vector<bool> seen(scope.arity(), false);
  auto put = [&](const std::string& var, const Json& value) {
    auto pos = scope.position(var);
    if (!pos) {
      issues.push_back({path, "variable '" + var + "' is not in the scope " + scope.to_string(), {}});
      return false;
    }
    auto label = label_from_json(value);
    if (!label) {
      issues.push_back({path, "a label must be a string or an integer", {}});
      return false;
    }
    auto idx = table.label_index(var, *label);
    if (!idx) {
      issues.push_back({path, "'" + *label + "' is not in the frame of '" + var + "'", {}});
      return false;
    }
    if (seen[*pos]) {
      issues.push_back({path, "variable '" + var + "' given twice", {}});
      return false;
    }
    digits[*pos] = *idx;
    seen[*pos] = true;
    return true;
  };

  if (tuple.is_array()) {
    if (tuple.size() != declared.size()) {
      issues.push_back({path, "tuple has " + std::to_string(tuple.size()) + " labels, scope has " +
                                  std::to_string(declared.size()),
                        {}});
      return std::nullopt;
    }
    for (std::size_t p = 0; p < declared.size(); ++p) {
      if (!put(declared[p], tuple[p])) return std::nullopt;
    }
  } else if (tuple.is_object()) {
    for (const auto& [var, value] : tuple.items()) {
      if (!put(var, value)) return std::nullopt;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      issues.push_back({path, "tuple does not assign every variable of " + scope.to_string(), {}});
      return std::nullopt;
    }
  } else {
    issues.push_back({path, "a tuple must be an array or an object", {}});
    return std::nullopt;
  }
  return digits;
}

}  // namespace

std::optional<std::vector<RawFocal>> parse_focal(const Json& focal, const Scope& scope,
                                                 const std::vector<std::string>& declared, const VariableTable& table,
                                                 const std::string& path, std::vector<Issue>& issues) {
  if (!focal.is_array()) {
    issues.push_back({path, "expected an array of focal elements", {}});
    return std::nullopt;
  }
  const std::size_t before = issues.size();
  std::vector<RawFocal> out;
  for (std::size_t i = 0; i < focal.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    const Json& f = focal[i];
    if (!f.is_object() || !f.contains("set") || !f.contains("mass")) {
      issues.push_back({at, "a focal element needs \"set\" and \"mass\"", {}});
      continue;
    }
    RawFocal raw;
    const Json& mass = f["mass"];
    if (!mass.is_number()) {
      issues.push_back({at + ".mass", "mass must be a number", {}});
      continue;
    }
    raw.mass = mass.get<double>();
    const Json& set = f["set"];
    if (set.is_string() && set.get<std::string>() == "*") {
      raw.members.resize(scope.frame_size());
      for (std::size_t k = 0; k < raw.members.size(); ++k) raw.members[k] = k;
    } else if (set.is_array()) {
      for (std::size_t t = 0; t < set.size(); ++t) {
        auto digits = parse_tuple(set[t], scope, declared, table, at + ".set[" + std::to_string(t) + "]", issues);
        if (digits) raw.members.push_back(scope.encode(*digits));
      }
    } else {
      issues.push_back({at + ".set", "set must be \"*\" or an array of tuples", {}});
      continue;
    }
    out.push_back(std::move(raw));
  }
  if (issues.size() != before) return std::nullopt;
  return out;
}

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

}  // namespace evprop::detail
