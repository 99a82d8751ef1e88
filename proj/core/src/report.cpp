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

#include "evprop/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json_format.hpp"

namespace evprop {

using detail::Json;

namespace {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string padded(std::string s, std::size_t width, bool left) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return left ? s + fill : fill + s;
}

void human_stats(std::ostringstream& out, const RootedTree& tree, const PropagationResult& result,
                 const PropagationResult* naive) {
  std::size_t width = 5;
  for (NodeId v = 0; v < tree.size(); ++v) width = std::max(width, tree.vars(v).to_string().size());
  out << "\ncombinations\n  " << padded("node", width, true) << "  " << padded("optimized", 9, false);
  if (naive) out << "  " << padded("naive", 9, false);
  out << '\n';
  auto row = [&](const std::string& label, std::size_t optimized, std::size_t plain) {
    out << "  " << padded(label, width, true) << "  " << padded(std::to_string(optimized), 9, false);
    if (naive) out << "  " << padded(std::to_string(plain), 9, false);
    out << '\n';
  };
  for (NodeId v = 0; v < tree.size(); ++v) {
    row(tree.vars(v).to_string(), result.counter.node(v).total(), naive ? naive->counter.node(v).total() : 0);
  }
  row("total", result.counter.total(), naive ? naive->counter.total() : 0);
  row("setup", result.counter.setup(), naive ? naive->counter.setup() : 0);
}

}  // namespace

std::string format_set(const ConfigSet& set, const VariableTable& table) {
  if (set.is_full()) return "*";
  const Scope& scope = set.scope();
  std::string out = "{";
  bool first = true;
  for (std::size_t index : set.members()) {
    if (!first) out += ',';
    first = false;
    const auto digits = scope.decode(index);
    if (digits.size() == 1) {
      out += table.label(scope.name(0), digits[0]);
      continue;
    }
    out += '(';
    for (std::size_t p = 0; p < digits.size(); ++p) {
      if (p) out += ',';
      out += table.label(scope.name(p), digits[p]);
    }
    out += ')';
  }
  return out + "}";
}

std::string render_tree(const RootedTree& tree) {
  std::ostringstream out;
  std::vector<std::size_t> depth(tree.size(), 0);
  std::vector<NodeId> stack{tree.root()};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    out << std::string(2 * depth[v], ' ') << tree.vars(v).to_string();
    if (tree.tree().node(v).synthetic) out << " (added)";
    out << '\n';
    for (NodeId k : tree.reversed_children(v)) {
      depth[k] = depth[v] + 1;
      stack.push_back(k);
    }
  }
  return out.str();
}

std::string render_report(const Network& network, const RootedTree& tree, const PropagationResult& result,
                          ReportFormat format, const ReportOptions& options) {
  const auto& table = network.variables;
  if (format == ReportFormat::human) {
    std::ostringstream out;
    for (const auto& var : table.variables()) {
      auto it = result.variable_marginals.find(var.name);
      if (it == result.variable_marginals.end()) continue;
      for (const auto& f : it->second.canonical()) {
        out << var.name << ": " << format_set(f.set, table) << " m=" << fixed6(f.mass)
            << " Bel=" << fixed6(belief(it->second, f.set)) << '\n';
      }
    }
    if (options.stats) human_stats(out, tree, result, options.naive);
    return out.str();
  }

  Json doc;
  doc["root"] = detail::var_set_json(tree.vars(tree.root()));
  Json vars = Json::object();
  for (const auto& var : table.variables()) {
    auto it = result.variable_marginals.find(var.name);
    if (it != result.variable_marginals.end()) vars[var.name] = detail::mass_json(it->second, table, true);
  }
  doc["variables"] = std::move(vars);
  Json nodes = Json::array();
  for (NodeId v = 0; v < tree.size(); ++v) {
    Json node;
    node["id"] = v;
    node["scope"] = detail::var_set_json(tree.vars(v));
    if (auto p = tree.parent(v)) {
      node["parent"] = *p;
    } else {
      node["parent"] = nullptr;
    }
    node["marginal"] = detail::mass_json(result.node_marginals.at(v), table, true);
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  if (options.stats) {
    Json stats;
    stats["optimized"] = detail::counter_json(result.counter);
    if (options.naive) stats["naive"] = detail::counter_json(options.naive->counter);
    doc["stats"] = std::move(stats);
  }
  return doc.dump(2) + "\n";
}

}  // namespace evprop
