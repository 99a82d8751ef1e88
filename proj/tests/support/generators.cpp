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

#include "generators.hpp"

#include <algorithm>
#include <numeric>

#include "evprop/dempster.hpp"

namespace evprop::testing {

std::vector<double> random_masses(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::vector<double> out(n);
  for (auto& w : out) w = weight(rng);
  const double total = std::accumulate(out.begin(), out.end(), 0.0);
  for (auto& w : out) w /= total;
  return out;
}

MassFunction random_mass(Rng& rng, const Scope& scope, std::size_t max_focal, double full_frame_chance) {
  const std::size_t size = scope.frame_size();
  std::uniform_int_distribution<std::size_t> count(1, max_focal);
  std::bernoulli_distribution member(0.4);
  std::uniform_int_distribution<std::size_t> any(0, size - 1);
  std::vector<ConfigSet> sets;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    auto set = ConfigSet::empty_of(scope);
    for (std::size_t k = 0; k < size; ++k) {
      if (member(rng)) set.insert(k);
    }
    if (set.is_empty()) set.insert(any(rng));
    sets.push_back(std::move(set));
  }
  if (std::bernoulli_distribution(full_frame_chance)(rng)) sets.push_back(ConfigSet::full(scope));
  const auto masses = random_masses(rng, sets.size());
  std::vector<FocalElement> focal;
  for (std::size_t i = 0; i < sets.size(); ++i) focal.push_back({sets[i], masses[i]});
  return MassFunction(scope, std::move(focal));
}

MassFunction singleton_mass(Rng& rng, const Scope& scope, bool with_full_frame) {
  const std::size_t size = scope.frame_size();
  const auto masses = random_masses(rng, size + (with_full_frame ? 1 : 0));
  std::vector<FocalElement> focal;
  for (std::size_t k = 0; k < size; ++k) focal.push_back({ConfigSet::of(scope, {k}), masses[k]});
  if (with_full_frame) focal.push_back({ConfigSet::full(scope), masses[size]});
  return MassFunction(scope, std::move(focal));
}

Network random_network(Rng& rng, const NetworkLimits& limits) {
  std::uniform_int_distribution<std::size_t> var_count(1, limits.max_vars);
  std::uniform_int_distribution<std::size_t> frame_size(2, limits.max_frame);
  std::uniform_int_distribution<std::size_t> prior_count(1, limits.max_priors);
  for (;;) {
    Network net{VariableTable(), {}, {}, {}};
    const std::size_t n = var_count(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("v" + std::to_string(i));
      Variable var{names.back(), {}};
      const std::size_t k = frame_size(rng);
      for (std::size_t l = 0; l < k; ++l) var.frame.push_back(std::to_string(l));
      net.variables.add(std::move(var));
    }
    const std::size_t priors = prior_count(rng);
    std::uniform_int_distribution<std::size_t> scope_size(1, std::min(limits.max_scope, n));
    VarSet used;
    for (std::size_t i = 0; i < priors; ++i) {
      std::vector<std::string> pool = names;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(scope_size(rng));
      const VarSet vars(pool);
      used = used.unite(vars);
      const Scope scope = net.variables.scope(vars);
      net.beliefs.push_back({"b" + std::to_string(i), random_mass(rng, scope, limits.max_focal, limits.full_frame_chance)});
    }
    if (used.size() == n) return net;
  }
}

Network random_tree_network(Rng& rng, std::size_t nodes, std::size_t max_children) {
  std::vector<std::size_t> parent(nodes, 0);
  std::vector<std::size_t> kids(nodes, 0);
  for (std::size_t i = 1; i < nodes; ++i) {
    std::vector<std::size_t> open;
    for (std::size_t j = 0; j < i; ++j) {
      if (kids[j] < max_children) open.push_back(j);
    }
    parent[i] = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    ++kids[parent[i]];
  }
  // Link variable e<i> joins node i and its parent; the root also holds r.
  std::vector<std::string> names{"r"};
  std::vector<std::vector<std::string>> scopes(nodes);
  scopes[0].push_back("r");
  for (std::size_t i = 1; i < nodes; ++i) {
    const std::string link = "e" + std::to_string(i);
    names.push_back(link);
    scopes[i].push_back(link);
    scopes[parent[i]].push_back(link);
  }

  Network net{binary_table(names), {}, {}, {}};
  TreeSpec spec;
  for (std::size_t i = 0; i < nodes; ++i) spec.nodes.emplace_back(scopes[i]);
  for (std::size_t i = 1; i < nodes; ++i) spec.edges.push_back({parent[i], i});
  std::bernoulli_distribution with_full(0.5);
  for (std::size_t i = 0; i < nodes; ++i) {
    const Scope scope = net.variables.scope(spec.nodes[i]);
    net.beliefs.push_back({"n" + std::to_string(i), singleton_mass(rng, scope, with_full(rng))});
  }
  net.root = spec.nodes[0];
  net.tree = std::move(spec);
  return net;
}

VariableTable binary_table(const std::vector<std::string>& names) {
  VariableTable table;
  for (const auto& n : names) table.add({n, {"0", "1"}});
  return table;
}

}  // namespace evprop::testing
