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

#include "evprop/oracle.hpp"

#include "evprop/dempster.hpp"

namespace evprop {

GlobalBelief global_belief(const Network& network) {
  if (network.beliefs.empty()) throw ValidationError(std::vector<Issue>{{"beliefs", "a network needs at least one belief", {}}});
  VarSet all;
  for (const auto& b : network.beliefs) all = all.unite(b.mass.scope().vars());
  // Build the union scope up front so an oversized frame fails before any work.
  const Scope universe = network.variables.scope(all);

  GlobalBelief out{extend(network.beliefs.front().mass, universe), 1.0};
  for (std::size_t i = 1; i < network.beliefs.size(); ++i) {
    CombinationResult r;
    try {
      r = combine(out.mass, network.beliefs[i].mass);
    } catch (const TotalConflict&) {
      throw TotalConflict::at_prior(i);
    }
    out.mass = std::move(r.mass);
    out.cumulative_k *= r.normalization;
  }
  return out;
}

OracleMarginals oracle_marginals(const Network& network, const MarkovTree& tree) {
  const GlobalBelief global = global_belief(network);
  const Scope& universe = global.mass.scope();
  OracleMarginals out;
  for (const auto& node : tree.nodes()) out.node_marginals.push_back(marginalize(global.mass, universe.restrict_to(node.vars)));
  for (const auto& var : network.variables.variables()) {
    if (!universe.contains(var.name)) continue;
    out.variable_marginals.emplace(var.name, marginalize(global.mass, universe.restrict_to(VarSet{var.name})));
  }
  return out;
}

}  // namespace evprop
