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

#include "evprop/network.hpp"

#include <algorithm>

#include "evprop/dempster.hpp"

namespace evprop {

Hypergraph Network::hypergraph() const {
  std::vector<VarSet> edges;
  for (const auto& b : beliefs) edges.push_back(b.mass.scope().vars());
  return Hypergraph(std::move(edges));
}

std::size_t Network::belief_index(std::string_view id) const {
  for (std::size_t i = 0; i < beliefs.size(); ++i) {
    if (beliefs[i].id == id) return i;
  }
  throw ValidationError({{std::string(id), "unknown belief id", {}}});
}

namespace {

std::string describe(const MarkovTree& tree, const MarkovViolation& v) {
  return "not a Markov tree: " + tree.node(v.separator).vars.to_string() + " separates " +
         tree.node(v.first).vars.to_string() + " and " + tree.node(v.second).vars.to_string() +
         " but does not contain their intersection";
}

/// Explicit tree from the document; issues are appended instead of thrown.
std::optional<MarkovTree> explicit_tree(const TreeSpec& spec, std::vector<Issue>& issues) {
  std::vector<TreeNode> nodes;
  for (const auto& n : spec.nodes) nodes.push_back({n, false});
  try {
    MarkovTree tree(std::move(nodes), spec.edges);
    auto check = verify_markov(tree);
    if (!check.ok) {
      issues.push_back({"tree", describe(tree, *check.violation), {}});
      return std::nullopt;
    }
    return tree;
  } catch (const Error& e) {
    issues.push_back({"tree", e.what(), {}});
    return std::nullopt;
  }
}

}  // namespace

std::vector<Issue> validate_network(const Network& network) {
  std::vector<Issue> issues;
  if (network.beliefs.empty()) issues.push_back({"beliefs", "a network needs at least one belief", {}});

  VarSet used;
  for (std::size_t i = 0; i < network.beliefs.size(); ++i) {
    const auto& b = network.beliefs[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (network.beliefs[j].id == b.id) issues.push_back({b.id, "belief id declared twice", {}});
    }
    for (const auto& v : validate_mass(b.mass)) issues.push_back({b.id, v.detail, {}});
    used = used.unite(b.mass.scope().vars());
  }
  for (const auto& var : network.variables.variables()) {
    if (!used.contains(var.name)) issues.push_back({var.name, "variable is not used by any belief", {}});
  }

  std::optional<MarkovTree> tree;
  if (network.tree) {
    tree = explicit_tree(*network.tree, issues);
    if (tree) {
      for (const auto& b : network.beliefs) {
        if (!tree->find(b.mass.scope().vars())) {
          issues.push_back({b.id, "scope " + b.mass.scope().to_string() + " is not a node of the tree", {}});
        }
      }
      for (const auto& n : tree->nodes()) {
        for (const auto& v : n.vars) {
          if (!network.variables.contains(v)) issues.push_back({"tree", "unknown variable '" + v + "'", {}});
        }
      }
    }
  }
  if (network.root && tree && !tree->find(*network.root)) {
    issues.push_back({"root", network.root->to_string() + " is not a node of the tree", {}});
  }
  return issues;
}

MarkovTree network_tree(const Network& network) {
  if (!network.tree) return build_tree(network.hypergraph());
  std::vector<Issue> issues;
  auto tree = explicit_tree(*network.tree, issues);
  if (!tree) throw ValidationError(std::move(issues));
  // Nodes without a belief carry vacuous priors.
  const auto hg = network.hypergraph();
  std::vector<TreeNode> nodes = tree->nodes();
  for (auto& n : nodes) {
    n.synthetic = std::find(hg.edges().begin(), hg.edges().end(), n.vars) == hg.edges().end();
  }
  return MarkovTree(std::move(nodes), tree->edges());
}

NodeId choose_root(const Network& network, const MarkovTree& tree, const std::optional<VarSet>& override_root) {
  const auto& wanted = override_root ? override_root : network.root;
  if (!wanted) return default_root(tree);
  auto id = tree.find(*wanted);
  if (!id) throw ValidationError({{"root", wanted->to_string() + " is not a node of the tree", {}}});
  return *id;
}

NodeAssignment assign_priors(const Network& network, const MarkovTree& tree) {
  NodeAssignment out;
  out.beliefs.assign(tree.size(), {});
  out.node_of_belief.resize(network.beliefs.size());
  std::vector<Issue> issues;
  for (std::size_t i = 0; i < network.beliefs.size(); ++i) {
    const auto& b = network.beliefs[i];
    auto node = tree.find(b.mass.scope().vars());
    if (!node) {
      issues.push_back({b.id, "scope " + b.mass.scope().to_string() + " is not a node of the tree", {}});
      continue;
    }
    out.node_of_belief[i] = *node;
    out.beliefs[*node].push_back(i);
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  out.priors.reserve(tree.size());
  for (NodeId v = 0; v < tree.size(); ++v) {
    auto [prior, used] = node_prior(network, out, tree, v);
    out.priors.push_back(std::move(prior));
    out.setup_combinations += used;
  }
  return out;
}

std::pair<MassFunction, std::size_t> node_prior(const Network& network, const NodeAssignment& assignment,
                                                const MarkovTree& tree, NodeId node) {
  const auto& ids = assignment.beliefs.at(node);
  if (ids.empty()) return {vacuous(network.variables.scope(tree.node(node).vars)), 0};
  MassFunction prior = network.beliefs[ids.front()].mass;
  std::size_t used = 0;
  for (std::size_t i = 1; i < ids.size(); ++i) {
    try {
      prior = combine(prior, network.beliefs[ids[i]].mass).mass;
    } catch (const TotalConflict&) {
      throw TotalConflict(node, Phase::setup);
    }
    ++used;
  }
  return {std::move(prior), used};
}

}  // namespace evprop
