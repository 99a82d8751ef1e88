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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evprop/errors.hpp"
#include "evprop/markov_tree.hpp"
#include "evprop/mass_function.hpp"
#include "evprop/scope.hpp"

namespace evprop {

/// A prior belief function as declared in a network document.
struct Belief {
  std::string id;
  MassFunction mass;
};

/// A tree supplied by the document instead of being constructed.
struct TreeSpec {
  std::vector<VarSet> nodes;
  std::vector<TreeEdge> edges;
};

/// Variables with frames plus the prior belief functions over them.
struct Network {
  VariableTable variables;
  std::vector<Belief> beliefs;
  std::optional<TreeSpec> tree;
  std::optional<VarSet> root;

  /// Belief scopes in order of first appearance.
  Hypergraph hypergraph() const;
  /// Throws ValidationError for an unknown id.
  std::size_t belief_index(std::string_view id) const;
};

/// Every problem with a network: invalid masses, unused variables, a
/// non-Markov or non-covering explicit tree, an unknown root.
std::vector<Issue> validate_network(const Network& network);

/// The explicit tree when present (verified), otherwise build_tree over the
/// hypergraph. Throws ValidationError when the explicit tree fails.
MarkovTree network_tree(const Network& network);

/// Root override, else the document's root, else default_root. Throws
/// ValidationError when the requested root is not a node.
NodeId choose_root(const Network& network, const MarkovTree& tree, const std::optional<VarSet>& override_root = {});

/// Priors placed on tree nodes.
struct NodeAssignment {
  /// One prior per node, over the node's scope; vacuous where nothing was assigned.
  std::vector<MassFunction> priors;
  /// Indices into Network::beliefs absorbed by each node, in document order.
  std::vector<std::vector<std::size_t>> beliefs;
  /// Node holding each belief.
  std::vector<NodeId> node_of_belief;
  /// Combinations spent merging beliefs that share a node.
  std::size_t setup_combinations = 0;
};

/// Places each belief on the node with exactly its scope; beliefs sharing a
/// node are combined in document order. Throws ValidationError when a belief
/// has no node and TotalConflict (phase setup) when merging fails.
NodeAssignment assign_priors(const Network& network, const MarkovTree& tree);

/// Prior of `node` recombined from the network's current beliefs.
/// Returns the prior and the number of combinations it took.
std::pair<MassFunction, std::size_t> node_prior(const Network& network, const NodeAssignment& assignment,
                                                const MarkovTree& tree, NodeId node);

}  // namespace evprop
