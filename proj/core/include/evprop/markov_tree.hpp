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

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "evprop/var_set.hpp"

namespace evprop {

using NodeId = std::size_t;

/// Scopes that carry prior belief functions, over a ground set of variables.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Duplicate hyperedges are collapsed, keeping the first occurrence.
  /// Throws ScopeError on an empty hyperedge.
  explicit Hypergraph(std::vector<VarSet> edges);

  const std::vector<VarSet>& edges() const noexcept { return edges_; }
  const VarSet& ground() const noexcept { return ground_; }

 private:
  std::vector<VarSet> edges_;
  VarSet ground_;
};

struct TreeNode {
  VarSet vars;
  /// Added by the construction rather than taken from the hypergraph.
  bool synthetic = false;
};

struct TreeEdge {
  NodeId a = 0;
  NodeId b = 0;
};

/// A tree of variable sets. Node ids are positions in `nodes()`, which is
/// also the fixed child order used once the tree is rooted.
class MarkovTree {
 public:
  MarkovTree() = default;
  /// Throws ScopeError for empty or duplicate node scopes and out-of-range edges.
  /// Tree shape is checked by verify_markov / root_at.
  MarkovTree(std::vector<TreeNode> nodes, std::vector<TreeEdge> edges);

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
  const TreeNode& node(NodeId id) const { return nodes_.at(id); }
  /// Neighbours in ascending id order.
  const std::vector<NodeId>& neighbours(NodeId id) const { return adjacency_.at(id); }

  std::optional<NodeId> find(const VarSet& vars) const;

  /// Connected with exactly size()-1 edges.
  bool is_tree() const;

 private:
  std::vector<TreeNode> nodes_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
};

/// A pair of nodes whose shared variables are missing from a node between them.
struct MarkovViolation {
  NodeId first = 0;
  NodeId second = 0;
  NodeId separator = 0;
};

struct MarkovCheck {
  bool ok = true;
  std::optional<MarkovViolation> violation;
};

/// Checks the separation form of the Markov property: for every pair of
/// distinct nodes and every node on the path between them, the pair's
/// intersection is contained in that node. Throws NotATree first if the
/// graph is not a tree.
MarkovCheck verify_markov(const MarkovTree& tree);

/// Running-intersection form: for each variable, the nodes containing it
/// induce a connected subtree. Equivalent to verify_markov; kept as an
/// independent check. Throws NotATree.
bool has_running_intersection(const MarkovTree& tree);

/// Arranges a hypergraph into a Markov tree by one-step look-ahead variable
/// elimination. Hyperedges come first, in hypergraph order, followed by the
/// synthetic nodes the construction needed.
MarkovTree build_tree(const Hypergraph& hypergraph);

/// The node with the most variables; ties go to the lexicographically smallest.
NodeId default_root(const MarkovTree& tree);

/// A Markov tree oriented toward a root, with a fixed child order.
class RootedTree {
 public:
  const MarkovTree& tree() const noexcept { return tree_; }
  std::size_t size() const noexcept { return tree_.size(); }
  NodeId root() const noexcept { return root_; }
  const VarSet& vars(NodeId id) const { return tree_.node(id).vars; }

  std::optional<NodeId> parent(NodeId id) const { return parent_.at(id); }
  std::span<const NodeId> children(NodeId id) const { return children_.at(id); }
  /// Children in reverse order.
  std::vector<NodeId> reversed_children(NodeId id) const;
  /// Index of `id` among its parent's children. Throws for the root.
  std::size_t child_position(NodeId id) const;
  std::span<const NodeId> left_siblings(NodeId id) const;
  std::span<const NodeId> right_siblings(NodeId id) const;

  bool is_leaf(NodeId id) const { return children_.at(id).empty(); }

  /// Every node after all of its children (leaves first, root last).
  const std::vector<NodeId>& up_order() const noexcept { return up_order_; }
  /// Every node before its children (root first).
  const std::vector<NodeId>& down_order() const noexcept { return down_order_; }

  /// Nodes from `id` up to and including the root.
  std::vector<NodeId> path_to_root(NodeId id) const;

 private:
  friend RootedTree root_at(const MarkovTree&, NodeId, std::span<const std::size_t>);

  MarkovTree tree_;
  NodeId root_ = 0;
  std::vector<std::optional<NodeId>> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::size_t> position_;
  std::vector<NodeId> up_order_;
  std::vector<NodeId> down_order_;
};

/// Orients every edge toward `root`. Children are ordered by `rank`
/// (default: node id). Throws ScopeError for an unknown root and NotATree.
RootedTree root_at(const MarkovTree& tree, NodeId root, std::span<const std::size_t> rank = {});

}  // namespace evprop
