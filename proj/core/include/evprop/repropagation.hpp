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

#include <set>
#include <utility>

#include "evprop/propagation.hpp"

namespace evprop {

/// What a prior change throws away.
///
/// For one changed node i and root r:
///   - up_messages: M(k -> parent(k)) for every k on the path from i to r;
///   - down_messages: M(parent(j) -> j) for every j off that path;
///   - cur: every node on the path, both ends included;
///   - intm: (parent(k), j) for k on the path below r and j right of k.
/// `changed_priors` lists the nodes whose prior was replaced; the Intm
/// entries stored at those nodes are rebuilt from the new prior as well.
struct DirtySet {
  std::set<DirectedEdge> up_messages;
  std::set<DirectedEdge> down_messages;
  std::set<NodeId> cur;
  std::set<std::pair<NodeId, NodeId>> intm;
  std::set<NodeId> changed_priors;

  bool empty() const noexcept {
    return up_messages.empty() && down_messages.empty() && cur.empty() && intm.empty() && changed_priors.empty();
  }
  std::size_t discarded_messages() const noexcept { return up_messages.size() + down_messages.size(); }
  void merge(const DirtySet& other);

  friend bool operator==(const DirtySet&, const DirtySet&) = default;
};

/// The invalidation rules for a change of the prior at `changed`.
DirtySet dirty_set_for(const RootedTree& tree, NodeId changed);

/// A propagation whose priors can be edited and re-propagated.
///
/// Mutating calls must be serialized by the caller.
class PropagationSession {
 public:
  PropagationSession(RootedTree tree, std::vector<MassFunction> priors);

  const RootedTree& tree() const noexcept { return engine_.tree(); }
  const Propagator& engine() const noexcept { return engine_; }
  const MassFunction& prior(NodeId node) const { return engine_.prior(node); }

  /// The initial full propagation.
  const PropagationResult& propagate(std::size_t setup_combinations = 0);

  /// The DirtySet `set_prior(node, m)` would produce; touches nothing.
  DirtySet preview(NodeId node, const MassFunction& m) const;

  /// Replaces the prior of `node` and discards what depends on it. Returns
  /// an empty set when `m` matches the current prior within 1e-12.
  /// Throws ScopeError (unknown node, scope mismatch), ValidationError
  /// (invalid m) and Error when nothing has been propagated yet.
  DirtySet set_prior(NodeId node, MassFunction m);

  /// Union of the changes since the last (re-)propagation.
  const DirtySet& pending() const noexcept { return pending_; }

  /// Recomputes only what was discarded.
  const PropagationResult& repropagate(std::size_t setup_combinations = 0);

  bool has_result() const noexcept { return result_.has_value(); }
  /// Throws Error when nothing has been propagated yet.
  const PropagationResult& result() const;

 private:
  void check_change(NodeId node, const MassFunction& m) const;

  Propagator engine_;
  DirtySet pending_;
  std::optional<PropagationResult> result_;
};

}  // namespace evprop
