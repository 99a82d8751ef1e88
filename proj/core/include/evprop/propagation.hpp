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

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evprop/errors.hpp"
#include "evprop/markov_tree.hpp"
#include "evprop/mass_function.hpp"
#include "evprop/network.hpp"

namespace evprop {

struct NodeTally {
  std::size_t up = 0;
  std::size_t down = 0;

  std::size_t total() const noexcept { return up + down; }
};

/// Number of Dempster combinations executed, attributed to the node whose
/// computation performed them. Setup work (merging priors that share a node)
/// is kept apart from the per-node tallies.
class CombinationCounter {
 public:
  CombinationCounter() = default;
  explicit CombinationCounter(std::size_t nodes) : nodes_(nodes) {}

  void record(NodeId node, Phase phase);
  void add_setup(std::size_t n) noexcept { setup_ += n; }

  std::size_t size() const noexcept { return nodes_.size(); }
  const NodeTally& node(NodeId id) const { return nodes_.at(id); }
  /// Sum of the per-node tallies.
  std::size_t total() const noexcept;
  std::size_t setup() const noexcept { return setup_; }

 private:
  std::vector<NodeTally> nodes_;
  std::size_t setup_ = 0;
};

/// K of one executed combination.
struct ConflictRecord {
  NodeId node = 0;
  Phase phase = Phase::up;
  double normalization = 1.0;
};

struct DirectedEdge {
  NodeId from = 0;
  NodeId to = 0;

  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// A cached mass function with its validity flag. A discarded entry keeps
/// its last value (for inspection) but must not be reused.
struct CacheSlot {
  std::optional<MassFunction> value;
  bool valid = false;

  void store(MassFunction m) {
    value = std::move(m);
    valid = true;
  }
};

/// Directed messages M(from -> to), each over the scope of its target node.
class MessageStore {
 public:
  bool valid(DirectedEdge edge) const;
  /// Throws std::out_of_range when the message was never computed.
  const MassFunction& value(DirectedEdge edge) const;
  void store(DirectedEdge edge, MassFunction m) { entries_[edge].store(std::move(m)); }
  void invalidate(DirectedEdge edge);

  const std::map<DirectedEdge, CacheSlot>& entries() const noexcept { return entries_; }
  std::size_t valid_count() const noexcept;

 private:
  std::map<DirectedEdge, CacheSlot> entries_;
};

/// Per-node caches: Cur (prior combined with every child message) and, for
/// the child at each position, Intm (prior combined with the messages of the
/// children to its left).
struct NodeCacheEntry {
  CacheSlot cur;
  std::vector<CacheSlot> intm;
};

using NodeCache = std::vector<NodeCacheEntry>;

struct PropagationResult {
  /// Marginal of the global belief function for every node.
  std::vector<MassFunction> node_marginals;
  /// Marginal for every variable, read from the smallest node holding it.
  std::map<std::string, MassFunction, std::less<>> variable_marginals;
  CombinationCounter counter;
  std::vector<ConflictRecord> conflicts;
  MessageStore messages;
  NodeCache cache;
};

/// Throws UnknownVariable.
const MassFunction& variable_marginal(const PropagationResult& result, std::string_view variable);

/// The marginal of `variable` read from a specific node. Throws ScopeError
/// when the node does not hold the variable.
MassFunction variable_marginal_at(const PropagationResult& result, NodeId node, std::string_view variable);

/// For each variable, the node its marginal is read from: smallest frame,
/// then lowest id.
std::map<std::string, NodeId, std::less<>> variable_homes(const RootedTree& tree,
                                                         const std::vector<MassFunction>& priors);

/// The cached two-sweep scheduler. Keeps messages, Cur/Intm caches and
/// marginals between runs: `run()` recomputes only what has been
/// invalidated, so the first run is a full propagation and later runs are
/// re-propagations.
///
/// Combinations where one operand is vacuous are skipped and not counted.
class Propagator {
 public:
  Propagator(RootedTree tree, std::vector<MassFunction> priors);

  const RootedTree& tree() const noexcept { return tree_; }
  const std::vector<MassFunction>& priors() const noexcept { return priors_; }
  const MassFunction& prior(NodeId node) const { return priors_.at(node); }
  const MessageStore& messages() const noexcept { return messages_; }
  const NodeCache& cache() const noexcept { return cache_; }
  bool has_run() const noexcept { return has_run_; }

  /// Runs both sweeps over whatever is invalid. `setup_combinations` is
  /// reported in the counter's setup tally. Throws TotalConflict annotated
  /// with node and phase; the caches are then left partially updated.
  PropagationResult run(std::size_t setup_combinations = 0);

  /// Replaces a prior. Invalidates Cur and every Intm stored at the node;
  /// other invalidations are the caller's business.
  void replace_prior(NodeId node, MassFunction prior);
  void invalidate_message(DirectedEdge edge) { messages_.invalidate(edge); }
  void invalidate_cur(NodeId node) { cache_.at(node).cur.valid = false; }
  void invalidate_intm(NodeId parent, std::size_t position) { cache_.at(parent).intm.at(position).valid = false; }

 private:
  RootedTree tree_;
  std::vector<MassFunction> priors_;
  MessageStore messages_;
  NodeCache cache_;
  std::vector<CacheSlot> marginals_;
  std::map<std::string, NodeId, std::less<>> homes_;
  std::map<std::string, MassFunction, std::less<>> variable_marginals_;
  bool has_run_ = false;
};

/// Full cached propagation of a freshly assigned network.
PropagationResult propagate(const RootedTree& tree, const NodeAssignment& priors);

/// The straightforward scheduler: every message is rebuilt from the sender's
/// prior and all its other incoming messages, and every marginal from the
/// node's prior and all incoming messages. Message combinations are
/// attributed to the sender; a node's marginal to its parent (the root's
/// to itself).
PropagationResult propagate_naive(const RootedTree& tree, const NodeAssignment& priors);

/// M(from -> to): `source` marginalized to the shared variables and extended
/// to `to`. Vacuous when the scopes share nothing.
MassFunction make_message(const MassFunction& source, const Scope& to);

}  // namespace evprop
