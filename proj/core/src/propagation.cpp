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

#include "evprop/propagation.hpp"

#include <stdexcept>

#include "evprop/dempster.hpp"

namespace evprop {

void CombinationCounter::record(NodeId node, Phase phase) {
  auto& tally = nodes_.at(node);
  switch (phase) {
    case Phase::up:
      ++tally.up;
      break;
    case Phase::down:
      ++tally.down;
      break;
    default:
      ++setup_;
      break;
  }
}

std::size_t CombinationCounter::total() const noexcept {
  std::size_t sum = 0;
  for (const auto& t : nodes_) sum += t.total();
  return sum;
}

bool MessageStore::valid(DirectedEdge edge) const {
  auto it = entries_.find(edge);
  return it != entries_.end() && it->second.valid;
}

const MassFunction& MessageStore::value(DirectedEdge edge) const {
  auto it = entries_.find(edge);
  if (it == entries_.end() || !it->second.value) {
    throw std::out_of_range("no message " + std::to_string(edge.from) + "->" + std::to_string(edge.to));
  }
  return *it->second.value;
}

void MessageStore::invalidate(DirectedEdge edge) {
  auto it = entries_.find(edge);
  if (it != entries_.end()) it->second.valid = false;
}

std::size_t MessageStore::valid_count() const noexcept {
  std::size_t n = 0;
  for (const auto& [edge, slot] : entries_) n += slot.valid ? 1 : 0;
  return n;
}

const MassFunction& variable_marginal(const PropagationResult& result, std::string_view variable) {
  auto it = result.variable_marginals.find(variable);
  if (it == result.variable_marginals.end()) throw UnknownVariable(std::string(variable));
  return it->second;
}

MassFunction variable_marginal_at(const PropagationResult& result, NodeId node, std::string_view variable) {
  const auto& m = result.node_marginals.at(node);
  return marginalize(m, m.scope().restrict_to(VarSet{std::string(variable)}));
}

std::map<std::string, NodeId, std::less<>> variable_homes(const RootedTree& tree,
                                                         const std::vector<MassFunction>& priors) {
  std::map<std::string, NodeId, std::less<>> homes;
  for (NodeId v = 0; v < tree.size(); ++v) {
    for (const auto& var : tree.vars(v)) {
      auto it = homes.find(var);
      if (it == homes.end() || priors[v].scope().frame_size() < priors[it->second].scope().frame_size()) {
        homes[var] = v;
      }
    }
  }
  return homes;
}

MassFunction make_message(const MassFunction& source, const Scope& to) {
  auto shared = source.scope().intersect(to);
  if (!shared) return vacuous(to);
  return extend(marginalize(source, *shared), to);
}

namespace {

/// Executes combinations, skipping vacuous operands, and books each one.
class Folder {
 public:
  Folder(CombinationCounter& counter, std::vector<ConflictRecord>& log) : counter_(counter), log_(log) {}

  MassFunction operator()(const MassFunction& acc, const MassFunction& next, NodeId node, Phase phase) {
    if (next.is_vacuous()) return acc.scope() == next.scope() ? acc : extend(acc, acc.scope().unite(next.scope()));
    if (acc.is_vacuous()) return acc.scope() == next.scope() ? next : extend(next, acc.scope().unite(next.scope()));
    CombinationResult r;
    try {
      r = combine(acc, next);
    } catch (const TotalConflict&) {
      throw TotalConflict(node, phase);
    }
    counter_.record(node, phase);
    log_.push_back({node, phase, r.normalization});
    return std::move(r.mass);
  }

  /// `acc` may be nil (nullopt), as in the R/Q accumulators.
  std::optional<MassFunction> operator()(const std::optional<MassFunction>& acc, const MassFunction& next, NodeId node,
                                         Phase phase) {
    if (!acc) return next;
    return (*this)(*acc, next, node, phase);
  }

 private:
  CombinationCounter& counter_;
  std::vector<ConflictRecord>& log_;
};

}  // namespace

Propagator::Propagator(RootedTree tree, std::vector<MassFunction> priors)
    : tree_(std::move(tree)), priors_(std::move(priors)), cache_(tree_.size()), marginals_(tree_.size()) {
  if (priors_.size() != tree_.size()) throw ScopeError("one prior per tree node is required");
  for (NodeId v = 0; v < tree_.size(); ++v) {
    if (!(priors_[v].scope().vars() == tree_.vars(v))) {
      throw ScopeError("prior of node " + std::to_string(v) + " is over " + priors_[v].scope().to_string() +
                       ", expected " + tree_.vars(v).to_string());
    }
    cache_[v].intm.resize(tree_.children(v).size());
  }
  homes_ = variable_homes(tree_, priors_);
}

void Propagator::replace_prior(NodeId node, MassFunction prior) {
  if (!(prior.scope() == priors_.at(node).scope())) {
    throw ScopeError("new prior is over " + prior.scope().to_string() + ", node " + std::to_string(node) +
                     " is over " + priors_[node].scope().to_string());
  }
  priors_[node] = std::move(prior);
  cache_[node].cur.valid = false;
  for (auto& slot : cache_[node].intm) slot.valid = false;
}

PropagationResult Propagator::run(std::size_t setup_combinations) {
  const std::size_t n = tree_.size();
  PropagationResult result;
  result.counter = CombinationCounter(n);
  result.counter.add_setup(setup_combinations);
  Folder fold(result.counter, result.conflicts);

  std::vector<bool> cur_changed(n, false);
  std::vector<bool> down_changed(n, false);
  std::vector<bool> marginal_changed(n, false);

  // Propagation up: rebuild Cur where it was discarded, resuming from the
  // first child whose message (or Intm) is no longer valid.
  for (NodeId v : tree_.up_order()) {
    auto& entry = cache_[v];
    if (entry.cur.valid) continue;
    const auto kids = tree_.children(v);
    std::size_t start = kids.size();
    for (std::size_t p = 0; p < kids.size(); ++p) {
      if (!messages_.valid({kids[p], v}) || !entry.intm[p].valid) {
        start = p;
        break;
      }
    }
    if (start == kids.size()) start = 0;
    while (start > 0 && !entry.intm[start].valid) --start;

    MassFunction running = start == 0 ? priors_[v] : *entry.intm[start].value;
    for (std::size_t p = start; p < kids.size(); ++p) {
      const NodeId k = kids[p];
      entry.intm[p].store(running);
      if (!messages_.valid({k, v})) messages_.store({k, v}, make_message(*cache_[k].cur.value, priors_[v].scope()));
      running = fold(running, messages_.value({k, v}), v, Phase::up);
    }
    entry.cur.store(std::move(running));
    cur_changed[v] = true;
  }

  // Propagation down: children are visited right to left so that R holds
  // the parent message combined with the messages of the right siblings.
  for (NodeId v : tree_.down_order()) {
    if (v == tree_.root() && (cur_changed[v] || !marginals_[v].valid)) {
      marginals_[v].store(*cache_[v].cur.value);
      marginal_changed[v] = true;
    }
    const auto kids = tree_.children(v);
    if (kids.empty()) continue;

    std::optional<std::size_t> last_needed;
    for (std::size_t s = 0; s < kids.size(); ++s) {
      if (!messages_.valid({v, kids[kids.size() - 1 - s]})) last_needed = s;
    }

    std::optional<MassFunction> r;
    if (auto parent = tree_.parent(v)) r = messages_.value({*parent, v});
    std::optional<MassFunction> q;
    for (std::size_t s = 0; s < kids.size(); ++s) {
      const std::size_t p = kids.size() - 1 - s;
      const NodeId k = kids[p];
      if (last_needed && s <= *last_needed && q) r = fold(r, *q, v, Phase::down);
      if (!messages_.valid({v, k})) {
        const MassFunction& intm = *cache_[v].intm[p].value;
        messages_.store({v, k}, make_message(r ? fold(intm, *r, v, Phase::down) : intm, priors_[k].scope()));
        down_changed[k] = true;
      }
      if (down_changed[k] || cur_changed[k] || !marginals_[k].valid) {
        marginals_[k].store(fold(*cache_[k].cur.value, messages_.value({v, k}), v, Phase::down));
        marginal_changed[k] = true;
      }
      q = messages_.value({k, v});
    }
  }

  for (const auto& [var, home] : homes_) {
    auto it = variable_marginals_.find(var);
    if (it == variable_marginals_.end() || marginal_changed[home]) {
      const auto& m = *marginals_[home].value;
      variable_marginals_.insert_or_assign(var, marginalize(m, m.scope().restrict_to(VarSet{var})));
    }
  }
  has_run_ = true;

  result.node_marginals.reserve(n);
  for (const auto& slot : marginals_) result.node_marginals.push_back(*slot.value);
  result.variable_marginals = variable_marginals_;
  result.messages = messages_;
  result.cache = cache_;
  return result;
}

PropagationResult propagate(const RootedTree& tree, const NodeAssignment& priors) {
  Propagator engine(tree, priors.priors);
  return engine.run(priors.setup_combinations);
}

PropagationResult propagate_naive(const RootedTree& tree, const NodeAssignment& assignment) {
  const auto& priors = assignment.priors;
  const std::size_t n = tree.size();
  if (priors.size() != n) throw ScopeError("one prior per tree node is required");

  PropagationResult result;
  result.counter = CombinationCounter(n);
  result.counter.add_setup(assignment.setup_combinations);
  result.cache.resize(n);
  Folder fold(result.counter, result.conflicts);

  auto neighbours = [&](NodeId v) {
    std::vector<NodeId> out(tree.children(v).begin(), tree.children(v).end());
    if (auto parent = tree.parent(v)) out.push_back(*parent);
    return out;
  };
  // Prior of `from` combined with every incoming message except the one from `to`.
  auto send = [&](NodeId from, NodeId to, Phase phase) {
    MassFunction acc = priors[from];
    for (NodeId w : neighbours(from)) {
      if (w != to) acc = fold(acc, result.messages.value({w, from}), from, phase);
    }
    result.messages.store({from, to}, make_message(acc, priors[to].scope()));
  };

  for (NodeId v : tree.up_order()) {
    if (auto parent = tree.parent(v)) send(v, *parent, Phase::up);
  }
  for (NodeId v : tree.down_order()) {
    for (NodeId k : tree.children(v)) send(v, k, Phase::down);
  }

  result.node_marginals.resize(n);
  for (NodeId v : tree.down_order()) {
    const NodeId owner = tree.parent(v).value_or(v);
    MassFunction acc = priors[v];
    for (NodeId w : neighbours(v)) acc = fold(acc, result.messages.value({w, v}), owner, Phase::down);
    result.node_marginals[v] = std::move(acc);
  }

  for (const auto& [var, home] : variable_homes(tree, priors)) {
    const auto& m = result.node_marginals[home];
    result.variable_marginals.emplace(var, marginalize(m, m.scope().restrict_to(VarSet{var})));
  }
  return result;
}

}  // namespace evprop
