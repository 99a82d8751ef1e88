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

#include "evprop/repropagation.hpp"

#include <algorithm>

namespace evprop {

void DirtySet::merge(const DirtySet& other) {
  up_messages.insert(other.up_messages.begin(), other.up_messages.end());
  down_messages.insert(other.down_messages.begin(), other.down_messages.end());
  cur.insert(other.cur.begin(), other.cur.end());
  intm.insert(other.intm.begin(), other.intm.end());
  changed_priors.insert(other.changed_priors.begin(), other.changed_priors.end());
}

DirtySet dirty_set_for(const RootedTree& tree, NodeId changed) {
  if (changed >= tree.size()) throw ScopeError("unknown node " + std::to_string(changed));
  DirtySet out;
  out.changed_priors.insert(changed);
  const auto path = tree.path_to_root(changed);
  std::vector<bool> on_path(tree.size(), false);
  for (NodeId k : path) {
    on_path[k] = true;
    out.cur.insert(k);
    if (auto parent = tree.parent(k)) {
      out.up_messages.insert({k, *parent});
      for (NodeId j : tree.right_siblings(k)) out.intm.insert({*parent, j});
    }
  }
  for (NodeId j = 0; j < tree.size(); ++j) {
    if (on_path[j]) continue;
    out.down_messages.insert({*tree.parent(j), j});
  }
  return out;
}

PropagationSession::PropagationSession(RootedTree tree, std::vector<MassFunction> priors)
    : engine_(std::move(tree), std::move(priors)) {}

const PropagationResult& PropagationSession::propagate(std::size_t setup_combinations) {
  result_ = engine_.run(setup_combinations);
  pending_ = {};
  return *result_;
}

const PropagationResult& PropagationSession::result() const {
  if (!result_) throw Error("no completed propagation");
  return *result_;
}

void PropagationSession::check_change(NodeId node, const MassFunction& m) const {
  if (!result_) throw Error("no completed propagation");
  if (node >= tree().size()) throw ScopeError("unknown node " + std::to_string(node));
  if (!(m.scope() == engine_.prior(node).scope())) {
    throw ScopeError("new prior is over " + m.scope().to_string() + ", node is over " +
                     engine_.prior(node).scope().to_string());
  }
  auto violations = validate_mass(m);
  if (!violations.empty()) {
    std::vector<Issue> issues;
    for (auto& v : violations) issues.push_back({"node " + std::to_string(node), std::move(v.detail), {}});
    throw ValidationError(std::move(issues));
  }
}

DirtySet PropagationSession::preview(NodeId node, const MassFunction& m) const {
  check_change(node, m);
  if (approx_equal(m, engine_.prior(node), kCompareTolerance)) return {};
  return dirty_set_for(tree(), node);
}

DirtySet PropagationSession::set_prior(NodeId node, MassFunction m) {
  DirtySet dirty = preview(node, m);
  if (dirty.empty()) return dirty;
  engine_.replace_prior(node, std::move(m));
  for (const auto& e : dirty.up_messages) engine_.invalidate_message(e);
  for (const auto& e : dirty.down_messages) engine_.invalidate_message(e);
  for (NodeId v : dirty.cur) engine_.invalidate_cur(v);
  for (const auto& [parent, child] : dirty.intm) engine_.invalidate_intm(parent, tree().child_position(child));
  pending_.merge(dirty);
  return dirty;
}

const PropagationResult& PropagationSession::repropagate(std::size_t setup_combinations) {
  if (!result_) throw Error("no completed propagation");
  result_ = engine_.run(setup_combinations);
  pending_ = {};
  return *result_;
}

}  // namespace evprop
