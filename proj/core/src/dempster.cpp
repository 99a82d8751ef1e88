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

#include "evprop/dempster.hpp"

#include <map>

#include "evprop/errors.hpp"

namespace evprop {

namespace {

/// Focal sets of `m` cylinder-extended to `target`, sharing one projection map.
std::vector<FocalElement> extended_focal(const MassFunction& m, const Scope& target) {
  std::vector<FocalElement> out;
  out.reserve(m.size());
  if (m.scope() == target) {
    out.assign(m.focal().begin(), m.focal().end());
    return out;
  }
  const auto map = projection_map(target, m.scope());
  for (const auto& f : m.focal()) {
    ConfigSet set = ConfigSet::empty_of(target);
    for (std::size_t idx = 0; idx < map.size(); ++idx) {
      if (f.set.contains(map[idx])) set.insert(idx);
    }
    out.push_back({std::move(set), f.mass});
  }
  return out;
}

}  // namespace

CombinationResult combine(const MassFunction& m1, const MassFunction& m2) {
  const Scope joint = m1.scope().unite(m2.scope());
  const auto lhs = extended_focal(m1, joint);
  const auto rhs = extended_focal(m2, joint);

  std::map<ConfigSet, double, BitOrder> accumulated;
  double conflict = 0.0;
  for (const auto& a : lhs) {
    for (const auto& b : rhs) {
      const double product = a.mass * b.mass;
      ConfigSet c = a.set.intersect(b.set);
      if (c.is_empty()) {
        conflict += product;
      } else {
        accumulated[std::move(c)] += product;
      }
    }
  }

  const double k = 1.0 - conflict;
  if (k < kConflictThreshold) throw TotalConflict();

  std::vector<FocalElement> focal;
  focal.reserve(accumulated.size());
  for (auto& [set, mass] : accumulated) {
    const double normalized = mass / k;
    if (normalized == 0.0) continue;
    focal.push_back({set, normalized});
  }
  return {MassFunction(joint, std::move(focal)), k};
}

MassFunction marginalize(const MassFunction& m, const Scope& target) {
  if (target.empty()) throw ScopeError("cannot marginalize onto an empty scope");
  if (target == m.scope()) return m;
  const auto map = projection_map(m.scope(), target);
  std::vector<FocalElement> focal;
  focal.reserve(m.size());
  for (const auto& f : m.focal()) {
    ConfigSet set = ConfigSet::empty_of(target);
    for (auto member : f.set.members()) set.insert(map[member]);
    focal.push_back({std::move(set), f.mass});
  }
  return MassFunction(target, std::move(focal));
}

MassFunction vacuous(const Scope& scope) { return MassFunction(scope, {{ConfigSet::full(scope), 1.0}}); }

MassFunction extend(const MassFunction& m, const Scope& target) {
  if (!m.scope().is_subset_of(target)) {
    throw ScopeError(m.scope().to_string() + " is not a subset of " + target.to_string());
  }
  return MassFunction(target, extended_focal(m, target));
}

}  // namespace evprop
