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

#include "evprop/mass_function.hpp"

namespace evprop {

/// Below this normalization factor two mass functions are treated as not combinable.
inline constexpr double kConflictThreshold = 1e-12;

struct CombinationResult {
  MassFunction mass;
  /// K, the mass that survived the intersection step.
  double normalization = 1.0;

  double conflict() const noexcept { return 1.0 - normalization; }
};

/// Dempster's rule. The result lives on the union of both scopes and is
/// normalized. Throws TotalConflict when K is below kConflictThreshold.
CombinationResult combine(const MassFunction& m1, const MassFunction& m2);

/// Marginal of `m` on `target`, a non-empty sub-scope of m.scope().
/// Throws ScopeError otherwise.
MassFunction marginalize(const MassFunction& m, const Scope& target);

/// The vacuous belief function: the whole frame carries mass 1.
MassFunction vacuous(const Scope& scope);

/// Vacuous extension of `m` to a super-scope (every focal set is cylinder-extended).
MassFunction extend(const MassFunction& m, const Scope& target);

}  // namespace evprop
