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

#include <map>
#include <string>
#include <vector>

#include "evprop/markov_tree.hpp"
#include "evprop/network.hpp"

namespace evprop {

/// Combination of every prior of a network on the union of their scopes.
struct GlobalBelief {
  MassFunction mass;
  /// Product of the normalization constants of the individual steps.
  double cumulative_k = 1.0;
};

/// Left fold of combine over the beliefs in document order. Throws
/// TotalConflict::at_prior(i) when folding in belief i fails and
/// FrameCapExceeded when the union frame is over the cap.
GlobalBelief global_belief(const Network& network);

struct OracleMarginals {
  std::vector<MassFunction> node_marginals;
  std::map<std::string, MassFunction, std::less<>> variable_marginals;
};

/// Marginals of the global belief for every node of `tree` and every variable.
OracleMarginals oracle_marginals(const Network& network, const MarkovTree& tree);

}  // namespace evprop
