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

// A deliberately simple evaluator over explicit tuples of labels. It shares
// no code with the engine beyond reading its inputs, so it can act as the
// reference for the engine's results.

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "evprop/mass_function.hpp"
#include "evprop/network.hpp"

namespace evprop::testing {

using Tuple = std::vector<std::string>;
using TupleSet = std::set<Tuple>;

struct BruteMass {
  /// Sorted variable names; tuples follow this order.
  std::vector<std::string> vars;
  std::map<std::string, std::vector<std::string>> frames;
  std::map<TupleSet, double> focal;
};

BruteMass to_brute(const MassFunction& m, const VariableTable& table);

/// Throws std::domain_error when every product lands on the empty set.
BruteMass brute_combine(const BruteMass& a, const BruteMass& b);
/// Mass of the empty intersections, by a plain double loop.
double brute_conflict(const BruteMass& a, const BruteMass& b);
BruteMass brute_marginal(const BruteMass& m, const std::vector<std::string>& vars);
/// Fold of every belief in document order.
BruteMass brute_global(const Network& network);

/// Largest focal-wise difference; +inf when the variable lists differ.
double brute_distance(const BruteMass& a, const BruteMass& b);
double distance_to(const MassFunction& m, const BruteMass& reference, const VariableTable& table);

}  // namespace evprop::testing
