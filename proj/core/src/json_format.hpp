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

// JSON building blocks shared by the document parser, the reports and the
// workbench service. Not installed.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evprop/markov_tree.hpp"
#include "evprop/mass_function.hpp"
#include "evprop/propagation.hpp"
#include "evprop/scope.hpp"
#include "json.hpp"

namespace evprop::detail {

using Json = nlohmann::ordered_json;

/// Masses in reports are rounded to this many decimals.
inline constexpr int kMachineDecimals = 12;

double round_mass(double m);

/// A label as it appears in a document: integer when it reads as one.
Json label_json(const std::string& label);
/// Inverse of label_json; nullopt for anything but a string or an integer.
std::optional<std::string> label_from_json(const Json& j);

/// "*" for the full frame, otherwise an array of tuples in scope order.
Json set_json(const ConfigSet& set, const VariableTable& table);

/// Focal elements in canonical order as [{"set": ..., "mass": ...}].
Json mass_json(const MassFunction& m, const VariableTable& table, bool rounded);

Json var_set_json(const VarSet& vars);

/// Nodes with scope, parent and child order.
Json tree_json(const RootedTree& tree);

Json counter_json(const CombinationCounter& counter);

/// Appends one issue per problem found in a focal list. `declared` is the
/// tuple order for positional tuples. Returns the raw focal elements when
/// the list is well formed.
std::optional<std::vector<RawFocal>> parse_focal(const Json& focal, const Scope& scope,
                                                 const std::vector<std::string>& declared, const VariableTable& table,
                                                 const std::string& path, std::vector<Issue>& issues);

/// Line (1-based) of byte `offset` in `text`.
std::size_t line_at(std::string_view text, std::size_t offset);

}  // namespace evprop::detail
