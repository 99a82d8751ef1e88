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

#include <string>

#include "evprop/network.hpp"
#include "evprop/propagation.hpp"

namespace evprop {

enum class ReportFormat { human, machine };

struct ReportOptions {
  /// Include the combination counts.
  bool stats = false;
  /// A naive run of the same network, shown next to the optimized counts.
  const PropagationResult* naive = nullptr;
};

/// Human format: one line per focal element of every variable marginal,
///   b: {1} m=0.420000 Bel=0.420000
/// with `*` for the full frame. Machine format: deterministic JSON with
/// the document focal syntax, masses rounded to 12 decimals and the
/// counter tallies.
std::string render_report(const Network& network, const RootedTree& tree, const PropagationResult& result,
                          ReportFormat format, const ReportOptions& options = {});

/// `{1}`, `{0,2}`, `{(0,1),(1,1)}` or `*`.
std::string format_set(const ConfigSet& set, const VariableTable& table);

/// The rooted tree, one node per line, indented by depth.
std::string render_tree(const RootedTree& tree);

}  // namespace evprop
