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

#include "evprop/markov_tree.hpp"
#include "evprop/network.hpp"

namespace evprop::testing {

/// Path of a document in the networks/ directory.
std::string network_path(const std::string& name);
std::string read_text(const std::string& path);
/// parse_network on networks/<name>.
Network load_network(const std::string& name);

Hypergraph example1_hypergraph();
Hypergraph example2_hypergraph();
/// The trees drawn for the two examples; node order follows the hyperedges,
/// with the added nodes of example 2 last.
MarkovTree example1_tree();
MarkovTree example2_tree();

/// Runs the evprop executable with `args`; returns the exit status and
/// fills `output` with stdout.
int run_tool(const std::string& args, std::string& output);

}  // namespace evprop::testing
