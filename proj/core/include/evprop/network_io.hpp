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
#include <string_view>

#include "evprop/network.hpp"

namespace evprop {

/// Parses and validates a JSON network document:
///
///   {
///     "variables": [{"name": "a", "frame": [0, 1]}, ...],
///     "beliefs": [{"id": "m_a", "scope": ["a"],
///                  "focal": [{"set": [[1]], "mass": 0.6},
///                            {"set": "*", "mass": 0.4}]}, ...],
///     "tree": {"nodes": [["a"], ["a", "b"]], "edges": [[0, 1]]},   optional
///     "root": ["a", "b"]                                            optional
///   }
///
/// A tuple is either an array following the belief's "scope" order or an
/// object keyed by variable name. Labels are strings or integers.
///
/// Throws ValidationError listing every problem found (with the line and
/// JSON path where known) and FrameCapExceeded for oversized scopes.
Network parse_network(std::string_view text, std::size_t frame_cap = kDefaultFrameCap);

/// The document form of a network. Masses are written exactly, so
/// parse_network(render_network(n)) reproduces n.
std::string render_network(const Network& network);

/// Parses a replacement for belief `belief_id`: {"focal": [...]} with an
/// optional "scope" giving the tuple order (defaults to the belief's
/// scope in sorted order). Throws ValidationError.
MassFunction parse_belief_update(const Network& network, std::string_view belief_id, std::string_view text);

/// "a,b" -> {a,b}. Throws ValidationError on an empty list.
VarSet parse_var_list(std::string_view text);

}  // namespace evprop
