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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "evprop/scope.hpp"

namespace evprop {

/// A subset of the product frame of a scope, stored as a bitset indexed by
/// the mixed-radix configuration encoding.
class ConfigSet {
 public:
  ConfigSet() = default;

  static ConfigSet empty_of(const Scope& scope);
  static ConfigSet full(const Scope& scope);
  /// Throws ScopeError on an index outside the frame.
  static ConfigSet of(const Scope& scope, std::span<const std::size_t> indices);
  static ConfigSet of(const Scope& scope, std::initializer_list<std::size_t> indices) {
    return of(scope, std::span<const std::size_t>(indices.begin(), indices.size()));
  }
  /// Members given as configurations (digits in scope order).
  static ConfigSet of_configurations(const Scope& scope, std::span<const Configuration> configs);

  const Scope& scope() const noexcept { return scope_; }

  bool contains(std::size_t index) const;
  void insert(std::size_t index);

  std::size_t count() const noexcept;
  bool is_empty() const noexcept;
  bool is_full() const noexcept;
  bool is_subset_of(const ConfigSet& other) const;

  /// Member indices in ascending order.
  std::vector<std::size_t> members() const;

  /// Intersection of two sets over the same scope.
  ConfigSet intersect(const ConfigSet& other) const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const ConfigSet& a, const ConfigSet& b) {
    return a.words_ == b.words_ && a.scope_ == b.scope_;
  }

 private:
  explicit ConfigSet(Scope scope);

  Scope scope_;
  std::vector<std::uint64_t> words_;
};

/// Orders sets by their bit pattern. Used to key focal-element maps.
struct BitOrder {
  bool operator()(const ConfigSet& a, const ConfigSet& b) const;
};

/// Canonical presentation order: smaller sets first, then lexicographic on
/// the ascending member list.
bool canonical_less(const ConfigSet& a, const ConfigSet& b);

/// Projection of `set` onto `target` (a sub-scope of set.scope()).
/// Throws ScopeError when target is not contained.
ConfigSet project(const ConfigSet& set, const Scope& target);

/// Cylinder extension of `set` to `target` (a super-scope of set.scope()).
/// Returns the input unchanged when the scopes are equal.
ConfigSet extend(const ConfigSet& set, const Scope& target);

/// For each configuration of `super`, the index of its projection onto
/// `sub`. Throws ScopeError unless sub is contained in super.
std::vector<std::size_t> projection_map(const Scope& super, const Scope& sub);

}  // namespace evprop
