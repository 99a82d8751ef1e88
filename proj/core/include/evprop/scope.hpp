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
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evprop/var_set.hpp"

namespace evprop {

inline constexpr std::size_t kDefaultFrameCap = 65536;

/// A variable and its frame of value labels.
struct Variable {
  std::string name;
  std::vector<std::string> frame;
};

/// One configuration of a scope: a value index per scope variable, in
/// canonical scope order.
using Configuration = std::vector<std::size_t>;

/// An ordered set of variables together with their frame sizes.
///
/// Variables are kept in lexicographic order so a given variable set always
/// produces the same mixed-radix encoding; the last variable varies fastest.
/// Scopes are immutable and cheap to copy.
class Scope {
 public:
  struct Axis {
    std::string name;
    std::size_t size = 0;
  };

  /// An empty handle. Only useful as a placeholder; every operation other
  /// than `empty()` requires a constructed scope.
  Scope() = default;

  /// Throws ScopeError for empty/duplicate/zero-sized axes and
  /// FrameCapExceeded when the product frame exceeds `cap`.
  explicit Scope(std::vector<Axis> axes, std::size_t cap = kDefaultFrameCap);

  bool empty() const noexcept { return impl_ == nullptr; }
  std::size_t arity() const noexcept;
  const VarSet& vars() const;
  const std::string& name(std::size_t position) const;
  std::size_t radix(std::size_t position) const;
  std::size_t frame_size() const noexcept;
  std::size_t cap() const noexcept;

  std::optional<std::size_t> position(std::string_view name) const;
  bool contains(std::string_view name) const { return position(name).has_value(); }
  bool is_subset_of(const Scope& other) const;

  std::size_t encode(std::span<const std::size_t> digits) const;
  Configuration decode(std::size_t index) const;

  /// Union of two scopes; the cap is the smaller of the two caps.
  Scope unite(const Scope& other) const;
  /// Intersection, or nullopt when the scopes share no variable.
  std::optional<Scope> intersect(const Scope& other) const;
  /// The sub-scope over `vars`; throws ScopeError if `vars` is empty or not contained.
  Scope restrict_to(const VarSet& vars) const;

  std::string to_string() const { return vars().to_string(); }

  friend bool operator==(const Scope& a, const Scope& b);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// All configurations of `scope` in mixed-radix order.
std::vector<Configuration> enumerate_frame(const Scope& scope);

/// The declared variables of a network.
class VariableTable {
 public:
  explicit VariableTable(std::size_t frame_cap = kDefaultFrameCap) : frame_cap_(frame_cap) {}

  /// Throws ValidationError on a duplicate name, an empty frame or a
  /// repeated label.
  void add(Variable variable);

  bool contains(std::string_view name) const;
  const Variable& at(std::string_view name) const;
  const std::vector<Variable>& variables() const noexcept { return variables_; }
  std::size_t frame_cap() const noexcept { return frame_cap_; }

  /// Throws UnknownVariable, ScopeError or FrameCapExceeded.
  Scope scope(const VarSet& vars) const;
  Scope scope(std::initializer_list<std::string> names) const { return scope(VarSet(names)); }

  std::optional<std::size_t> label_index(std::string_view variable, std::string_view label) const;
  const std::string& label(std::string_view variable, std::size_t index) const;

 private:
  std::size_t frame_cap_;
  std::vector<Variable> variables_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace evprop
