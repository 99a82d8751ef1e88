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

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace evprop {

/// A set of variable names kept sorted and duplicate-free. This is the
/// structural view of a scope used by the tree algorithms, which never look
/// at frames.
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<std::string> names);
  explicit VarSet(std::vector<std::string> names);

  bool empty() const noexcept { return names_.empty(); }
  std::size_t size() const noexcept { return names_.size(); }
  auto begin() const noexcept { return names_.begin(); }
  auto end() const noexcept { return names_.end(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool contains(std::string_view name) const;
  bool is_subset_of(const VarSet& other) const;

  VarSet intersect(const VarSet& other) const;
  VarSet unite(const VarSet& other) const;
  VarSet without(std::string_view name) const;

  /// "{a,b}"
  std::string to_string() const;

  friend bool operator==(const VarSet&, const VarSet&) = default;
  friend auto operator<=>(const VarSet& a, const VarSet& b) { return a.names_ <=> b.names_; }

 private:
  std::vector<std::string> names_;
};

}  // namespace evprop
