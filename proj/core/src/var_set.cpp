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

#include "evprop/var_set.hpp"

#include <algorithm>
#include <iterator>

namespace evprop {

VarSet::VarSet(std::initializer_list<std::string> names) : VarSet(std::vector<std::string>(names)) {}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

bool VarSet::contains(std::string_view name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

bool VarSet::is_subset_of(const VarSet& other) const {
  return std::includes(other.names_.begin(), other.names_.end(), names_.begin(), names_.end());
}

VarSet VarSet::intersect(const VarSet& other) const {
  VarSet out;
  std::set_intersection(names_.begin(), names_.end(), other.names_.begin(), other.names_.end(),
                        std::back_inserter(out.names_));
  return out;
}

VarSet VarSet::unite(const VarSet& other) const {
  VarSet out;
  std::set_union(names_.begin(), names_.end(), other.names_.begin(), other.names_.end(),
                 std::back_inserter(out.names_));
  return out;
}

VarSet VarSet::without(std::string_view name) const {
  VarSet out;
  for (const auto& n : names_) {
    if (n != name) out.names_.push_back(n);
  }
  return out;
}

std::string VarSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ',';
    out += names_[i];
  }
  out += '}';
  return out;
}

}  // namespace evprop
