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

#include "evprop/scope.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "evprop/errors.hpp"

namespace evprop {

struct Scope::Impl {
  VarSet vars;
  std::vector<std::size_t> radices;
  std::vector<std::size_t> strides;
  std::size_t size = 1;
  std::size_t cap = kDefaultFrameCap;
};

Scope::Scope(std::vector<Axis> axes, std::size_t cap) {
  if (axes.empty()) throw ScopeError("a scope needs at least one variable");
  std::sort(axes.begin(), axes.end(), [](const Axis& a, const Axis& b) { return a.name < b.name; });
  auto impl = std::make_shared<Impl>();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (i > 0 && axes[i].name == axes[i - 1].name) {
      throw ScopeError("variable '" + axes[i].name + "' appears twice in a scope");
    }
    if (axes[i].size == 0) throw ScopeError("variable '" + axes[i].name + "' has an empty frame");
    // Overflow-safe cap check.
    if (impl->size > cap / axes[i].size) {
      std::size_t requested = impl->size;
      for (std::size_t j = i; j < axes.size(); ++j) {
        requested = requested > SIZE_MAX / axes[j].size ? SIZE_MAX : requested * axes[j].size;
      }
      throw FrameCapExceeded(requested, cap);
    }
    impl->size *= axes[i].size;
    names.push_back(axes[i].name);
    impl->radices.push_back(axes[i].size);
  }
  impl->vars = VarSet(std::move(names));
  impl->strides.assign(axes.size(), 1);
  for (std::size_t i = axes.size() - 1; i > 0; --i) {
    impl->strides[i - 1] = impl->strides[i] * impl->radices[i];
  }
  impl->cap = cap;
  impl_ = std::move(impl);
}

std::size_t Scope::arity() const noexcept { return impl_ ? impl_->radices.size() : 0; }

const VarSet& Scope::vars() const {
  static const VarSet kEmpty;
  return impl_ ? impl_->vars : kEmpty;
}

const std::string& Scope::name(std::size_t position) const { return impl_->vars.names().at(position); }

std::size_t Scope::radix(std::size_t position) const { return impl_->radices.at(position); }

std::size_t Scope::frame_size() const noexcept { return impl_ ? impl_->size : 0; }

std::size_t Scope::cap() const noexcept { return impl_ ? impl_->cap : kDefaultFrameCap; }

std::optional<std::size_t> Scope::position(std::string_view name) const {
  if (!impl_) return std::nullopt;
  const auto& names = impl_->vars.names();
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

bool Scope::is_subset_of(const Scope& other) const {
  if (empty() || other.empty()) return false;
  for (std::size_t i = 0; i < arity(); ++i) {
    auto pos = other.position(name(i));
    if (!pos || other.radix(*pos) != radix(i)) return false;
  }
  return true;
}

std::size_t Scope::encode(std::span<const std::size_t> digits) const {
  if (digits.size() != arity()) throw ScopeError("configuration arity does not match scope " + to_string());
  std::size_t index = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= impl_->radices[i]) {
      throw ScopeError("value index out of range for variable '" + name(i) + "'");
    }
    index += digits[i] * impl_->strides[i];
  }
  return index;
}

Configuration Scope::decode(std::size_t index) const {
  if (index >= frame_size()) throw ScopeError("configuration index out of range for scope " + to_string());
  Configuration digits(arity());
  for (std::size_t i = 0; i < arity(); ++i) {
    digits[i] = (index / impl_->strides[i]) % impl_->radices[i];
  }
  return digits;
}

Scope Scope::unite(const Scope& other) const {
  if (empty()) return other;
  if (other.empty()) return *this;
  if (*this == other) return *this;
  std::vector<Axis> axes;
  for (std::size_t i = 0; i < arity(); ++i) axes.push_back({name(i), radix(i)});
  for (std::size_t i = 0; i < other.arity(); ++i) {
    auto pos = position(other.name(i));
    if (pos) {
      if (radix(*pos) != other.radix(i)) {
        throw ScopeError("variable '" + other.name(i) + "' has different frame sizes in two scopes");
      }
      continue;
    }
    axes.push_back({other.name(i), other.radix(i)});
  }
  return Scope(std::move(axes), std::min(cap(), other.cap()));
}

std::optional<Scope> Scope::intersect(const Scope& other) const {
  std::vector<Axis> axes;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (other.contains(name(i))) axes.push_back({name(i), radix(i)});
  }
  if (axes.empty()) return std::nullopt;
  return Scope(std::move(axes), cap());
}

Scope Scope::restrict_to(const VarSet& vars) const {
  if (vars.empty()) throw ScopeError("cannot restrict to an empty scope");
  std::vector<Axis> axes;
  for (const auto& v : vars) {
    auto pos = position(v);
    if (!pos) throw ScopeError(vars.to_string() + " is not a subset of " + to_string());
    axes.push_back({v, radix(*pos)});
  }
  return Scope(std::move(axes), cap());
}

bool operator==(const Scope& a, const Scope& b) {
  if (a.impl_ == b.impl_) return true;
  if (!a.impl_ || !b.impl_) return false;
  return a.impl_->vars == b.impl_->vars && a.impl_->radices == b.impl_->radices;
}

std::vector<Configuration> enumerate_frame(const Scope& scope) {
  std::vector<Configuration> out;
  out.reserve(scope.frame_size());
  for (std::size_t i = 0; i < scope.frame_size(); ++i) out.push_back(scope.decode(i));
  return out;
}

void VariableTable::add(Variable variable) {
  std::vector<Issue> issues;
  if (variable.name.empty()) issues.push_back({"variables", "variable name is empty", {}});
  if (contains(variable.name)) issues.push_back({variable.name, "variable declared twice", {}});
  if (variable.frame.empty()) issues.push_back({variable.name, "frame is empty", {}});
  std::set<std::string> seen;
  for (const auto& label : variable.frame) {
    if (!seen.insert(label).second) issues.push_back({variable.name, "frame label '" + label + "' repeated", {}});
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  index_.emplace(variable.name, variables_.size());
  variables_.push_back(std::move(variable));
}

bool VariableTable::contains(std::string_view name) const { return index_.find(name) != index_.end(); }

const Variable& VariableTable::at(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownVariable(std::string(name));
  return variables_[it->second];
}

Scope VariableTable::scope(const VarSet& vars) const {
  std::vector<Scope::Axis> axes;
  for (const auto& v : vars) axes.push_back({v, at(v).frame.size()});
  return Scope(std::move(axes), frame_cap_);
}

std::optional<std::size_t> VariableTable::label_index(std::string_view variable, std::string_view label) const {
  const auto& frame = at(variable).frame;
  auto it = std::find(frame.begin(), frame.end(), label);
  if (it == frame.end()) return std::nullopt;
  return static_cast<std::size_t>(it - frame.begin());
}

const std::string& VariableTable::label(std::string_view variable, std::size_t index) const {
  return at(variable).frame.at(index);
}

}  // namespace evprop
