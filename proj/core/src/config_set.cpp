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

#include "evprop/config_set.hpp"

#include <algorithm>
#include <bit>

#include "evprop/errors.hpp"

namespace evprop {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

std::uint64_t tail_mask(std::size_t bits) {
  const std::size_t rem = bits % kWordBits;
  return rem == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rem) - 1);
}

}  // namespace

ConfigSet::ConfigSet(Scope scope) : scope_(std::move(scope)), words_(word_count(scope_.frame_size()), 0) {}

ConfigSet ConfigSet::empty_of(const Scope& scope) { return ConfigSet(scope); }

ConfigSet ConfigSet::full(const Scope& scope) {
  ConfigSet out(scope);
  std::fill(out.words_.begin(), out.words_.end(), ~std::uint64_t{0});
  if (!out.words_.empty()) out.words_.back() &= tail_mask(scope.frame_size());
  return out;
}

ConfigSet ConfigSet::of(const Scope& scope, std::span<const std::size_t> indices) {
  ConfigSet out(scope);
  for (auto i : indices) out.insert(i);
  return out;
}

ConfigSet ConfigSet::of_configurations(const Scope& scope, std::span<const Configuration> configs) {
  ConfigSet out(scope);
  for (const auto& c : configs) out.insert(scope.encode(c));
  return out;
}

bool ConfigSet::contains(std::size_t index) const {
  if (index >= scope_.frame_size()) return false;
  return (words_[index / kWordBits] >> (index % kWordBits)) & 1u;
}

void ConfigSet::insert(std::size_t index) {
  if (index >= scope_.frame_size()) {
    throw ScopeError("configuration index " + std::to_string(index) + " out of range for scope " +
                     scope_.to_string());
  }
  words_[index / kWordBits] |= std::uint64_t{1} << (index % kWordBits);
}

std::size_t ConfigSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ConfigSet::is_empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool ConfigSet::is_full() const noexcept { return !scope_.empty() && count() == scope_.frame_size(); }

bool ConfigSet::is_subset_of(const ConfigSet& other) const {
  if (!(scope_ == other.scope_)) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<std::size_t> ConfigSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(w * kWordBits + static_cast<std::size_t>(b));
      bits &= bits - 1;
    }
  }
  return out;
}

ConfigSet ConfigSet::intersect(const ConfigSet& other) const {
  if (!(scope_ == other.scope_)) throw ScopeError("intersection of sets over different scopes");
  ConfigSet out(scope_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

bool BitOrder::operator()(const ConfigSet& a, const ConfigSet& b) const {
  const auto wa = a.words();
  const auto wb = b.words();
  return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
}

bool canonical_less(const ConfigSet& a, const ConfigSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  const auto ma = a.members();
  const auto mb = b.members();
  return ma < mb;
}

std::vector<std::size_t> projection_map(const Scope& super, const Scope& sub) {
  if (!sub.is_subset_of(super)) {
    throw ScopeError(sub.to_string() + " is not a subset of " + super.to_string());
  }
  // Stride of each super-scope axis inside the sub-scope encoding (0 if absent).
  const std::size_t arity = super.arity();
  std::vector<std::size_t> sub_stride(arity, 0);
  {
    std::size_t stride = 1;
    for (std::size_t i = sub.arity(); i-- > 0;) {
      sub_stride[*super.position(sub.name(i))] = stride;
      stride *= sub.radix(i);
    }
  }
  std::vector<std::size_t> out(super.frame_size());
  std::vector<std::size_t> digits(arity, 0);
  std::size_t sub_index = 0;
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    out[idx] = sub_index;
    // Odometer increment, last axis fastest.
    for (std::size_t i = arity; i-- > 0;) {
      if (++digits[i] < super.radix(i)) {
        sub_index += sub_stride[i];
        break;
      }
      sub_index -= sub_stride[i] * (super.radix(i) - 1);
      digits[i] = 0;
    }
  }
  return out;
}

ConfigSet project(const ConfigSet& set, const Scope& target) {
  if (target.empty()) throw ScopeError("cannot project onto an empty scope");
  if (target == set.scope()) return set;
  const auto map = projection_map(set.scope(), target);
  ConfigSet out = ConfigSet::empty_of(target);
  for (auto m : set.members()) out.insert(map[m]);
  return out;
}

ConfigSet extend(const ConfigSet& set, const Scope& target) {
  if (target == set.scope()) return set;
  const auto map = projection_map(target, set.scope());
  ConfigSet out = ConfigSet::empty_of(target);
  for (std::size_t idx = 0; idx < map.size(); ++idx) {
    if (set.contains(map[idx])) out.insert(idx);
  }
  return out;
}

}  // namespace evprop
