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

#include "evprop/mass_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "evprop/errors.hpp"

namespace evprop {

MassFunction::MassFunction(Scope scope, std::vector<FocalElement> focal) : scope_(std::move(scope)) {
  for (const auto& f : focal) {
    if (!(f.set.scope() == scope_)) {
      throw ScopeError("focal set over " + f.set.scope().to_string() + " in a mass function over " +
                       scope_.to_string());
    }
  }
  std::sort(focal.begin(), focal.end(),
            [](const FocalElement& a, const FocalElement& b) { return BitOrder{}(a.set, b.set); });
  for (auto& f : focal) {
    if (!focal_.empty() && focal_.back().set == f.set) {
      focal_.back().mass += f.mass;
    } else {
      focal_.push_back(std::move(f));
    }
  }
}

double MassFunction::mass_of(const ConfigSet& set) const {
  auto it = std::lower_bound(focal_.begin(), focal_.end(), set,
                             [](const FocalElement& f, const ConfigSet& s) { return BitOrder{}(f.set, s); });
  if (it == focal_.end() || !(it->set == set)) return 0.0;
  return it->mass;
}

bool MassFunction::is_vacuous() const noexcept { return focal_.size() == 1 && focal_.front().set.is_full(); }

std::vector<FocalElement> MassFunction::canonical() const {
  std::vector<FocalElement> out(focal_.begin(), focal_.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const FocalElement& a, const FocalElement& b) { return canonical_less(a.set, b.set); });
  return out;
}

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::empty_focal:
      return "empty focal set";
    case ViolationKind::sum_mismatch:
      return "masses do not sum to 1";
    case ViolationKind::nonpositive_mass:
      return "non-positive mass";
    case ViolationKind::out_of_range:
      return "configuration index out of range";
    case ViolationKind::scope_mismatch:
      return "scope mismatch";
  }
  return "?";
}

namespace {

std::string format_sum(double sum) {
  std::ostringstream os;
  os.precision(12);
  os << sum;
  return os.str();
}

void check_sum(double sum, std::vector<Violation>& out) {
  if (std::abs(sum - 1.0) > kMassSumTolerance) {
    out.push_back({ViolationKind::sum_mismatch, "masses sum to " + format_sum(sum)});
  }
}

}  // namespace

std::vector<Violation> validate_mass(const MassFunction& m) {
  std::vector<Violation> out;
  if (m.scope().empty()) {
    out.push_back({ViolationKind::scope_mismatch, "mass function has no scope"});
    return out;
  }
  double sum = 0.0;
  std::size_t i = 0;
  for (const auto& f : m.focal()) {
    if (f.set.is_empty()) {
      out.push_back({ViolationKind::empty_focal, "focal element #" + std::to_string(i) + " is the empty set"});
    }
    if (!(f.mass > 0.0)) {
      out.push_back({ViolationKind::nonpositive_mass,
                     "focal element #" + std::to_string(i) + " has mass " + format_sum(f.mass)});
    }
    sum += f.mass;
    ++i;
  }
  check_sum(sum, out);
  return out;
}

std::vector<Violation> validate_mass(const Scope& scope, std::span<const RawFocal> focal) {
  std::vector<Violation> out;
  double sum = 0.0;
  for (std::size_t i = 0; i < focal.size(); ++i) {
    const auto& f = focal[i];
    const std::string where = "focal element #" + std::to_string(i);
    if (f.members.empty()) out.push_back({ViolationKind::empty_focal, where + " is the empty set"});
    for (auto idx : f.members) {
      if (idx >= scope.frame_size()) {
        out.push_back({ViolationKind::out_of_range,
                       where + " references configuration " + std::to_string(idx) + " of a frame of size " +
                           std::to_string(scope.frame_size())});
      }
    }
    if (!(f.mass > 0.0)) {
      out.push_back({ViolationKind::nonpositive_mass, where + " has mass " + format_sum(f.mass)});
    }
    sum += f.mass;
  }
  check_sum(sum, out);
  return out;
}

MassFunction make_mass(const Scope& scope, std::span<const RawFocal> focal) {
  auto violations = validate_mass(scope, focal);
  if (!violations.empty()) {
    std::vector<Issue> issues;
    for (auto& v : violations) issues.push_back({scope.to_string(), std::move(v.detail), {}});
    throw ValidationError(std::move(issues));
  }
  std::vector<FocalElement> elements;
  elements.reserve(focal.size());
  for (const auto& f : focal) elements.push_back({ConfigSet::of(scope, f.members), f.mass});
  return MassFunction(scope, std::move(elements));
}

MassFunction make_mass(const Scope& scope, std::initializer_list<RawFocal> focal) {
  return make_mass(scope, std::span<const RawFocal>(focal.begin(), focal.size()));
}

double belief(const MassFunction& m, const ConfigSet& a) {
  if (!(a.scope() == m.scope())) throw ScopeError("belief query over a different scope");
  if (a.is_empty()) throw ScopeError("belief of the empty set is undefined");
  double total = 0.0;
  for (const auto& f : m.focal()) {
    if (f.set.is_subset_of(a)) total += f.mass;
  }
  return total;
}

double max_abs_difference(const MassFunction& a, const MassFunction& b) {
  if (!(a.scope() == b.scope())) throw ScopeError("comparing mass functions over different scopes");
  // Both focal lists are in bit order; merge them.
  const auto fa = a.focal();
  const auto fb = b.focal();
  double worst = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  BitOrder less;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && less(fa[i].set, fb[j].set))) {
      worst = std::max(worst, std::abs(fa[i++].mass));
    } else if (i == fa.size() || less(fb[j].set, fa[i].set)) {
      worst = std::max(worst, std::abs(fb[j++].mass));
    } else {
      worst = std::max(worst, std::abs(fa[i++].mass - fb[j++].mass));
    }
  }
  return worst;
}

}  // namespace evprop
