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
#include <span>
#include <string>
#include <vector>

#include "evprop/config_set.hpp"

namespace evprop {

/// Tolerance on the sum of masses when validating a bpa.
inline constexpr double kMassSumTolerance = 1e-9;
/// Tolerance for focal-by-focal comparisons inside the engine.
inline constexpr double kCompareTolerance = 1e-12;

struct FocalElement {
  ConfigSet set;
  double mass = 0.0;
};

/// A basic probability assignment over the product frame of a scope.
///
/// Construction does not validate (use validate_mass / make_mass for that);
/// repeated sets are merged by adding their masses. Focal elements are kept
/// in bit order, so two mass functions with the same content compare equal
/// element by element.
class MassFunction {
 public:
  MassFunction() = default;
  MassFunction(Scope scope, std::vector<FocalElement> focal);

  const Scope& scope() const noexcept { return scope_; }
  std::span<const FocalElement> focal() const noexcept { return focal_; }
  std::size_t size() const noexcept { return focal_.size(); }

  /// Mass assigned to `set`, 0 when it is not focal.
  double mass_of(const ConfigSet& set) const;

  /// True when the only focal element is the full frame.
  bool is_vacuous() const noexcept;

  /// Focal elements in canonical presentation order.
  std::vector<FocalElement> canonical() const;

 private:
  Scope scope_;
  std::vector<FocalElement> focal_;
};

enum class ViolationKind { empty_focal, sum_mismatch, nonpositive_mass, out_of_range, scope_mismatch };

struct Violation {
  ViolationKind kind;
  std::string detail;
};

const char* to_string(ViolationKind kind) noexcept;

/// Checks the bpa axioms. An empty result means the mass function is valid.
std::vector<Violation> validate_mass(const MassFunction& m);

/// Focal input as raw configuration indices, before it is packed into sets.
struct RawFocal {
  std::vector<std::size_t> members;
  double mass = 0.0;
};

/// Same checks as above plus out-of-range configuration indices.
std::vector<Violation> validate_mass(const Scope& scope, std::span<const RawFocal> focal);

/// Builds a validated mass function; throws ValidationError listing every violation.
MassFunction make_mass(const Scope& scope, std::span<const RawFocal> focal);
MassFunction make_mass(const Scope& scope, std::initializer_list<RawFocal> focal);

/// Bel(a): total mass of focal elements contained in `a`.
/// Throws ScopeError if `a` is empty or over a different scope.
double belief(const MassFunction& m, const ConfigSet& a);

/// Largest focal-by-focal absolute mass difference; a set missing on one
/// side counts as mass 0. Throws ScopeError when the scopes differ.
double max_abs_difference(const MassFunction& a, const MassFunction& b);

inline bool approx_equal(const MassFunction& a, const MassFunction& b, double tolerance) {
  return a.scope() == b.scope() && max_abs_difference(a, b) <= tolerance;
}

}  // namespace evprop
