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

#include <doctest.h>

#include "evprop/errors.hpp"
#include "evprop/mass_function.hpp"

using namespace evprop;

namespace {

bool has_kind(const std::vector<Violation>& v, ViolationKind kind) {
  for (const auto& x : v) {
    if (x.kind == kind) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validation of the bpa axioms") {
  Scope s({{"a", 2}});
  const std::vector<RawFocal> ok{{{1}, 0.6}, {{0, 1}, 0.4}};
  CHECK(validate_mass(s, ok).empty());
  const std::vector<RawFocal> sum{{{1}, 0.6}, {{0, 1}, 0.5}};
  CHECK(has_kind(validate_mass(s, sum), ViolationKind::sum_mismatch));
  const std::vector<RawFocal> empty{{{}, 0.5}, {{0, 1}, 0.5}};
  CHECK(has_kind(validate_mass(s, empty), ViolationKind::empty_focal));
  const std::vector<RawFocal> negative{{{1}, -0.1}, {{0, 1}, 1.1}};
  CHECK(has_kind(validate_mass(s, negative), ViolationKind::nonpositive_mass));
  const std::vector<RawFocal> range{{{2}, 1.0}};
  CHECK(has_kind(validate_mass(s, range), ViolationKind::out_of_range));
  const std::vector<RawFocal> close{{{1}, 0.6 + 5e-10}, {{0, 1}, 0.4}};
  CHECK(validate_mass(s, close).empty());
  CHECK_THROWS_AS(make_mass(s, sum), ValidationError);
}

TEST_CASE("repeated sets merge") {
  Scope s({{"a", 3}});
  auto m = make_mass(s, {{{1}, 0.25}, {{1}, 0.25}, {{0, 1, 2}, 0.5}});
  CHECK(m.size() == 2);
  CHECK(m.mass_of(ConfigSet::of(s, {1})) == doctest::Approx(0.5));
  CHECK(m.mass_of(ConfigSet::of(s, {2})) == 0.0);
}

TEST_CASE("belief sums the contained focal elements") {
  Scope s({{"a", 3}});
  auto m = make_mass(s, {{{0}, 0.2}, {{0, 1}, 0.3}, {{1, 2}, 0.1}, {{0, 1, 2}, 0.4}});
  CHECK(belief(m, ConfigSet::of(s, {0})) == doctest::Approx(0.2));
  CHECK(belief(m, ConfigSet::of(s, {0, 1})) == doctest::Approx(0.5));
  CHECK(belief(m, ConfigSet::full(s)) == doctest::Approx(1.0));
  CHECK(belief(m, ConfigSet::of(s, {2})) == 0.0);
  CHECK_THROWS_AS(belief(m, ConfigSet::empty_of(s)), ScopeError);
  CHECK_THROWS_AS(belief(m, ConfigSet::full(Scope({{"b", 2}}))), ScopeError);
}

TEST_CASE("vacuous detection, canonical order and comparison") {
  Scope s({{"a", 2}, {"b", 2}});
  auto w = make_mass(s, {{{0, 1, 2, 3}, 1.0}});
  CHECK(w.is_vacuous());
  auto m = make_mass(s, {{{0, 1, 2, 3}, 0.5}, {{3}, 0.2}, {{0, 3}, 0.3}});
  CHECK_FALSE(m.is_vacuous());
  auto c = m.canonical();
  REQUIRE(c.size() == 3);
  CHECK(c[0].set.count() == 1);
  CHECK(c[2].set.is_full());
  auto n = make_mass(s, {{{3}, 0.2 + 1e-13}, {{0, 3}, 0.3}, {{0, 1, 2, 3}, 0.5 - 1e-13}});
  CHECK(approx_equal(m, n, 1e-12));
  CHECK_FALSE(approx_equal(m, w, 1e-12));
  CHECK(max_abs_difference(m, w) == doctest::Approx(0.5));
}
