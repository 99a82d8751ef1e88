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

#include "evprop/config_set.hpp"
#include "evprop/errors.hpp"

using namespace evprop;

TEST_CASE("config set membership") {
  Scope s({{"a", 3}, {"b", 30}});
  auto set = ConfigSet::of(s, {0, 63, 64, 89});
  CHECK(set.count() == 4);
  CHECK(set.contains(64));
  CHECK_FALSE(set.contains(65));
  CHECK(set.members() == std::vector<std::size_t>{0, 63, 64, 89});
  CHECK_THROWS_AS(set.insert(90), ScopeError);
  CHECK(ConfigSet::full(s).count() == 90);
  CHECK(ConfigSet::full(s).is_full());
  CHECK(ConfigSet::empty_of(s).is_empty());
  CHECK(set.is_subset_of(ConfigSet::full(s)));
  CHECK(set.intersect(ConfigSet::of(s, {63, 1})) == ConfigSet::of(s, {63}));
}

TEST_CASE("projection and extension") {
  Scope ab({{"a", 2}, {"b", 3}});
  Scope b({{"b", 3}});
  // {(a0,b2), (a1,b0)}
  auto set = ConfigSet::of(ab, {2, 3});
  CHECK(project(set, b) == ConfigSet::of(b, {0, 2}));
  auto cyl = extend(ConfigSet::of(b, {1}), ab);
  CHECK(cyl == ConfigSet::of(ab, {1, 4}));
  CHECK(project(cyl, b) == ConfigSet::of(b, {1}));
  CHECK_THROWS_AS(project(set, Scope({{"c", 2}})), ScopeError);
  CHECK(projection_map(ab, b) == std::vector<std::size_t>{0, 1, 2, 0, 1, 2});
}

TEST_CASE("canonical order: cardinality then members") {
  Scope s({{"a", 4}});
  auto x = ConfigSet::of(s, {3});
  auto y = ConfigSet::of(s, {0, 1});
  auto z = ConfigSet::of(s, {0, 2});
  CHECK(canonical_less(x, y));
  CHECK(canonical_less(y, z));
  CHECK_FALSE(canonical_less(z, y));
}
