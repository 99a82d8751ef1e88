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
#include "evprop/scope.hpp"

using namespace evprop;

TEST_CASE("var sets are sorted and duplicate free") {
  VarSet s{"c", "a", "b", "a"};
  CHECK(s.names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(s.to_string() == "{a,b,c}");
  CHECK(s.contains("b"));
  CHECK_FALSE(s.contains("d"));
  CHECK(VarSet{"a"}.is_subset_of(s));
  CHECK(s.intersect(VarSet{"b", "d"}) == VarSet{"b"});
  CHECK(s.unite(VarSet{"d"}) == VarSet{"a", "b", "c", "d"});
  CHECK(s.without("a") == VarSet{"b", "c"});
}

TEST_CASE("mixed radix encoding, last variable fastest") {
  Scope s({{"b", 3}, {"a", 2}});
  REQUIRE(s.arity() == 2);
  CHECK(s.name(0) == "a");
  CHECK(s.name(1) == "b");
  CHECK(s.frame_size() == 6);
  const std::vector<std::size_t> a1b0{1, 0};
  const std::vector<std::size_t> a0b2{0, 2};
  CHECK(s.encode(a1b0) == 3);
  CHECK(s.encode(a0b2) == 2);
  for (std::size_t i = 0; i < s.frame_size(); ++i) CHECK(s.encode(s.decode(i)) == i);
  const auto all = enumerate_frame(s);
  REQUIRE(all.size() == 6);
  CHECK(all[1] == Configuration{0, 1});
}

TEST_CASE("scope construction errors") {
  CHECK_THROWS_AS(Scope({{"a", 2}, {"a", 2}}), ScopeError);
  CHECK_THROWS_AS(Scope({{"a", 0}}), ScopeError);
  CHECK_THROWS_AS(Scope(std::vector<Scope::Axis>{}), ScopeError);
  CHECK_THROWS_AS(Scope({{"a", 300}, {"b", 300}}), FrameCapExceeded);
  CHECK_NOTHROW(Scope({{"a", 256}, {"b", 256}}));
  try {
    Scope({{"a", 4}, {"b", 4}}, 10);
    FAIL("expected cap error");
  } catch (const FrameCapExceeded& e) {
    CHECK(e.requested() == 16);
    CHECK(e.cap() == 10);
  }
}

TEST_CASE("scope union, intersection and restriction") {
  Scope ab({{"a", 2}, {"b", 3}});
  Scope bc({{"b", 3}, {"c", 2}});
  CHECK(ab.unite(bc).vars() == VarSet{"a", "b", "c"});
  CHECK(ab.unite(bc).frame_size() == 12);
  auto shared = ab.intersect(bc);
  REQUIRE(shared);
  CHECK(shared->vars() == VarSet{"b"});
  CHECK_FALSE(ab.intersect(Scope({{"z", 2}})).has_value());
  CHECK(ab.restrict_to(VarSet{"b"}).frame_size() == 3);
  CHECK_THROWS_AS(ab.restrict_to(VarSet{"c"}), ScopeError);
  CHECK(Scope({{"b", 3}}).is_subset_of(ab));
  CHECK(ab == Scope({{"b", 3}, {"a", 2}}));
}

TEST_CASE("variable table") {
  VariableTable t;
  t.add({"a", {"x", "y"}});
  CHECK_THROWS_AS(t.add({"a", {"x"}}), ValidationError);
  CHECK_THROWS_AS(t.add({"b", {}}), ValidationError);
  CHECK_THROWS_AS(t.add({"c", {"x", "x"}}), ValidationError);
  CHECK(t.contains("a"));
  CHECK_THROWS_AS(t.at("nope"), UnknownVariable);
  CHECK_THROWS_AS(t.scope({"nope"}), UnknownVariable);
  CHECK(t.label_index("a", "y") == 1);
  CHECK_FALSE(t.label_index("a", "z").has_value());
  CHECK(t.label("a", 0) == "x");
  CHECK(t.scope({"a"}).frame_size() == 2);
}
