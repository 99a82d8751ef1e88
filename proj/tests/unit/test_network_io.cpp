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

#include "evprop/dempster.hpp"
#include "evprop/network_io.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace evprop;
using namespace evprop::testing;

namespace {

const char* kBase = R"({
  "variables": [{"name": "a", "frame": [0, 1]}, {"name": "b", "frame": ["lo", "mid", "hi"]}],
  "beliefs": [
    {"id": "m_a", "scope": ["a"], "focal": [{"set": [[1]], "mass": 0.6}, {"set": "*", "mass": 0.4}]},
    {"id": "m_ab", "scope": ["b", "a"],
     "focal": [{"set": [["hi", 1], {"a": 0, "b": "lo"}], "mass": 0.7}, {"set": "*", "mass": 0.3}]}
  ]
})";

std::vector<Issue> issues_of(std::string_view text) {
  try {
    parse_network(text);
  } catch (const ValidationError& e) {
    return e.issues();
  }
  return {};
}

bool same_network(const Network& x, const Network& y) {
  if (x.variables.variables().size() != y.variables.variables().size()) return false;
  for (std::size_t i = 0; i < x.variables.variables().size(); ++i) {
    const auto& u = x.variables.variables()[i];
    const auto& v = y.variables.variables()[i];
    if (u.name != v.name || u.frame != v.frame) return false;
  }
  if (x.beliefs.size() != y.beliefs.size()) return false;
  for (std::size_t i = 0; i < x.beliefs.size(); ++i) {
    if (x.beliefs[i].id != y.beliefs[i].id) return false;
    if (!approx_equal(x.beliefs[i].mass, y.beliefs[i].mass, 0.0)) return false;
  }
  if (x.tree.has_value() != y.tree.has_value()) return false;
  if (x.tree && (x.tree->nodes != y.tree->nodes || x.tree->edges.size() != y.tree->edges.size())) return false;
  return x.root == y.root;
}

}  // namespace

TEST_CASE("positional and keyed tuples") {
  auto net = parse_network(kBase);
  REQUIRE(net.beliefs.size() == 2);
  const auto& m = net.beliefs[1].mass;
  CHECK(m.scope().vars() == VarSet{"a", "b"});
  // Sorted scope (a, b); b = hi is label 2, b = lo is label 0.
  CHECK(m.mass_of(ConfigSet::of(m.scope(), {m.scope().encode(Configuration{1, 2}), m.scope().encode(Configuration{0, 0})})) ==
        doctest::Approx(0.7));
  CHECK(net.variables.label("b", 1) == "mid");
}

TEST_CASE("the shipped networks load") {
  for (const char* name : {"net_a", "example1", "example2", "star", "fragment"}) {
    CAPTURE(name);
    CHECK_NOTHROW(load_network(name));
  }
}

TEST_CASE("render and parse round trip") {
  Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    Network net = i % 2 ? random_network(rng) : random_tree_network(rng, 6, 3);
    const std::string text = render_network(net);
    Network back = parse_network(text);
    CHECK(same_network(net, back));
    CHECK(render_network(back) == text);
  }
  auto net = load_network("example2");
  CHECK(render_network(parse_network(render_network(net))) == render_network(net));
}

TEST_CASE("mass sum error names the belief and its line") {
  const std::string text = R"({
  "variables": [{"name": "a", "frame": [0, 1]}],
  "beliefs": [
    {"id": "m_a", "scope": ["a"],
     "focal": [{"set": [[1]], "mass": 0.6}, {"set": "*", "mass": 0.5}]}
  ]
})";
  auto issues = issues_of(text);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].context == "m_a");
  CHECK(issues[0].message.find("1.1") != std::string::npos);
  CHECK(issues[0].line == std::optional<std::size_t>(4));
}

TEST_CASE("every problem is reported") {
  const std::string text = R"({
  "variables": [{"name": "a", "frame": [0, 1]}, {"name": "a", "frame": [0]}],
  "beliefs": [
    {"id": "x", "scope": ["z"], "focal": [{"set": "*", "mass": 1}]},
    {"id": "y", "scope": ["a"], "focal": [{"set": [[7]], "mass": 1}]},
    {"id": "w", "scope": ["a"], "focal": [{"set": [[0]], "mass": -0.5}, {"set": "*", "mass": 1.5}]}
  ]
})";
  auto issues = issues_of(text);
  CHECK(issues.size() >= 4);
  auto mentions = [&](std::string_view word) {
    for (const auto& i : issues) {
      if (i.to_string().find(word) != std::string::npos) return true;
    }
    return false;
  };
  CHECK(mentions("unknown variable 'z'"));
  CHECK(mentions("'7' is not in the frame"));
  CHECK(mentions("w"));
}

TEST_CASE("a tree without the Markov property names the separating node") {
  const std::string text = R"({
  "variables": [{"name": "a", "frame": [0, 1]}, {"name": "b", "frame": [0, 1]}, {"name": "c", "frame": [0, 1]}],
  "beliefs": [
    {"id": "x", "scope": ["a", "b"], "focal": [{"set": "*", "mass": 1}]},
    {"id": "y", "scope": ["b", "c"], "focal": [{"set": "*", "mass": 1}]}
  ],
  "tree": {"nodes": [["a", "b"], ["c"], ["b", "c"]], "edges": [[0, 1], [1, 2]]}
})";
  auto issues = issues_of(text);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].context == "tree");
  CHECK(issues[0].message.find("{c} separates {a,b} and {b,c}") != std::string::npos);
}

TEST_CASE("syntax errors carry a line") {
  auto issues = issues_of("{\n \"variables\": [\n  {\"name\": \"a\", \"frame\": [0,1]}\n  ]\n ],\n}");
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].line == std::optional<std::size_t>(5));
  CHECK(issues[0].message.find("syntax error") != std::string::npos);
  CHECK(issues_of("[1, 2]").size() == 1);
}

TEST_CASE("unused variables and oversized frames") {
  auto issues = issues_of(R"({"variables": [{"name": "a", "frame": [0, 1]}, {"name": "b", "frame": [0, 1]}],
    "beliefs": [{"id": "x", "scope": ["a"], "focal": [{"set": "*", "mass": 1}]}]})");
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].to_string().find("b") != std::string::npos);
  CHECK_THROWS_AS(parse_network(kBase, 4), FrameCapExceeded);
}

TEST_CASE("belief updates") {
  auto net = parse_network(kBase);
  auto m = parse_belief_update(net, "m_ab", R"({"focal": [{"set": [[0, "mid"]], "mass": 1}]})");
  CHECK(m.mass_of(ConfigSet::of(m.scope(), {m.scope().encode(Configuration{0, 1})})) == 1.0);
  auto keyed = parse_belief_update(net, "m_ab", R"({"scope": ["b", "a"], "focal": [{"set": [["mid", 0]], "mass": 1}]})");
  CHECK(approx_equal(m, keyed, 0.0));
  CHECK_THROWS_AS(parse_belief_update(net, "m_ab", R"({"focal": [{"set": "*", "mass": 0.5}]})"), ValidationError);
  CHECK_THROWS_AS(parse_belief_update(net, "m_ab", R"({"scope": ["a"], "focal": []})"), ValidationError);
  CHECK_THROWS_AS(parse_belief_update(net, "nope", R"({"focal": []})"), ValidationError);
  CHECK_THROWS_AS(parse_belief_update(net, "m_a", "{"), ValidationError);
}

TEST_CASE("variable lists") {
  CHECK(parse_var_list("b, a") == VarSet{"a", "b"});
  CHECK(parse_var_list("q") == VarSet{"q"});
  CHECK_THROWS_AS(parse_var_list(" , "), ValidationError);
}
