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

#include <algorithm>

#include "evprop/errors.hpp"
#include "evprop/markov_tree.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace evprop;
using namespace evprop::testing;

namespace {

bool covers(const MarkovTree& tree, const Hypergraph& h) {
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const VarSet& e) { return tree.find(e).has_value(); });
}

Hypergraph random_hypergraph(Rng& rng, std::size_t vars, std::size_t edges, std::size_t max_size) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<VarSet> out;
  VarSet used;
  for (std::size_t i = 0; i < edges || used.size() < vars; ++i) {
    auto pool = names;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::uniform_int_distribution<std::size_t>(1, max_size)(rng));
    out.emplace_back(pool);
    used = used.unite(out.back());
  }
  return Hypergraph(std::move(out));
}

}  // namespace

TEST_CASE("the example trees are Markov trees") {
  for (const auto& tree : {example1_tree(), example2_tree()}) {
    CHECK(tree.is_tree());
    auto check = verify_markov(tree);
    CHECK(check.ok);
    CHECK_FALSE(check.violation.has_value());
    CHECK(has_running_intersection(tree));
  }
}

TEST_CASE("a separator missing a shared variable is reported") {
  // {a,b} - {c} - {a,d}: {c} lies between two nodes sharing a.
  MarkovTree tree({{{"a", "b"}, false}, {{"c"}, false}, {{"a", "d"}, false}}, {{0, 1}, {1, 2}});
  auto check = verify_markov(tree);
  REQUIRE_FALSE(check.ok);
  REQUIRE(check.violation);
  CHECK(check.violation->separator == 1);
  CHECK(std::min(check.violation->first, check.violation->second) == 0);
  CHECK(std::max(check.violation->first, check.violation->second) == 2);
  CHECK_FALSE(has_running_intersection(tree));
}

TEST_CASE("non-trees are rejected") {
  MarkovTree cycle({{{"a"}, false}, {{"a", "b"}, false}, {{"b"}, false}}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(cycle.is_tree());
  CHECK_THROWS_AS(verify_markov(cycle), NotATree);
  MarkovTree split({{{"a"}, false}, {{"b"}, false}}, {});
  CHECK_THROWS_AS(verify_markov(split), NotATree);
  CHECK_THROWS_AS(root_at(split, 0), NotATree);
  CHECK_THROWS_AS(MarkovTree({{{"a"}, false}, {{"a"}, false}}, {{0, 1}}), ScopeError);
  CHECK_THROWS_AS(MarkovTree({{{"a"}, false}}, {{0, 3}}), ScopeError);
}

TEST_CASE("build_tree covers the example hypergraphs") {
  for (const auto& h : {example1_hypergraph(), example2_hypergraph()}) {
    auto tree = build_tree(h);
    CHECK(tree.is_tree());
    CHECK(covers(tree, h));
    CHECK(verify_markov(tree).ok);
    CHECK(has_running_intersection(tree));
    for (std::size_t i = 0; i < h.edges().size(); ++i) {
      CHECK(tree.node(i).vars == h.edges()[i]);
      CHECK_FALSE(tree.node(i).synthetic);
    }
  }
  // The first example network is already a tree of its hyperedges.
  CHECK(build_tree(example1_hypergraph()).size() == 5);
}

TEST_CASE("build_tree on random hypergraphs") {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto h = random_hypergraph(rng, std::uniform_int_distribution<std::size_t>(1, 7)(rng),
                                     std::uniform_int_distribution<std::size_t>(1, 8)(rng), 3);
    auto tree = build_tree(h);
    REQUIRE(tree.is_tree());
    CHECK(covers(tree, h));
    CHECK(verify_markov(tree).ok);
    CHECK(has_running_intersection(tree));
  }
}

TEST_CASE("both Markov checks agree on random labelled trees") {
  Rng rng(22);
  int violations = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    std::vector<TreeNode> nodes;
    std::vector<VarSet> seen;
    while (nodes.size() < n) {
      auto h = random_hypergraph(rng, 4, 1, 3);
      if (std::find(seen.begin(), seen.end(), h.edges()[0]) != seen.end()) continue;
      seen.push_back(h.edges()[0]);
      nodes.push_back({h.edges()[0], false});
    }
    std::vector<TreeEdge> edges;
    for (std::size_t k = 1; k < n; ++k) edges.push_back({std::uniform_int_distribution<std::size_t>(0, k - 1)(rng), k});
    MarkovTree tree(std::move(nodes), std::move(edges));
    const bool ok = verify_markov(tree).ok;
    CHECK(ok == has_running_intersection(tree));
    violations += ok ? 0 : 1;
  }
  CHECK(violations > 0);
}

TEST_CASE("default root and orientation") {
  auto tree = example2_tree();
  // {p,q,t} and {s,p,q} tie on size; {p,q,s} sorts first.
  CHECK(default_root(tree) == 11);
  auto rooted = root_at(tree, default_root(tree));
  CHECK(rooted.root() == 11);
  CHECK_FALSE(rooted.parent(11).has_value());
  CHECK(rooted.parent(10) == 11u);
  CHECK(std::vector<NodeId>(rooted.children(11).begin(), rooted.children(11).end()) == std::vector<NodeId>{5, 8, 10});
  CHECK(rooted.reversed_children(11) == std::vector<NodeId>{10, 8, 5});
  CHECK(rooted.child_position(8) == 1);
  CHECK(std::vector<NodeId>(rooted.left_siblings(8).begin(), rooted.left_siblings(8).end()) == std::vector<NodeId>{5});
  CHECK(std::vector<NodeId>(rooted.right_siblings(8).begin(), rooted.right_siblings(8).end()) == std::vector<NodeId>{10});
  CHECK(rooted.is_leaf(4));
  CHECK(rooted.path_to_root(4) == std::vector<NodeId>{4, 9, 6, 10, 11});
  CHECK(rooted.up_order().back() == 11);
  CHECK(rooted.down_order().front() == 11);
  CHECK_THROWS_AS(rooted.child_position(11), ScopeError);
  CHECK_THROWS_AS(root_at(tree, 12), ScopeError);

  std::vector<std::size_t> rank(12, 0);
  rank[5] = 2;
  rank[8] = 1;
  rank[10] = 0;
  auto ranked = root_at(tree, 11, rank);
  CHECK(std::vector<NodeId>(ranked.children(11).begin(), ranked.children(11).end()) == std::vector<NodeId>{10, 8, 5});
}

TEST_CASE("up order lists children before parents") {
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    auto net = random_tree_network(rng, 10, 3);
    std::vector<TreeNode> nodes;
    for (const auto& n : net.tree->nodes) nodes.push_back({n, false});
    MarkovTree tree(std::move(nodes), net.tree->edges);
    const NodeId root = std::uniform_int_distribution<NodeId>(0, tree.size() - 1)(rng);
    auto rooted = root_at(tree, root);
    std::vector<std::size_t> at(tree.size());
    for (std::size_t k = 0; k < rooted.up_order().size(); ++k) at[rooted.up_order()[k]] = k;
    for (NodeId v = 0; v < tree.size(); ++v) {
      if (auto p = rooted.parent(v)) CHECK(at[v] < at[*p]);
    }
  }
}
