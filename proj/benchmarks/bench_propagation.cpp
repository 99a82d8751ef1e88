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

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "evprop/dempster.hpp"
#include "evprop/propagation.hpp"
#include "evprop/repropagation.hpp"

using namespace evprop;

namespace {

/// A random tree of `n` nodes over binary link variables; node i holds
/// {e<i>, e<parent>} and a prior with every singleton focal.
struct Instance {
  RootedTree tree;
  std::vector<MassFunction> priors;
};

Instance make_instance(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  VariableTable table;
  for (std::size_t i = 0; i < n; ++i) table.add({"e" + std::to_string(i), {"0", "1"}});
  std::vector<VarSet> nodes{VarSet{"e0"}};
  std::vector<TreeEdge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    nodes.push_back(VarSet{"e" + std::to_string(i), "e" + std::to_string(parent)});
    edges.push_back({parent, i});
  }
  std::vector<TreeNode> tree_nodes;
  for (const auto& vars : nodes) tree_nodes.push_back({vars, false});
  MarkovTree tree(std::move(tree_nodes), edges);
  std::vector<MassFunction> priors;
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  for (const auto& vars : nodes) {
    const Scope scope = table.scope(vars);
    std::vector<RawFocal> focal;
    double total = 0.0;
    for (std::size_t k = 0; k <= scope.frame_size(); ++k) {
      const double w = weight(rng);
      total += w;
      if (k < scope.frame_size()) {
        focal.push_back({{k}, w});
      } else {
        std::vector<std::size_t> all(scope.frame_size());
        for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
        focal.push_back({all, w});
      }
    }
    for (auto& f : focal) f.mass /= total;
    priors.push_back(make_mass(scope, focal));
  }
  return {root_at(tree, 0), std::move(priors)};
}

void BM_Propagate(benchmark::State& state) {
  const auto inst = make_instance(static_cast<std::size_t>(state.range(0)), 1);
  std::size_t combinations = 0;
  for (auto _ : state) {
    Propagator engine(inst.tree, inst.priors);
    auto result = engine.run();
    combinations = result.counter.total();
    benchmark::DoNotOptimize(result);
  }
  state.counters["combinations"] = static_cast<double>(combinations);
}

void BM_PropagateNaive(benchmark::State& state) {
  const auto inst = make_instance(static_cast<std::size_t>(state.range(0)), 1);
  NodeAssignment assignment;
  assignment.priors = inst.priors;
  std::size_t combinations = 0;
  for (auto _ : state) {
    auto result = propagate_naive(inst.tree, assignment);
    combinations = result.counter.total();
    benchmark::DoNotOptimize(result);
  }
  state.counters["combinations"] = static_cast<double>(combinations);
}

void BM_Repropagate(benchmark::State& state) {
  const auto inst = make_instance(static_cast<std::size_t>(state.range(0)), 1);
  PropagationSession base(inst.tree, inst.priors);
  base.propagate();
  const NodeId leaf = static_cast<NodeId>(inst.tree.size() - 1);
  MassFunction changed = vacuous(inst.priors[leaf].scope());
  std::size_t combinations = 0;
  for (auto _ : state) {
    state.PauseTiming();
    PropagationSession session = base;
    state.ResumeTiming();
    session.set_prior(leaf, changed);
    combinations = session.repropagate().counter.total();
  }
  state.counters["combinations"] = static_cast<double>(combinations);
}

}  // namespace

BENCHMARK(BM_Propagate)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_PropagateNaive)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_Repropagate)->Arg(8)->Arg(32)->Arg(128);

BENCHMARK_MAIN();
