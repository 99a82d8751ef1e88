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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "evprop/dempster.hpp"
#include "evprop/network_io.hpp"
#include "evprop/oracle.hpp"
#include "evprop/propagation.hpp"
#include "evprop/report.hpp"
#include "evprop/repropagation.hpp"
#include "http_server.hpp"

namespace evprop {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Loaded {
  Network network;
  MarkovTree tree;
  RootedTree rooted;
};

Loaded load(const std::string& path, const std::string& root) {
  Network network = parse_network(read_file(path));
  MarkovTree tree = network_tree(network);
  std::optional<VarSet> wanted;
  if (!root.empty()) wanted = parse_var_list(root);
  RootedTree rooted = root_at(tree, choose_root(network, tree, wanted));
  return {std::move(network), std::move(tree), std::move(rooted)};
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.6f", x);
  return buf;
}

std::string plain6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void print_diffs(std::ostream& out, const Network& network, const PropagationResult& before,
                 const PropagationResult& after) {
  for (const auto& var : network.variables.variables()) {
    const auto& a = variable_marginal(before, var.name);
    const auto& b = variable_marginal(after, var.name);
    std::vector<ConfigSet> sets;
    for (const auto& f : a.canonical()) sets.push_back(f.set);
    for (const auto& f : b.canonical()) {
      if (a.mass_of(f.set) == 0.0) sets.push_back(f.set);
    }
    std::sort(sets.begin(), sets.end(), canonical_less);
    for (const auto& set : sets) {
      const double m0 = a.mass_of(set);
      const double m1 = b.mass_of(set);
      out << var.name << ": " << format_set(set, network.variables) << " m=" << plain6(m0) << " -> " << plain6(m1);
      if (std::abs(m1 - m0) > kCompareTolerance) out << " (" << fixed6(m1 - m0) << ")";
      out << '\n';
    }
  }
}

int cmd_validate(const std::string& file, std::ostream& out) {
  Network network = parse_network(read_file(file));
  MarkovTree tree = network_tree(network);
  out << "ok: " << network.variables.variables().size() << " variables, " << network.beliefs.size() << " beliefs, "
      << tree.size() << " tree nodes\n";
  return kExitOk;
}

int cmd_tree(const std::string& file, const std::string& root, std::ostream& out) {
  Loaded l = load(file, root);
  out << render_tree(l.rooted);
  const auto check = verify_markov(l.tree);
  out << (check.ok ? "markov: ok\n" : "markov: violated\n");
  return check.ok ? kExitOk : kExitValidation;
}

int cmd_propagate(const std::string& file, const std::string& root, bool naive, bool stats, bool machine,
                  std::ostream& out) {
  Loaded l = load(file, root);
  const NodeAssignment assignment = assign_priors(l.network, l.tree);
  PropagationResult optimized = propagate(l.rooted, assignment);
  std::optional<PropagationResult> plain;
  if (naive || stats) plain = propagate_naive(l.rooted, assignment);

  ReportOptions options;
  options.stats = stats;
  if (stats) options.naive = &*plain;
  PropagationResult shown = naive ? *plain : optimized;
  // The counts table always puts the optimized scheduler first.
  shown.counter = optimized.counter;
  out << render_report(l.network, l.rooted, shown, machine ? ReportFormat::machine : ReportFormat::human, options);
  return kExitOk;
}

int cmd_oracle(const std::string& file, bool machine, std::ostream& out) {
  Loaded l = load(file, "");
  OracleMarginals m = oracle_marginals(l.network, l.tree);
  PropagationResult result;
  result.counter = CombinationCounter(l.tree.size());
  result.node_marginals = std::move(m.node_marginals);
  result.variable_marginals = std::move(m.variable_marginals);
  out << render_report(l.network, l.rooted, result, machine ? ReportFormat::machine : ReportFormat::human);
  return kExitOk;
}

int cmd_update(const std::string& file, const std::string& root, const std::string& belief_id,
               const std::string& with, bool stats, std::ostream& out) {
  Loaded l = load(file, root);
  const std::size_t index = l.network.belief_index(belief_id);
  NodeAssignment assignment = assign_priors(l.network, l.tree);
  PropagationSession session(l.rooted, assignment.priors);
  const PropagationResult before = session.propagate(assignment.setup_combinations);

  Network changed = l.network;
  changed.beliefs[index].mass = parse_belief_update(l.network, belief_id, read_file(with));
  const NodeId node = assignment.node_of_belief[index];
  auto [prior, setup] = node_prior(changed, assignment, l.tree, node);
  const DirtySet dirty = session.set_prior(node, prior);
  const PropagationResult& after = session.repropagate(dirty.empty() ? 0 : setup);
  const PropagationResult fresh = propagate(l.rooted, assign_priors(changed, l.tree));

  print_diffs(out, changed, before, after);
  out << "\nmessages discarded: " << dirty.discarded_messages() << " of " << 2 * (l.tree.size() - 1) << '\n';
  out << "combinations: repropagate " << after.counter.total() << ", fresh " << fresh.counter.total() << ", saved "
      << static_cast<long long>(fresh.counter.total()) - static_cast<long long>(after.counter.total()) << '\n';
  if (stats) {
    std::size_t width = 4;
    for (NodeId v = 0; v < l.rooted.size(); ++v) width = std::max(width, l.rooted.vars(v).to_string().size());
    char line[256];
    std::snprintf(line, sizeof line, "\n  %-*s  %11s  %9s\n", static_cast<int>(width), "node", "repropagate", "fresh");
    out << line;
    for (NodeId v = 0; v < l.rooted.size(); ++v) {
      std::snprintf(line, sizeof line, "  %-*s  %11zu  %9zu\n", static_cast<int>(width),
                    l.rooted.vars(v).to_string().c_str(), after.counter.node(v).total(), fresh.counter.node(v).total());
      out << line;
    }
  }
  return kExitOk;
}

void print_issues(std::ostream& err, const std::string& file, const ValidationError& e) {
  for (const auto& issue : e.issues()) {
    err << file;
    if (issue.line) err << ':' << *issue.line;
    err << ": " << issue.context << ": " << issue.message << '\n';
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Belief-function propagation on Markov trees"};
  app.require_subcommand(1);
  std::string file;
  std::string root;
  bool naive = false;
  bool stats = false;
  bool machine = false;
  std::string belief;
  std::string with;
  int port = kDefaultPort;
  std::string host = "127.0.0.1";

  auto* validate = app.add_subcommand("validate", "Check a network document");
  validate->add_option("file", file, "Network document")->required();

  auto* tree = app.add_subcommand("tree", "Print the Markov tree");
  tree->add_option("file", file, "Network document")->required();
  tree->add_option("--root", root, "Root node as comma-separated variables");

  auto* prop = app.add_subcommand("propagate", "Compute all marginals");
  prop->add_option("file", file, "Network document")->required();
  prop->add_option("--root", root, "Root node as comma-separated variables");
  prop->add_flag("--naive", naive, "Use the naive scheduler");
  prop->add_flag("--stats", stats, "Show combination counts, optimized vs naive");
  prop->add_flag("--machine", machine, "Deterministic JSON output");

  auto* oracle = app.add_subcommand("oracle", "Marginals by global combination");
  oracle->add_option("file", file, "Network document")->required();
  oracle->add_flag("--machine", machine, "Deterministic JSON output");

  auto* update = app.add_subcommand("update", "Change one belief and re-propagate");
  update->add_option("file", file, "Network document")->required();
  update->add_option("--root", root, "Root node as comma-separated variables");
  update->add_option("--belief", belief, "Belief id")->required();
  update->add_option("--with", with, "File holding {\"focal\": [...]}")->required();
  update->add_flag("--stats", stats, "Per-node combination counts");

  auto* serve_cmd = app.add_subcommand("serve", "Run the workbench service");
  serve_cmd->add_option("--port", port, "Port")->capture_default_str();
  serve_cmd->add_option("--host", host, "Interface")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitFailure;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*tree) return cmd_tree(file, root, out);
    if (*prop) return cmd_propagate(file, root, naive, stats, machine, out);
    if (*oracle) return cmd_oracle(file, machine, out);
    if (*update) return cmd_update(file, root, belief, with, stats, out);
    if (*serve_cmd) {
      Service service;
      err << "serving on http://" << host << ':' << port << '\n';
      if (!evprop::serve(service, host, port)) {
        err << "cannot listen on " << host << ':' << port << '\n';
        return kExitFailure;
      }
      return kExitOk;
    }
  } catch (const ValidationError& e) {
    print_issues(err, file, e);
    return kExitValidation;
  } catch (const TotalConflict& e) {
    err << file << ": " << e.what() << '\n';
    return kExitConflict;
  } catch (const FrameCapExceeded& e) {
    err << file << ": " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    err << file << ": " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace evprop
