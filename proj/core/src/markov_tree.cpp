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

#include "evprop/markov_tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "evprop/errors.hpp"

namespace evprop {

Hypergraph::Hypergraph(std::vector<VarSet> edges) {
  for (auto& e : edges) {
    if (e.empty()) throw ScopeError("hyperedges must be non-empty");
    if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) continue;
    ground_ = ground_.unite(e);
    edges_.push_back(std::move(e));
  }
}

MarkovTree::MarkovTree(std::vector<TreeNode> nodes, std::vector<TreeEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), adjacency_(nodes_.size()) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].vars.empty()) throw ScopeError("tree node " + std::to_string(i) + " has an empty scope");
    for (std::size_t j = 0; j < i; ++j) {
      if (nodes_[j].vars == nodes_[i].vars) {
        throw ScopeError("tree nodes " + std::to_string(j) + " and " + std::to_string(i) + " share the scope " +
                         nodes_[i].vars.to_string());
      }
    }
  }
  for (const auto& e : edges_) {
    if (e.a >= nodes_.size() || e.b >= nodes_.size()) throw ScopeError("tree edge references an unknown node");
    if (e.a == e.b) throw ScopeError("tree edge is a self-loop on node " + std::to_string(e.a));
    adjacency_[e.a].push_back(e.b);
    adjacency_[e.b].push_back(e.a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::optional<NodeId> MarkovTree::find(const VarSet& vars) const {
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].vars == vars) return i;
  }
  return std::nullopt;
}

bool MarkovTree::is_tree() const {
  if (nodes_.empty()) return false;
  if (edges_.size() + 1 != nodes_.size()) return false;
  std::vector<bool> seen(nodes_.size(), false);
  std::deque<NodeId> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == nodes_.size();
}

namespace {

void require_tree(const MarkovTree& tree) {
  if (tree.size() == 0) throw NotATree("the tree has no nodes");
  if (!tree.is_tree()) {
    throw NotATree("graph with " + std::to_string(tree.size()) + " nodes and " +
                   std::to_string(tree.edges().size()) + " edges is not a tree");
  }
}

/// Parent pointers of a BFS from `source`.
std::vector<std::optional<NodeId>> bfs_parents(const MarkovTree& tree, NodeId source) {
  std::vector<std::optional<NodeId>> parent(tree.size());
  std::vector<bool> seen(tree.size(), false);
  std::deque<NodeId> queue{source};
  seen[source] = true;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w : tree.neighbours(v)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return parent;
}

}  // namespace

MarkovCheck verify_markov(const MarkovTree& tree) {
  require_tree(tree);
  for (NodeId i = 0; i < tree.size(); ++i) {
    const auto parent = bfs_parents(tree, i);
    for (NodeId j = i + 1; j < tree.size(); ++j) {
      const VarSet shared = tree.node(i).vars.intersect(tree.node(j).vars);
      if (shared.empty()) continue;
      // Walk back from j toward i; every interior node must carry `shared`.
      for (NodeId v = *parent[j]; v != i; v = *parent[v]) {
        if (!shared.is_subset_of(tree.node(v).vars)) {
          return {false, MarkovViolation{i, j, v}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

bool has_running_intersection(const MarkovTree& tree) {
  require_tree(tree);
  VarSet all;
  for (const auto& n : tree.nodes()) all = all.unite(n.vars);
  for (const auto& var : all) {
    std::vector<bool> holds(tree.size());
    NodeId start = tree.size();
    std::size_t count = 0;
    for (NodeId v = 0; v < tree.size(); ++v) {
      holds[v] = tree.node(v).vars.contains(var);
      if (holds[v]) {
        ++count;
        if (start == tree.size()) start = v;
      }
    }
    std::vector<bool> seen(tree.size(), false);
    std::deque<NodeId> queue{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const NodeId v = queue.front();
      queue.pop_front();
      for (NodeId w : tree.neighbours(v)) {
        if (holds[w] && !seen[w]) {
          seen[w] = true;
          ++reached;
          queue.push_back(w);
        }
      }
    }
    if (reached != count) return false;
  }
  return true;
}

MarkovTree build_tree(const Hypergraph& hypergraph) {
  const auto& hyperedges = hypergraph.edges();
  if (hyperedges.empty()) return {};

  // Variable elimination. Each step removes the variable whose incident
  // hyperedges have the smallest union; that union becomes a clique.
  struct Clique {
    VarSet vars;
    std::string eliminated;
  };
  std::vector<Clique> cliques;
  std::vector<VarSet> working = hyperedges;
  std::vector<std::string> remaining = hypergraph.ground().names();
  while (!remaining.empty()) {
    std::size_t best = 0;
    VarSet best_union;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      VarSet u;
      for (const auto& w : working) {
        if (w.contains(remaining[i])) u = u.unite(w);
      }
      if (i == 0 || u.size() < best_union.size()) {
        best = i;
        best_union = std::move(u);
      }
    }
    const std::string var = remaining[best];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));

    std::vector<VarSet> next;
    for (auto& w : working) {
      if (!w.contains(var)) next.push_back(std::move(w));
    }
    VarSet rest = best_union.without(var);
    if (!rest.empty() && std::find(next.begin(), next.end(), rest) == next.end()) next.push_back(std::move(rest));
    working = std::move(next);
    cliques.push_back({std::move(best_union), var});
  }

  // Hyperedges keep their ids; cliques equal to a hyperedge are merged with it.
  std::vector<TreeNode> nodes;
  for (const auto& h : hyperedges) nodes.push_back({h, false});
  std::vector<NodeId> clique_node(cliques.size());
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    auto it = std::find_if(nodes.begin(), nodes.end(), [&](const TreeNode& n) { return n.vars == cliques[c].vars; });
    if (it != nodes.end()) {
      clique_node[c] = static_cast<NodeId>(it - nodes.begin());
    } else {
      clique_node[c] = nodes.size();
      nodes.push_back({cliques[c].vars, true});
    }
  }

  std::vector<std::set<NodeId>> adj(nodes.size());
  auto link = [&](NodeId a, NodeId b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  // A clique hangs off the clique of the first later-eliminated variable it
  // still contains; cliques with nothing left are component roots and are
  // chained to the final clique.
  const std::size_t last = cliques.size() - 1;
  for (std::size_t c = 0; c < last; ++c) {
    std::size_t parent = last;
    for (std::size_t d = c + 1; d < cliques.size(); ++d) {
      if (cliques[c].vars.contains(cliques[d].eliminated)) {
        parent = d;
        break;
      }
    }
    link(clique_node[c], clique_node[parent]);
  }

  // Remaining hyperedges attach as leaves to the smallest covering clique.
  for (NodeId h = 0; h < hyperedges.size(); ++h) {
    if (std::find(clique_node.begin(), clique_node.end(), h) != clique_node.end()) continue;
    std::optional<std::size_t> host;
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      if (!hyperedges[h].is_subset_of(cliques[c].vars)) continue;
      if (!host || cliques[c].vars.size() < cliques[*host].vars.size() ||
          (cliques[c].vars.size() == cliques[*host].vars.size() && cliques[c].vars < cliques[*host].vars)) {
        host = c;
      }
    }
    link(h, clique_node[*host]);
  }

  // Contract synthetic nodes that add nothing over a neighbour.
  std::vector<bool> alive(nodes.size(), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (NodeId u = hyperedges.size(); u < nodes.size(); ++u) {
      if (!alive[u]) continue;
      for (NodeId w : adj[u]) {
        if (!nodes[u].vars.is_subset_of(nodes[w].vars)) continue;
        for (NodeId x : adj[u]) {
          if (x == w) continue;
          adj[x].erase(u);
          link(x, w);
        }
        adj[w].erase(u);
        adj[u].clear();
        alive[u] = false;
        changed = true;
        break;
      }
    }
  }

  std::vector<NodeId> new_id(nodes.size(), 0);
  std::vector<TreeNode> kept;
  for (NodeId v = 0; v < nodes.size(); ++v) {
    if (!alive[v]) continue;
    new_id[v] = kept.size();
    kept.push_back(nodes[v]);
  }
  std::vector<TreeEdge> edges;
  for (NodeId v = 0; v < nodes.size(); ++v) {
    if (!alive[v]) continue;
    for (NodeId w : adj[v]) {
      if (v < w) edges.push_back({new_id[v], new_id[w]});
    }
  }
  return MarkovTree(std::move(kept), std::move(edges));
}

NodeId default_root(const MarkovTree& tree) {
  if (tree.size() == 0) throw NotATree("the tree has no nodes");
  NodeId best = 0;
  for (NodeId v = 1; v < tree.size(); ++v) {
    const auto& cand = tree.node(v).vars;
    const auto& cur = tree.node(best).vars;
    if (cand.size() > cur.size() || (cand.size() == cur.size() && cand < cur)) best = v;
  }
  return best;
}

std::vector<NodeId> RootedTree::reversed_children(NodeId id) const {
  const auto& ch = children_.at(id);
  return {ch.rbegin(), ch.rend()};
}

std::size_t RootedTree::child_position(NodeId id) const {
  if (!parent_.at(id)) throw ScopeError("the root has no siblings");
  return position_[id];
}

std::span<const NodeId> RootedTree::left_siblings(NodeId id) const {
  const auto& ch = children_[*parent_.at(id)];
  return std::span<const NodeId>(ch).first(child_position(id));
}

std::span<const NodeId> RootedTree::right_siblings(NodeId id) const {
  const auto& ch = children_[*parent_.at(id)];
  return std::span<const NodeId>(ch).subspan(child_position(id) + 1);
}

std::vector<NodeId> RootedTree::path_to_root(NodeId id) const {
  std::vector<NodeId> path{id};
  while (parent_.at(path.back())) path.push_back(*parent_[path.back()]);
  return path;
}

RootedTree root_at(const MarkovTree& tree, NodeId root, std::span<const std::size_t> rank) {
  if (root >= tree.size()) throw ScopeError("root " + std::to_string(root) + " is not a node of the tree");
  require_tree(tree);
  if (!rank.empty() && rank.size() != tree.size()) throw ScopeError("child rank must cover every node");

  RootedTree out;
  out.tree_ = tree;
  out.root_ = root;
  out.parent_ = bfs_parents(tree, root);
  out.children_.assign(tree.size(), {});
  out.position_.assign(tree.size(), 0);

  auto key = [&](NodeId v) { return rank.empty() ? v : rank[v]; };
  std::deque<NodeId> queue{root};
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    out.down_order_.push_back(v);
    auto& ch = out.children_[v];
    for (NodeId w : tree.neighbours(v)) {
      if (out.parent_[w] == v) ch.push_back(w);
    }
    std::stable_sort(ch.begin(), ch.end(), [&](NodeId a, NodeId b) { return key(a) < key(b); });
    for (std::size_t p = 0; p < ch.size(); ++p) {
      out.position_[ch[p]] = p;
      queue.push_back(ch[p]);
    }
  }
  out.up_order_.assign(out.down_order_.rbegin(), out.down_order_.rend());
  return out;
}

}  // namespace evprop
