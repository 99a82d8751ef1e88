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

#include "evprop/workbench.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <vector>

#include "evprop/dempster.hpp"
#include "evprop/network_io.hpp"
#include "evprop/repropagation.hpp"
#include "json_format.hpp"

namespace evprop {

using detail::Json;

namespace {

struct Session {
  Session(std::string session_id, Network net, RootedTree rooted, NodeAssignment assigned)
      : id(std::move(session_id)),
        network(std::move(net)),
        assignment(std::move(assigned)),
        engine(std::move(rooted), assignment.priors) {}

  std::string id;
  mutable std::shared_mutex mutex;
  Network network;
  NodeAssignment assignment;
  PropagationSession engine;
  std::uint64_t revision = 0;
  CombinationCounter last_propagate;
  std::optional<CombinationCounter> last_repropagate;
  std::optional<CombinationCounter> last_fresh;
};

/// Thrown inside handlers, turned into an error response.
struct HttpError {
  int status;
  std::string kind;
  std::string message;
  Json issues = Json::array();
};

ServiceResponse json_response(int status, const Json& body) {
  ServiceResponse r;
  r.status = status;
  r.body = body.dump(2) + "\n";
  return r;
}

Json issues_json(const std::vector<Issue>& issues) {
  Json out = Json::array();
  for (const auto& i : issues) {
    Json entry{{"context", i.context}, {"message", i.message}};
    entry["line"] = i.line ? Json(*i.line) : Json(nullptr);
    out.push_back(std::move(entry));
  }
  return out;
}

Json conflict_json(const TotalConflict& e) {
  Json out{{"error", "total_conflict"}, {"message", e.what()}};
  if (e.node()) out["node"] = *e.node();
  if (e.phase()) out["phase"] = to_string(*e.phase());
  return out;
}

Json marginals_json(const Session& s) {
  const auto& result = s.engine.result();
  Json vars = Json::object();
  for (const auto& var : s.network.variables.variables()) {
    auto it = result.variable_marginals.find(var.name);
    if (it != result.variable_marginals.end()) vars[var.name] = detail::mass_json(it->second, s.network.variables, false);
  }
  Json nodes = Json::array();
  for (NodeId v = 0; v < result.node_marginals.size(); ++v) {
    nodes.push_back(Json{{"id", v}, {"marginal", detail::mass_json(result.node_marginals[v], s.network.variables, false)}});
  }
  return Json{{"variables", std::move(vars)}, {"nodes", std::move(nodes)}};
}

Json edge_json(const RootedTree& tree, DirectedEdge e) {
  return Json{{"from", e.from}, {"to", e.to}, {"direction", tree.parent(e.from) == e.to ? "up" : "down"}};
}

/// Validity of every message and cache entry, with `overlay` marked invalid.
Json validity_json(const PropagationSession& engine, const DirtySet* overlay) {
  const auto& tree = engine.tree();
  const auto& store = engine.engine().messages();
  Json messages = Json::array();
  for (const auto& [edge, slot] : store.entries()) {
    bool valid = slot.valid;
    if (overlay && (overlay->up_messages.count(edge) || overlay->down_messages.count(edge))) valid = false;
    Json entry = edge_json(tree, edge);
    entry["valid"] = valid;
    messages.push_back(std::move(entry));
  }
  Json nodes = Json::array();
  const auto& cache = engine.engine().cache();
  for (NodeId v = 0; v < tree.size(); ++v) {
    bool cur = cache[v].cur.valid;
    const bool prior_changed = overlay && overlay->changed_priors.count(v);
    if (overlay && overlay->cur.count(v)) cur = false;
    Json intm = Json::array();
    const auto kids = tree.children(v);
    for (std::size_t p = 0; p < kids.size(); ++p) {
      bool valid = cache[v].intm[p].valid;
      if (prior_changed || (overlay && overlay->intm.count({v, kids[p]}))) valid = false;
      intm.push_back(Json{{"child", kids[p]}, {"valid", valid}});
    }
    nodes.push_back(Json{{"id", v}, {"cur", cur}, {"intm", std::move(intm)}});
  }
  return Json{{"messages", std::move(messages)}, {"nodes", std::move(nodes)}};
}

Json dirty_json(const RootedTree& tree, const DirtySet& dirty) {
  Json discarded = Json::array();
  std::set<DirectedEdge> gone;
  for (const auto* group : {&dirty.up_messages, &dirty.down_messages}) {
    for (const auto& e : *group) gone.insert(e);
  }
  for (const auto& e : gone) discarded.push_back(edge_json(tree, e));
  Json retained = Json::array();
  for (NodeId v = 0; v < tree.size(); ++v) {
    auto p = tree.parent(v);
    if (!p) continue;
    for (DirectedEdge e : {DirectedEdge{v, *p}, DirectedEdge{*p, v}}) {
      if (!gone.count(e)) retained.push_back(edge_json(tree, e));
    }
  }
  Json cur = Json::array();
  for (NodeId v : dirty.cur) cur.push_back(v);
  Json intm = Json::array();
  for (const auto& [parent, child] : dirty.intm) intm.push_back(Json{{"node", parent}, {"child", child}});
  Json changed = Json::array();
  for (NodeId v : dirty.changed_priors) changed.push_back(v);
  return Json{{"empty", dirty.empty()},
              {"discarded_messages", std::move(discarded)},
              {"retained_messages", std::move(retained)},
              {"cur", std::move(cur)},
              {"intm", std::move(intm)},
              {"changed_priors", std::move(changed)}};
}

Json deltas_json(const Network& network, const PropagationResult& before, const PropagationResult& after) {
  Json out = Json::object();
  for (const auto& var : network.variables.variables()) {
    auto a = before.variable_marginals.find(var.name);
    auto b = after.variable_marginals.find(var.name);
    if (a == before.variable_marginals.end() || b == after.variable_marginals.end()) continue;
    std::vector<ConfigSet> sets;
    for (const auto& f : a->second.canonical()) sets.push_back(f.set);
    for (const auto& f : b->second.canonical()) {
      if (a->second.mass_of(f.set) == 0.0) sets.push_back(f.set);
    }
    std::sort(sets.begin(), sets.end(), canonical_less);
    Json focal = Json::array();
    for (const auto& set : sets) {
      const double m0 = a->second.mass_of(set);
      const double m1 = b->second.mass_of(set);
      focal.push_back(Json{{"set", detail::set_json(set, network.variables)}, {"before", m0}, {"after", m1}, {"delta", m1 - m0}});
    }
    out[var.name] = Json{{"max_abs", max_abs_difference(a->second, b->second)}, {"focal", std::move(focal)}};
  }
  return out;
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(path);
  while (std::getline(in, part, '/')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

}  // namespace

struct Service::Impl {
  explicit Impl(std::size_t cap) : frame_cap(cap) {}

  std::size_t frame_cap;
  mutable std::shared_mutex mutex;
  std::map<std::string, std::shared_ptr<Session>> sessions;
  std::atomic<std::uint64_t> next_id{1};

  std::shared_ptr<Session> find(const std::string& id) const {
    std::shared_lock lock(mutex);
    auto it = sessions.find(id);
    if (it == sessions.end()) throw HttpError{404, "not_found", "unknown session '" + id + "'"};
    return it->second;
  }

  ServiceResponse with_revision(int status, Json body, const Session& s) const {
    body["revision"] = s.revision;
    auto r = json_response(status, body);
    r.headers["X-Evprop-Revision"] = std::to_string(s.revision);
    return r;
  }

  ServiceResponse create(const ServiceRequest& req) {
    Network network = parse_network(req.body, frame_cap);
    MarkovTree tree = network_tree(network);
    const NodeId root = choose_root(network, tree);
    RootedTree rooted = root_at(tree, root);
    NodeAssignment assignment = assign_priors(network, tree);
    const std::string id = "s" + std::to_string(next_id++);
    auto session = std::make_shared<Session>(id, std::move(network), std::move(rooted), std::move(assignment));
    const auto& result = session->engine.propagate(session->assignment.setup_combinations);
    session->last_propagate = result.counter;
    Json body{{"id", id},
              {"tree", detail::tree_json(session->engine.tree())},
              {"marginals", marginals_json(*session)},
              {"stats", Json{{"propagate", detail::counter_json(result.counter)}}}};
    auto response = with_revision(201, std::move(body), *session);
    std::unique_lock lock(mutex);
    sessions.emplace(id, std::move(session));
    return response;
  }

  ServiceResponse state(const Session& s, const ServiceRequest& req) const {
    std::shared_lock lock(s.mutex);
    std::string facets = "tree,marginals,stats,validity";
    if (auto it = req.query.find("facets"); it != req.query.end()) facets = it->second;
    Json body{{"id", s.id}};
    std::istringstream in(facets);
    std::string facet;
    while (std::getline(in, facet, ',')) {
      if (facet == "tree") {
        body["tree"] = detail::tree_json(s.engine.tree());
      } else if (facet == "marginals") {
        body["marginals"] = marginals_json(s);
      } else if (facet == "stats") {
        Json stats{{"propagate", detail::counter_json(s.last_propagate)}};
        stats["repropagate"] = s.last_repropagate ? detail::counter_json(*s.last_repropagate) : Json(nullptr);
        stats["fresh"] = s.last_fresh ? detail::counter_json(*s.last_fresh) : Json(nullptr);
        body["stats"] = std::move(stats);
      } else if (facet == "validity") {
        body["validity"] = validity_json(s.engine, nullptr);
      } else if (!facet.empty()) {
        throw HttpError{400, "bad_request", "unknown facet '" + facet + "'"};
      }
    }
    return with_revision(200, std::move(body), s);
  }

  ServiceResponse update(Session& s, const std::string& belief_id, const ServiceRequest& req) {
    bool preview = false;
    if (auto it = req.query.find("preview"); it != req.query.end()) preview = it->second == "1" || it->second == "true";
    if (preview) {
      std::shared_lock lock(s.mutex);
      return apply(s, belief_id, req.body, true);
    }
    std::unique_lock lock(s.mutex);
    return apply(s, belief_id, req.body, false);
  }

  /// Caller holds the session lock (shared for a preview).
  ServiceResponse apply(Session& s, const std::string& belief_id, const std::string& body, bool preview) {
    std::size_t index = s.network.beliefs.size();
    for (std::size_t i = 0; i < s.network.beliefs.size(); ++i) {
      if (s.network.beliefs[i].id == belief_id) index = i;
    }
    if (index == s.network.beliefs.size()) throw HttpError{404, "not_found", "unknown belief '" + belief_id + "'"};

    MassFunction mass = parse_belief_update(s.network, belief_id, body);
    Network changed = s.network;
    changed.beliefs[index].mass = std::move(mass);
    const NodeId node = s.assignment.node_of_belief[index];
    const auto& tree = s.engine.tree();

    auto [prior, setup] = node_prior(changed, s.assignment, tree.tree(), node);
    if (preview) {
      DirtySet dirty = s.engine.preview(node, prior);
      Json out{{"id", s.id}, {"preview", true}, {"node", node}, {"dirty", dirty_json(tree, dirty)},
               {"validity", validity_json(s.engine, &dirty)}};
      return with_revision(200, std::move(out), s);
    }

    const PropagationResult before = s.engine.result();
    PropagationSession backup = s.engine;
    DirtySet dirty = s.engine.set_prior(node, prior);
    Json out{{"id", s.id}, {"preview", false}, {"node", node}, {"dirty", dirty_json(tree, dirty)}};
    if (dirty.empty()) {
      out["marginals"] = marginals_json(s);
      out["deltas"] = deltas_json(s.network, before, before);
      out["stats"] = Json{{"repropagate", detail::counter_json(CombinationCounter(tree.size()))},
                          {"fresh", detail::counter_json(s.last_fresh.value_or(s.last_propagate))}};
      return with_revision(200, std::move(out), s);
    }
    try {
      s.engine.repropagate(setup);
    } catch (const TotalConflict&) {
      s.engine = std::move(backup);
      throw;
    }
    s.network = std::move(changed);
    s.assignment.priors[node] = s.engine.prior(node);
    ++s.revision;
    const auto& result = s.engine.result();
    const auto fresh = propagate(tree, assign_priors(s.network, tree.tree()));
    s.last_repropagate = result.counter;
    s.last_fresh = fresh.counter;
    out["marginals"] = marginals_json(s);
    out["deltas"] = deltas_json(s.network, before, result);
    out["stats"] = Json{{"repropagate", detail::counter_json(result.counter)}, {"fresh", detail::counter_json(fresh.counter)}};
    return with_revision(200, std::move(out), s);
  }

  ServiceResponse route(const ServiceRequest& req) {
    const auto parts = split_path(req.path);
    if (parts.empty() || parts[0] != "sessions") throw HttpError{404, "not_found", "no route for " + req.path};
    if (parts.size() == 1) {
      if (req.method != "POST") throw HttpError{405, "method_not_allowed", req.method + " " + req.path};
      return create(req);
    }
    auto session = find(parts[1]);
    if (parts.size() == 2) {
      if (req.method == "GET") return state(*session, req);
      if (req.method == "DELETE") {
        std::unique_lock lock(mutex);
        sessions.erase(parts[1]);
        return with_revision(200, Json{{"id", parts[1]}, {"deleted", true}}, *session);
      }
    } else if (parts.size() == 3 && parts[2] == "document" && req.method == "GET") {
      std::shared_lock lock(session->mutex);
      ServiceResponse r;
      r.body = render_network(session->network);
      r.headers["X-Evprop-Revision"] = std::to_string(session->revision);
      return r;
    } else if (parts.size() == 4 && parts[2] == "beliefs" && req.method == "POST") {
      try {
        return update(*session, parts[3], req);
      } catch (const TotalConflict& e) {
        std::shared_lock lock(session->mutex);
        return with_revision(409, conflict_json(e), *session);
      } catch (const ValidationError& e) {
        std::shared_lock lock(session->mutex);
        return with_revision(400, Json{{"error", "validation"}, {"message", e.what()}, {"issues", issues_json(e.issues())}},
                             *session);
      }
    }
    throw HttpError{404, "not_found", "no route for " + req.method + " " + req.path};
  }
};

Service::Service(std::size_t frame_cap) : impl_(std::make_unique<Impl>(frame_cap)) {}
Service::~Service() = default;

std::size_t Service::session_count() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->sessions.size();
}

ServiceResponse Service::handle(const ServiceRequest& request) {
  try {
    return impl_->route(request);
  } catch (const HttpError& e) {
    return json_response(e.status, Json{{"error", e.kind}, {"message", e.message}});
  } catch (const ValidationError& e) {
    return json_response(400, Json{{"error", "validation"}, {"message", e.what()}, {"issues", issues_json(e.issues())}});
  } catch (const TotalConflict& e) {
    return json_response(409, conflict_json(e));
  } catch (const FrameCapExceeded& e) {
    return json_response(422, Json{{"error", "frame_cap"}, {"message", e.what()}});
  } catch (const Error& e) {
    return json_response(400, Json{{"error", "bad_request"}, {"message", e.what()}});
  }
}

}  // namespace evprop
