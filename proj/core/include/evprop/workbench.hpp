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
#include <map>
#include <memory>
#include <string>

#include "evprop/scope.hpp"

namespace evprop {

struct ServiceRequest {
  std::string method;
  /// Path without the query string, e.g. "/sessions/s1".
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct ServiceResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
  std::map<std::string, std::string> headers;
};

/// In-memory propagation sessions behind a small JSON request/response API:
///
///   POST   /sessions                               network document -> session
///   GET    /sessions/{id}?facets=tree,marginals,stats,validity
///   POST   /sessions/{id}/beliefs/{belief}[?preview=1]   {"focal": [...]}
///   GET    /sessions/{id}/document                 current network document
///   DELETE /sessions/{id}
///
/// Every session response carries the session revision, in the body and in
/// the X-Evprop-Revision header. Errors are {"error": kind, "message": ...}
/// with status 400 (validation), 404 (unknown session, belief or route),
/// 409 (total conflict) or 422 (frame cap).
///
/// Thread-safe. Mutations of one session are serialized; reads and previews
/// share the session.
class Service {
 public:
  explicit Service(std::size_t frame_cap = kDefaultFrameCap);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  ServiceResponse handle(const ServiceRequest& request);

  std::size_t session_count() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace evprop
