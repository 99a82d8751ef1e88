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

#include "http_server.hpp"

#include <httplib.h>

namespace evprop {

namespace {

void forward(Service& service, const httplib::Request& req, httplib::Response& res) {
  ServiceRequest request{req.method, req.path, {}, req.body};
  for (const auto& [key, value] : req.params) request.query[key] = value;
  ServiceResponse response = service.handle(request);
  res.status = response.status;
  for (const auto& [key, value] : response.headers) res.set_header(key, value);
  res.set_content(response.body, response.content_type);
}

}  // namespace

void bind_service(httplib::Server& server, Service& service) {
  auto handler = [&service](const httplib::Request& req, httplib::Response& res) { forward(service, req, res); };
  server.Post(R"(/sessions)", handler);
  server.Get(R"(/sessions/([^/]+))", handler);
  server.Delete(R"(/sessions/([^/]+))", handler);
  server.Get(R"(/sessions/([^/]+)/document)", handler);
  server.Post(R"(/sessions/([^/]+)/beliefs/([^/]+))", handler);
}

bool serve(Service& service, const std::string& host, int port) {
  httplib::Server server;
  bind_service(server, service);
  return server.listen(host, port);
}

}  // namespace evprop
