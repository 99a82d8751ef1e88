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

#include "evprop/errors.hpp"

namespace evprop {

std::string Issue::to_string() const {
  std::string out;
  if (line) out += "line " + std::to_string(*line) + ": ";
  if (!context.empty()) out += context + ": ";
  out += message;
  return out;
}

namespace {

std::string summarize(const std::vector<Issue>& issues) {
  if (issues.empty()) return "validation failed";
  std::string out = issues.front().to_string();
  if (issues.size() > 1) out += " (and " + std::to_string(issues.size() - 1) + " more)";
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Issue> issues)
    : Error(summarize(issues)), issues_(std::move(issues)) {}

const char* to_string(Phase phase) noexcept {
  switch (phase) {
    case Phase::setup:
      return "setup";
    case Phase::up:
      return "up";
    case Phase::down:
      return "down";
    case Phase::oracle:
      return "oracle";
  }
  return "?";
}

TotalConflict::TotalConflict() : Error("total conflict: the mass functions are not combinable") {}

TotalConflict::TotalConflict(std::size_t node, Phase phase)
    : Error("total conflict at node " + std::to_string(node) + " during " +
            std::string(to_string(phase)) + " phase"),
      node_(node),
      phase_(phase) {}

TotalConflict TotalConflict::at_prior(std::size_t prior_index) {
  TotalConflict e("total conflict when folding prior #" + std::to_string(prior_index));
  e.prior_index_ = prior_index;
  e.phase_ = Phase::oracle;
  return e;
}

}  // namespace evprop
