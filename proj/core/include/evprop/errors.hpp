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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace evprop {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A variable name that is not declared in the variable table.
class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Malformed scope arguments: empty scopes, duplicates, h not a subset of g.
class ScopeError : public Error {
 public:
  using Error::Error;
};

/// A product frame larger than the configured cap.
class FrameCapExceeded : public Error {
 public:
  FrameCapExceeded(std::size_t requested, std::size_t cap)
      : Error("product frame of " + std::to_string(requested) +
              " configurations exceeds the cap of " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// One problem found while validating user input. `context` names the
/// offending item (a belief id, a JSON path, a node).
struct Issue {
  std::string context;
  std::string message;
  std::optional<std::size_t> line;

  std::string to_string() const;
};

/// Input that failed validation. Carries every issue that was found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Issue> issues);
  const std::vector<Issue>& issues() const noexcept { return issues_; }

 private:
  std::vector<Issue> issues_;
};

/// The graph handed to a tree operation is disconnected or cyclic.
class NotATree : public Error {
 public:
  using Error::Error;
};

/// Propagation phase a combination belongs to.
enum class Phase { setup, up, down, oracle };

const char* to_string(Phase phase) noexcept;

/// Dempster's rule met K = 0: the operands are not combinable.
class TotalConflict : public Error {
 public:
  TotalConflict();
  TotalConflict(std::size_t node, Phase phase);
  /// Prefix index of a global fold (oracle).
  static TotalConflict at_prior(std::size_t prior_index);

  const std::optional<std::size_t>& node() const noexcept { return node_; }
  const std::optional<Phase>& phase() const noexcept { return phase_; }
  const std::optional<std::size_t>& prior_index() const noexcept { return prior_index_; }

 private:
  explicit TotalConflict(const std::string& what) : Error(what) {}

  std::optional<std::size_t> node_;
  std::optional<Phase> phase_;
  std::optional<std::size_t> prior_index_;
};

}  // namespace evprop
