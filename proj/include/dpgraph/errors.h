// Copyright 2026 The dpgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPGRAPH_ERRORS_H_
#define DPGRAPH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dpgraph {

// Caller supplied a value outside an operation's domain. The CLI maps this
// family to exit code 2.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent run configuration.
class ConfigError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// Failures that depend on data rather than on arguments. Exit code 3.
class RuntimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

// A path references an edge the graph does not have.
class TopologyMismatchError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

// An analytic routine needs the full path set but got a truncated one.
class CompletenessError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

// Two paths share every edge, so their comparison carries no noise.
class DegenerateEnsembleError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// Exact q_beta requested for an ensemble whose paths share edges.
class OverlapError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

class IoError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

}  // namespace dpgraph

#endif  // DPGRAPH_ERRORS_H_
