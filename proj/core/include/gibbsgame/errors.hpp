// Copyright 2026 The GibbsGame Authors
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

#ifndef GIBBSGAME_ERRORS_HPP_
#define GIBBSGAME_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gibbsgame {

using JointAction = std::vector<int>;

// Error categories double as process exit codes for the command line tool.
enum class ErrorKind : int {
  kUsage = 1,
  kValidation = 2,
  kPrecondition = 3,
  kResourceCap = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what)
      : Error(ErrorKind::kUsage, what) {}
};

// Malformed input: out-of-range indices, bad table sizes, unparsable files.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::kValidation, what) {}
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class CapExceededError : public Error {
 public:
  CapExceededError(std::uint64_t requested, std::uint64_t cap)
      : Error(ErrorKind::kResourceCap,
              "joint-action count " + std::to_string(requested) +
                  " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

// The hypothesis of a structural result does not hold for the input.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::kPrecondition, what) {}
};

// A global potential is not a sum of clique-local terms over the graph.
// Carries the joint action where the recomposition residual is largest.
class NotGibbsError : public PreconditionError {
 public:
  NotGibbsError(JointAction witness, double residual);
  const JointAction& witness() const noexcept { return witness_; }
  double residual() const noexcept { return residual_; }

 private:
  JointAction witness_;
  double residual_;
};

class NotSymmetricError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NeighborhoodError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class MissingDifferenceError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NonErgodicError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InconsistentSchemeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Deterministic best-response play revisited a (state, next mover) pair.
class CycleError : public PreconditionError {
 public:
  CycleError(JointAction repeated, std::size_t step);
  const JointAction& repeated_state() const noexcept { return repeated_; }
  std::size_t step() const noexcept { return step_; }

 private:
  JointAction repeated_;
  std::size_t step_;
};

class MaxStepsError : public Error {
 public:
  explicit MaxStepsError(std::size_t max_steps)
      : Error(ErrorKind::kResourceCap,
              "best-response path exceeded " + std::to_string(max_steps) +
                  " steps") {}
};

std::string format_joint_action(const JointAction& x);

}  // namespace gibbsgame

#endif  // GIBBSGAME_ERRORS_HPP_
