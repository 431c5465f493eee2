// Copyright 2026 The Heliotrack Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HELIOTRACK_ERRORS_HPP
#define HELIOTRACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace heliotrack {

// Process exit codes used by the CLI: 2 validation, 3 infeasible/oversized,
// 4 internal inconsistency.
enum class ErrorCode : int {
  kValidation = 2,
  kInfeasible = 3,
  kInternal = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Bad inputs: malformed files, broken invariants, out-of-range arguments.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCode::kValidation, what) {}
};

class ParseError : public ValidationError {
 public:
  explicit ParseError(const std::string& what) : ValidationError(what) {}
};

class EmptyInputError : public ValidationError {
 public:
  explicit EmptyInputError(const std::string& what) : ValidationError(what) {}
};

class NonCommensurateError : public ValidationError {
 public:
  explicit NonCommensurateError(const std::string& what)
      : ValidationError(what) {}
};

class OutOfDomainError : public ValidationError {
 public:
  explicit OutOfDomainError(const std::string& what)
      : ValidationError(what) {}
};

class InvalidQueryError : public ValidationError {
 public:
  explicit InvalidQueryError(const std::string& what)
      : ValidationError(what) {}
};

class InvalidParamsError : public ValidationError {
 public:
  explicit InvalidParamsError(const std::string& what)
      : ValidationError(what) {}
};

// Well-formed inputs for which no answer exists or that exceed a hard limit.
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what)
      : Error(ErrorCode::kInfeasible, what) {}
};

class NoFeasibleIntervalError : public InfeasibleError {
 public:
  explicit NoFeasibleIntervalError(const std::string& what)
      : InfeasibleError(what) {}
};

class LengthExceedsExtentError : public InfeasibleError {
 public:
  explicit LengthExceedsExtentError(const std::string& what)
      : InfeasibleError(what) {}
};

class InstanceTooLargeError : public InfeasibleError {
 public:
  explicit InstanceTooLargeError(const std::string& what)
      : InfeasibleError(what) {}
};

class BudgetExceededError : public InfeasibleError {
 public:
  explicit BudgetExceededError(const std::string& what)
      : InfeasibleError(what) {}
};

class NotUnimodalError : public InfeasibleError {
 public:
  explicit NotUnimodalError(const std::string& what)
      : InfeasibleError(what) {}
};

// A solver contradicted itself (e.g. a reconstructed plan does not reproduce
// the optimal value). Always a bug; never silently repaired.
class InternalInconsistencyError : public Error {
 public:
  explicit InternalInconsistencyError(const std::string& what)
      : Error(ErrorCode::kInternal, what) {}
};

}  // namespace heliotrack

#endif  // HELIOTRACK_ERRORS_HPP
