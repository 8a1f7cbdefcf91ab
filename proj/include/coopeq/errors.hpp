// Copyright 2026 The coopeq Authors
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

#ifndef COOPEQ_ERRORS_HPP_
#define COOPEQ_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coopeq {

// Base of every error raised by the library. The CLI maps subclasses onto exit
// codes, so each failure family gets its own type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed inputs (exit code 2 at the CLI).
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidProfile : public InputError {
 public:
  using InputError::InputError;
};

class InvalidDistribution : public InputError {
 public:
  using InputError::InputError;
};

class InvalidGame : public InputError {
 public:
  using InputError::InputError;
};

class InvalidParameters : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// Aggravation evaluated outside x >= y, or a parameter outside its domain.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what, std::ptrdiff_t member = -1)
      : Error(what), member_(member) {}
  // Offending player index when raised from a coalition computation, else -1.
  std::ptrdiff_t member() const { return member_; }

 private:
  std::ptrdiff_t member_;
};

class AxiomViolation : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

// Numerical or search failures (exit code 3 at the CLI).
class SolverFailure : public Error {
 public:
  using Error::Error;
};

class NotParetoSolvable : public SolverFailure {
 public:
  using SolverFailure::SolverFailure;
};

class NotInducible : public SolverFailure {
 public:
  using SolverFailure::SolverFailure;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

}  // namespace coopeq

#endif  // COOPEQ_ERRORS_HPP_
