// Copyright 2026 The dppl Authors
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

#ifndef DPPL_ERRORS_HPP
#define DPPL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dppl {

// Bad argument values (non-positive sizes, malformed probabilities, ...).
class InvalidParameterError : public std::invalid_argument {
 public:
  explicit InvalidParameterError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Guard against combinatorial blow-up in the exhaustive oracles.
class InstanceTooLargeError : public std::runtime_error {
 public:
  explicit InstanceTooLargeError(const std::string& what)
      : std::runtime_error(what) {}
};

// The trust region of a GP subproblem excludes every feasible SINR vector.
class InfeasibleSubproblemError : public std::runtime_error {
 public:
  explicit InfeasibleSubproblemError(const std::string& what)
      : std::runtime_error(what) {}
};

// An iterative solver ran out of iterations before meeting its tolerance.
class NonConvergenceError : public std::runtime_error {
 public:
  explicit NonConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

// All residual norms collapsed before an elementary sample was complete.
class NumericalDegeneracyError : public std::runtime_error {
 public:
  explicit NumericalDegeneracyError(const std::string& what)
      : std::runtime_error(what) {}
};

// A kernel matrix failed the positive-semidefinite construction check.
class PsdViolationError : public std::runtime_error {
 public:
  explicit PsdViolationError(const std::string& what)
      : std::runtime_error(what) {}
};

// A training label has zero probability under the current model.
class DegenerateLabelError : public std::runtime_error {
 public:
  explicit DegenerateLabelError(const std::string& what)
      : std::runtime_error(what) {}
};

// Quality exponents left the range where exp() is representable.
class FeatureScalingError : public std::runtime_error {
 public:
  explicit FeatureScalingError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace dppl

#endif  // DPPL_ERRORS_HPP
