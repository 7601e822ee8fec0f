//
// Copyright 2026 The fairlip Authors
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
//

#ifndef FAIRLIP_ERROR_HPP_
#define FAIRLIP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fairlip {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition (shape mismatch, bad weights,
// malformed linear program, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A state the algorithms guarantee cannot happen, e.g. the solver reporting
// an always-feasible program as infeasible.
class InternalError : public Error {
 public:
  using Error::Error;
};

// The restricted transport program has no solution at the requested parity
// slack. `min_eps` is the smallest slack that would make it feasible.
class InfeasibleParity : public Error {
 public:
  InfeasibleParity(double requested_eps, double min_eps);

  double requested_eps() const { return requested_eps_; }
  double min_eps() const { return min_eps_; }

 private:
  double requested_eps_;
  double min_eps_;
};

}  // namespace fairlip

#endif  // FAIRLIP_ERROR_HPP_
