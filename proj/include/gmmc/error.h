// Copyright 2026 The Authors.
//
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

#ifndef GMMC_ERROR_H_
#define GMMC_ERROR_H_

#include <stdexcept>
#include <string>

namespace gmmc {

// Malformed data: bad indices, mismatched sizes, violated type invariants.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A scalar argument outside its documented domain (n = 0, p > 1, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The inputs are well formed but the requested formula or program does not
// apply to them (for example a reduced program on a rule with f*w increasing).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exhaustive enumeration would exceed the configured profile cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Signals a bug: a program that cannot be infeasible was reported infeasible.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gmmc

#endif  // GMMC_ERROR_H_
