// Copyright 2026 The horizon-channels Authors
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

#ifndef HORIZON_ERRORS_HPP
#define HORIZON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace horizon {

/// Matrix or subsystem dimensions do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A physical or numerical parameter is outside its admissible range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input violates a documented precondition (non-Hermitian matrix,
/// invalid density matrix, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A channel that should decompose into orthogonal blocks does not.
class StructureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace horizon

#endif  // HORIZON_ERRORS_HPP
