// Copyright 2026 The wdist Authors
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

#ifndef WDIST_ERRORS_HPP
#define WDIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wdist {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Duplicate, unknown or otherwise malformed qubit labels.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// Mismatched register sizes, matrix shapes or arities.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside its documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical invariant (normalization, hermiticity, orthonormality,
/// unitarity) does not hold.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Kraus operators do not sum to the identity.
class CompletenessError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// Root bracketing failed: the metric does not change sign on the bracket.
class BracketError : public Error {
 public:
  using Error::Error;
};

}  // namespace wdist

#endif  // WDIST_ERRORS_HPP
