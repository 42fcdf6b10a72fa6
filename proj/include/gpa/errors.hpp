// Copyright 2026 The gpa Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace gpa {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed quiver: duplicate ids or arrows with undeclared endpoints.
class QuiverError : public Error {
 public:
  using Error::Error;
};

// An ideal generator is not a path of the quiver it is attached to.
class InvalidIdeal : public Error {
 public:
  using Error::Error;
};

// A bound quiver failed the admissibility check.
class AdmissibilityFailure : public Error {
 public:
  using Error::Error;
};

// Empty or disconnected graph handed to a routine that needs a connected one.
class GraphError : public Error {
 public:
  using Error::Error;
};

class NotStarLike : public Error {
 public:
  using Error::Error;
};

class NotDynkin : public Error {
 public:
  using Error::Error;
};

// Graph feature outside the domain of an operation (loops for the Tits form).
class Unsupported : public Error {
 public:
  using Error::Error;
};

class GpValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace gpa
