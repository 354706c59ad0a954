// Copyright 2026 The rbgames Authors
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

#ifndef RBG_ERRORS_H_
#define RBG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rbg {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: unknown ids, invalid sets, bad tables.
class InputError : public Error {
 public:
  using Error::Error;
};

// A document that does not follow the instance/report schema.
class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

// The instance lies outside the game class an algorithm is proven for.
class UnsupportedClassError : public Error {
 public:
  using Error::Error;
};

// Exhaustive procedure would exceed its configured size budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An operation was called without its documented precondition holding.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A proven invariant failed at runtime. Never caught internally.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace rbg

#endif  // RBG_ERRORS_H_
