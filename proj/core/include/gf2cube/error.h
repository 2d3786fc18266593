// Copyright 2026 The gf2cube Authors
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

#ifndef GF2CUBE_ERROR_H_
#define GF2CUBE_ERROR_H_

#include <stdexcept>
#include <string>

namespace gf2cube {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The supplied modulus is reducible or has the wrong degree.
class ModulusError : public Error {
 public:
  using Error::Error;
};

// An integer argument (degree, encoded element) is out of range.
class RangeError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// The input lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Operands that cannot be combined, e.g. extension elements over different
// defining quadratics.
class UsageError : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation was requested beyond its documented size bound.
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace gf2cube

#endif  // GF2CUBE_ERROR_H_
