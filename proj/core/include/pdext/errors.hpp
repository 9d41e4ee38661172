// Copyright 2026 The pdext Authors
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

#ifndef PDEXT_ERRORS_HPP_
#define PDEXT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pdext {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A point or interval lies outside the domain where a quantity is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument combination supplied by the caller.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Quadrature or truncation settings that cannot be honoured.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Sample data too short or malformed.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Floating point failure inside a solver.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Invalid spline extension data.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A matrix or form that vanishes numerically.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Model parameter outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace pdext

#endif  // PDEXT_ERRORS_HPP_
