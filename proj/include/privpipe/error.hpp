// Copyright 2026 The privpipe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVPIPE_ERROR_HPP_
#define PRIVPIPE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace privpipe {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shapes or labels that do not line up (matmul, uncertainty label checks, ...).
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// invert() on a matrix with no inverse.
class SingularError : public Error {
 public:
  explicit SingularError(const std::string& what) : Error(what) {}
};

// Invalid domain values: parameters out of range, non-numeric labels where
// numbers are required, degenerate aggregator subsets, ...
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Malformed textual input (rationals, CSV, JSON specs).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace privpipe

#endif  // PRIVPIPE_ERROR_HPP_
