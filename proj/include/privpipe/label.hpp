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

#ifndef PRIVPIPE_LABEL_HPP_
#define PRIVPIPE_LABEL_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "privpipe/error.hpp"

namespace privpipe {

// Opaque row/column label: an integer, a string, or a tuple of labels.
// Tuples arise from Kronecker products and the tuple-indexed post-processors.
class Label {
 public:
  using Tuple = std::vector<Label>;

  Label() : value_(std::int64_t{0}) {}
  Label(std::int64_t v) : value_(v) {}            // NOLINT(runtime/explicit)
  Label(int v) : value_(std::int64_t{v}) {}        // NOLINT(runtime/explicit)
  Label(std::string v) : value_(std::move(v)) {}   // NOLINT(runtime/explicit)
  Label(const char* v) : value_(std::string(v)) {} // NOLINT(runtime/explicit)
  static Label tuple(Tuple elems) { return Label(std::move(elems)); }

  bool is_int() const { return std::holds_alternative<std::int64_t>(value_); }
  bool is_string() const { return std::holds_alternative<std::string>(value_); }
  bool is_tuple() const { return std::holds_alternative<Tuple>(value_); }

  std::int64_t as_int() const;
  const std::string& as_string() const;
  const Tuple& elems() const;

  // "42", "Yes", "(Yes,No)", "()"
  std::string str() const;

  // CSV cells: integers parse as int labels, everything else stays a string.
  static Label from_text(const std::string& text);

  friend bool operator==(const Label& a, const Label& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
  friend bool operator<(const Label& a, const Label& b);

 private:
  explicit Label(Tuple elems) : value_(std::move(elems)) {}
  std::variant<std::int64_t, std::string, Tuple> value_;
};

// {0, 1, ..., n-1} as int labels.
std::vector<Label> int_range(std::int64_t n);

}  // namespace privpipe

#endif  // PRIVPIPE_LABEL_HPP_
