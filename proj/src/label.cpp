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

#include "privpipe/label.hpp"

#include <cctype>
#include <cstdlib>

namespace privpipe {

std::int64_t Label::as_int() const {
  if (!is_int()) throw DomainError("label " + str() + " is not numeric");
  return std::get<std::int64_t>(value_);
}

const std::string& Label::as_string() const {
  if (!is_string()) throw DomainError("label " + str() + " is not a string");
  return std::get<std::string>(value_);
}

const Label::Tuple& Label::elems() const {
  if (!is_tuple()) throw DomainError("label " + str() + " is not a tuple");
  return std::get<Tuple>(value_);
}

std::string Label::str() const {
  if (is_int()) return std::to_string(std::get<std::int64_t>(value_));
  if (is_string()) return std::get<std::string>(value_);
  std::string out = "(";
  const Tuple& t = std::get<Tuple>(value_);
  for (size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ",";
    out += t[i].str();
  }
  out += ")";
  return out;
}

Label Label::from_text(const std::string& text) {
  if (!text.empty()) {
    size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool digits = i < text.size();
    for (size_t j = i; j < text.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
        digits = false;
        break;
      }
    }
    if (digits) return Label(static_cast<std::int64_t>(std::strtoll(text.c_str(), nullptr, 10)));
  }
  return Label(text);
}

bool operator<(const Label& a, const Label& b) {
  if (a.value_.index() != b.value_.index()) return a.value_.index() < b.value_.index();
  if (a.is_int()) return a.as_int() < b.as_int();
  if (a.is_string()) return a.as_string() < b.as_string();
  const Label::Tuple& ta = a.elems();
  const Label::Tuple& tb = b.elems();
  for (size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    if (ta[i] < tb[i]) return true;
    if (tb[i] < ta[i]) return false;
  }
  return ta.size() < tb.size();
}

std::vector<Label> int_range(std::int64_t n) {
  std::vector<Label> out;
  out.reserve(static_cast<size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out.emplace_back(i);
  return out;
}

}  // namespace privpipe
