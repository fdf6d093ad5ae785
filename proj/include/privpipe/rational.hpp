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

#ifndef PRIVPIPE_RATIONAL_HPP_
#define PRIVPIPE_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "privpipe/error.hpp"

namespace privpipe {

// Arbitrary-precision exact fraction, the sole scalar type of the library.
// Always stored in lowest terms with a positive denominator; every operation
// is exact (no rounding anywhere).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(runtime/explicit) - numeric literal convenience
  Rational(int n) : v_(n) {}   // NOLINT(runtime/explicit)
  Rational(long long n) : v_(static_cast<long>(n)) {  // NOLINT(runtime/explicit)
    static_assert(sizeof(long) == sizeof(long long), "LP64 platforms only");
  }
  Rational(long num, long den);

  // Accepts "p/q", plain integers, and decimal literals ("0.36" == 9/25),
  // optionally with a decimal exponent ("1.5e-2" == 3/200).
  static Rational parse(const std::string& text);

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // Integer exponents only; negative exponents require a nonzero base.
  Rational pow(long exp) const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  // Value as a machine integer; requires an integral value that fits.
  long to_long() const;

  // "p/q", or just "p" for integers.
  std::string str() const;
  double to_double() const { return v_.get_d(); }

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace privpipe

#endif  // PRIVPIPE_RATIONAL_HPP_
