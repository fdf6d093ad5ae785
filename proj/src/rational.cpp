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

#include "privpipe/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace privpipe {
namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(0) {
  if (den == 0) throw DomainError("rational with zero denominator");
  const mpz_class n(num);
  const mpz_class d(den);
  mpq_class q(n, d);
  q.canonicalize();  // also normalises the sign onto the numerator
  v_ = std::move(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long exp) const {
  if (exp == 0) return Rational(1);
  if (is_zero() && exp < 0) throw DomainError("negative power of zero");
  mpq_class base = exp < 0 ? mpq_class(v_.get_den(), v_.get_num()) : v_;
  base.canonicalize();
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return Rational(std::move(out));
}

long Rational::to_long() const {
  if (!is_integer()) throw DomainError("rational " + str() + " is not an integer");
  if (!v_.get_num().fits_slong_p()) throw DomainError("integer too large for long: " + str());
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty rational literal");

  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos) {
    // Decimal literal, parsed exactly: [-]int[.frac][(e|E)[+-]exp]
    size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    }
    std::string digits;
    long frac_len = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits.push_back(s[pos++]);
    }
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        digits.push_back(s[pos++]);
        ++frac_len;
      }
    }
    if (digits.empty()) throw ParseError("bad decimal literal: " + text);
    long exp10 = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
      ++pos;
      bool eneg = false;
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        eneg = s[pos] == '-';
        ++pos;
      }
      std::string edig;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) edig.push_back(s[pos++]);
      if (edig.empty()) throw ParseError("bad exponent in: " + text);
      exp10 = std::strtol(edig.c_str(), nullptr, 10);
      if (eneg) exp10 = -exp10;
    }
    if (pos != s.size()) throw ParseError("bad decimal literal: " + text);
    mpz_class num(digits, 10);
    if (neg) num = -num;
    long den_pow = frac_len - exp10;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(den_pow < 0 ? -den_pow : den_pow));
    mpq_class q;
    if (den_pow >= 0) {
      q = mpq_class(num, scale);
    } else {
      q = mpq_class(num * scale, 1);
    }
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  // "p/q" or plain integer.
  size_t slash = s.find('/');
  std::string num_part = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);
  // mpz_set_str takes '-' but not '+'
  auto normalize_int = [&](std::string& p) {
    if (!p.empty() && p[0] == '+') p.erase(0, 1);
    if (p.empty()) throw ParseError("bad rational literal: " + text);
    const size_t i = p[0] == '-' ? 1 : 0;
    if (i == p.size() || !all_digits(p.substr(i))) {
      throw ParseError("bad rational literal: " + text);
    }
  };
  normalize_int(num_part);
  normalize_int(den_part);
  mpz_class num(num_part, 10), den(den_part, 10);
  if (den == 0) throw ParseError("zero denominator in: " + text);
  mpq_class q(num, den);
  q.canonicalize();
  Rational r;
  r.v_ = std::move(q);
  return r;
}

}  // namespace privpipe
