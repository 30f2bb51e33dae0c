// Copyright 2026 The k3count Authors
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

#include "k3count/arith.hpp"

#include <cctype>
#include <stdexcept>

namespace k3 {

ReducedFraction::ReducedFraction(Integer num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("fraction with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

ReducedFraction::ReducedFraction(const Rational& value)
    : num_(value.get_num()), den_(value.get_den()) {}

ReducedFraction ReducedFraction::from_reduced(Integer num, Integer den) {
  if (den < 1 || gcd(num, den) != 1) {
    throw std::invalid_argument("fraction " + num.get_str() + "/" +
                                den.get_str() + " is not in lowest terms");
  }
  ReducedFraction f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  return f;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) {
    throw std::invalid_argument("malformed fraction: '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("malformed fraction: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ReducedFraction ReducedFraction::parse(std::string_view text) {
  std::string_view body = trim(text);
  auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    return ReducedFraction(parse_integer(body, text), Integer(1));
  }
  Integer num = parse_integer(trim(body.substr(0, slash)), text);
  Integer den = parse_integer(trim(body.substr(slash + 1)), text);
  return ReducedFraction(std::move(num), std::move(den));
}

Rational ReducedFraction::value() const { return make_rational(num_, den_); }

ReducedFraction ReducedFraction::mod_one() const {
  ReducedFraction f;
  f.num_ = mod_floor(num_, den_);
  f.den_ = den_;
  return f;
}

std::string ReducedFraction::str() const { return num_.get_str() + "/" + den_.get_str(); }

std::strong_ordering operator<=>(const ReducedFraction& a, const ReducedFraction& b) {
  int c = cmp(Integer(a.num_ * b.den_), Integer(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer euler_phi(const Integer& m) {
  if (m < 1) throw std::invalid_argument("euler_phi requires m >= 1");
  Integer rest = m;
  Integer result = m;
  for (Integer p = 2; p * p <= rest; ++p) {
    if (divides(p, rest)) {
      while (divides(p, rest)) rest /= p;
      result -= result / p;
    }
  }
  if (rest > 1) result -= result / rest;
  return result;
}

Integer mod_inverse_canonical(const Integer& n, const Integer& m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  if (gcd(n, m) != 1) {
    throw std::invalid_argument(n.get_str() + " is not invertible modulo " + m.get_str());
  }
  if (m == 1) return 0;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return mod_floor(inv, m);
}

std::uint64_t tau(const Integer& a) {
  if (a < 1) throw std::invalid_argument("tau requires a >= 1");
  std::uint64_t count = 1;
  Integer rest = a;
  for (Integer p = 2; p * p <= rest; ++p) {
    std::uint64_t e = 0;
    while (divides(p, rest)) {
      rest /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (rest > 1) count *= 2;
  return count;
}

DivisorCountTable::DivisorCountTable(std::uint64_t limit) : counts_(limit + 1, 0) {
  for (std::uint64_t d = 1; d <= limit; ++d) {
    for (std::uint64_t multiple = d; multiple <= limit; multiple += d) ++counts_[multiple];
  }
}

std::uint32_t DivisorCountTable::operator()(std::uint64_t a) const {
  if (a < 1 || a > limit()) throw std::out_of_range("divisor table lookup out of range");
  return counts_[a];
}

ReducedFraction cf_value(std::span<const Integer> terms) {
  if (terms.empty()) throw std::invalid_argument("continued fraction needs at least one term");
  for (const auto& t : terms) {
    if (t < 1) throw std::invalid_argument("continued fraction terms must be positive");
  }
  // Evaluate from the tail: x = a_s, then x = a_i + 1/x; result is 1/x.
  Integer num = terms.back();
  Integer den = 1;
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    Integer next = *it * num + den;
    den = num;
    num = next;
  }
  return ReducedFraction(den, num);
}

Integer fibonacci(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("fibonacci index starts at 1");
  Integer prev = 0;
  Integer cur = 1;
  for (std::uint64_t i = 1; i < n; ++i) {
    Integer next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<PellSolution> pell_solutions(std::size_t count) {
  std::vector<PellSolution> out;
  out.reserve(count);
  Integer x = 1;
  Integer y = 1;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({x, y});
    Integer nx = 3 * x + 2 * y;
    Integer ny = 4 * x + 3 * y;
    x = nx;
    y = ny;
  }
  return out;
}

}  // namespace k3
