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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "k3count/integer.hpp"

namespace k3 {

/// A fraction num/den in lowest terms with den >= 1. The sign lives in the
/// numerator.
class ReducedFraction {
 public:
  ReducedFraction() : num_(0), den_(1) {}

  /// Reduces num/den; throws std::invalid_argument when den == 0.
  ReducedFraction(Integer num, Integer den);
  explicit ReducedFraction(const Rational& value);

  /// Accepts only an already reduced pair with den >= 1.
  static ReducedFraction from_reduced(Integer num, Integer den);

  /// Parses "n/m" or a plain integer literal, with optional sign.
  static ReducedFraction parse(std::string_view text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  Rational value() const;

  /// Representative of this value modulo 1, in [0, 1).
  ReducedFraction mod_one() const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const ReducedFraction& x) { return os << x.str(); }

  friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;
  friend std::strong_ordering operator<=>(const ReducedFraction& a,
                                          const ReducedFraction& b);

 private:
  Integer num_;
  Integer den_;
};

struct PellSolution {
  Integer x;
  Integer y;
  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

Integer euler_phi(const Integer& m);

/// The inverse of n modulo m in [0, m). Returns 0 for m == 1.
Integer mod_inverse_canonical(const Integer& n, const Integer& m);

/// Number of positive divisors, by trial division.
std::uint64_t tau(const Integer& a);

/// Divisor-count table for 1..limit built by a sieve. Immutable after
/// construction, so one table can be shared between threads.
class DivisorCountTable {
 public:
  explicit DivisorCountTable(std::uint64_t limit);

  std::uint64_t limit() const { return counts_.size() - 1; }
  /// Requires 1 <= a <= limit().
  std::uint32_t operator()(std::uint64_t a) const;

 private:
  std::vector<std::uint32_t> counts_;
};

/// Value of [a1, ..., as] = 1/(a1 + 1/(a2 + ... + 1/as)).
ReducedFraction cf_value(std::span<const Integer> terms);

/// b_n with b_1 = b_2 = 1.
Integer fibonacci(std::uint64_t n);

/// The first `count` positive solutions of 2x^2 - y^2 = 1, from (1, 1) via
/// (x, y) -> (3x + 2y, 4x + 3y).
std::vector<PellSolution> pell_solutions(std::size_t count);

}  // namespace k3
