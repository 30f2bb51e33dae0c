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

#include <cstdint>
#include <string>
#include <vector>

#include "k3count/arith.hpp"
#include "k3count/integer.hpp"

namespace k3 {

// Per-case properties of F and H. Each takes a target n/m (m >= 2, reduced)
// and a candidate s/r (reduced, 1 <= r < m) and returns whether the property
// holds for that case.

/// F(n/m, s/r) == F(1 - n/m, 1 - s/r).
bool factor_symmetry_holds(const ReducedFraction& target, const ReducedFraction& cand);

/// F vanishes when |rn - ms| >= m, and F >= floor((m^2 - d^2) / (m r d))
/// with d = |rn - ms| otherwise.
bool factor_vanishing_holds(const ReducedFraction& target, const ReducedFraction& cand);
bool factor_lower_bound_holds(const ReducedFraction& target, const ReducedFraction& cand);

/// H(n/m) >= F(n/m, s/r) + 1, given h = H(n/m).
bool chamber_lower_bound_holds(const ReducedFraction& target, const ReducedFraction& cand,
                               std::size_t h);

/// H(n/m) <= 1 + sum over 1 <= r <= m/2, 0 <= s <= r, gcd(s, r) = 1 of
/// F(n/m, s/r), given h = H(n/m) and 0 < n < m.
bool chamber_upper_bound_holds(const ReducedFraction& target, std::size_t h);

/// F(n/m, s/r) <= F(an/m, as/r) with a = gcd(m, r).
bool gcd_monotonicity_holds(const ReducedFraction& target, const ReducedFraction& cand);

/// #{(n, s) in S_{m,r} : rn - ms = d}, where
/// S_{m,r} = {1 <= n <= m-1, 0 <= s <= r, gcd(n, m) = gcd(s, r) = 1}.
/// Requires 1 <= r, d <= m - 1.
Integer solution_count(const Integer& m, const Integer& r, const Integer& d);

enum class SolutionCountCase {
  kExactlyOne,   // gcd(m, r) = 1 and gcd(mr, d) = 1
  kAtMostRatio,  // a = gcd(m, r) > 1, a | d, gcd(mr/a^2, d/a) = 1: at most phi(m)/phi(m/a)
  kZero,         // everything else
};

SolutionCountCase predicted_solution_case(const Integer& m, const Integer& r, const Integer& d);

/// Whether solution_count agrees with the predicted case (an upper bound in
/// the middle case).
bool check_solution_count(const Integer& m, const Integer& r, const Integer& d);

struct IdentityCheck {
  Integer factor_sum;  // sum of F(n/m, s/r) over S_{m,r}
  Integer g_value;     // G(m, r)
  bool holds() const { return factor_sum == g_value; }
};

/// Requires gcd(m, r) = 1 and 1 <= r < m.
IdentityCheck check_counting_identity(const Integer& m, const Integer& r,
                                      const DivisorCountTable* table = nullptr);

/// phi(m) + sum over d | m, d > 1 of (phi(m)/phi(d)) * G(d).
Integer chamber_sum_bound(const Integer& m);

struct SumBoundCheck {
  Integer h_sum;
  Integer bound;
  bool holds() const { return h_sum <= bound; }
};

/// Compares sum of H(n/m) over n coprime to m against chamber_sum_bound(m).
SumBoundCheck check_sum_bound(const Integer& m);

/// Sum of H(n/m) over 1 <= n < m with gcd(n, m) = 1 (m >= 2).
Integer chamber_sum(const Integer& m);

struct StatsRow {
  Integer m;
  Integer phi;
  Integer h_min;
  Rational h_ave;
  Integer h_sum;
  /// h_sum / ((phi^2 / m) * (ln m)^2); floating point, for reports only.
  double ratio = 0.0;
};

StatsRow h_stats(const Integer& m);

/// Rows for lo <= m <= hi, in order of m. Rows are computed on up to `jobs`
/// threads.
std::vector<StatsRow> h_stats_range(std::uint64_t lo, std::uint64_t hi, unsigned jobs = 1);

/// "m,phi,h_min,h_ave_num,h_ave_den,h_sum,ratio"
std::string stats_csv_header();
std::string stats_csv_line(const StatsRow& row);

}  // namespace k3
