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

#include "k3count/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "k3count/parallel.hpp"
#include "k3count/walls.hpp"

namespace k3 {

bool factor_symmetry_holds(const ReducedFraction& target, const ReducedFraction& cand) {
  const ReducedFraction mirror_target(target.den() - target.num(), target.den());
  const ReducedFraction mirror_cand(cand.den() - cand.num(), cand.den());
  return factor_count(target, cand) == factor_count(mirror_target, mirror_cand);
}

namespace {

Integer slope_gap(const ReducedFraction& target, const ReducedFraction& cand) {
  return abs(Integer(cand.den() * target.num() - target.den() * cand.num()));
}

}  // namespace

bool factor_vanishing_holds(const ReducedFraction& target, const ReducedFraction& cand) {
  if (slope_gap(target, cand) < target.den()) return true;
  return factor_count(target, cand) == 0;
}

bool factor_lower_bound_holds(const ReducedFraction& target, const ReducedFraction& cand) {
  const Integer d = slope_gap(target, cand);
  const Integer& m = target.den();
  const Integer& r = cand.den();
  if (d == 0 || d >= m) return true;
  return factor_count(target, cand) >= floor_div(m * m - d * d, m * r * d);
}

bool chamber_lower_bound_holds(const ReducedFraction& target, const ReducedFraction& cand,
                               std::size_t h) {
  return Integer(static_cast<unsigned long>(h)) >= factor_count(target, cand) + 1;
}

bool chamber_upper_bound_holds(const ReducedFraction& target, std::size_t h) {
  const Integer& m = target.den();
  Integer bound = 1;
  for (Integer r = 1; r <= m / 2; ++r) {
    for (Integer s = 0; s <= r; ++s) {
      if (gcd(s, r) == 1) bound += factor_count(target, ReducedFraction::from_reduced(s, r));
    }
  }
  return Integer(static_cast<unsigned long>(h)) <= bound;
}

bool gcd_monotonicity_holds(const ReducedFraction& target, const ReducedFraction& cand) {
  const Integer a = gcd(target.den(), cand.den());
  const ReducedFraction scaled_target(a * target.num(), target.den());
  const ReducedFraction scaled_cand(a * cand.num(), cand.den());
  return factor_count(target, cand) <= factor_count(scaled_target, scaled_cand);
}

Integer solution_count(const Integer& m, const Integer& r, const Integer& d) {
  if (r < 1 || r > m - 1 || d < 1 || d > m - 1) {
    throw std::invalid_argument("solution_count needs 1 <= r, d <= m - 1");
  }
  Integer count = 0;
  for (Integer n = 1; n < m; ++n) {
    if (gcd(n, m) != 1) continue;
    // rn - ms = d has at most one s for a given n.
    const Integer numerator = r * n - d;
    if (!divides(m, numerator)) continue;
    const Integer s = numerator / m;
    if (s >= 0 && s <= r && gcd(s, r) == 1) ++count;
  }
  return count;
}

SolutionCountCase predicted_solution_case(const Integer& m, const Integer& r, const Integer& d) {
  const Integer a = gcd(m, r);
  if (a == 1) {
    return gcd(Integer(m * r), d) == 1 ? SolutionCountCase::kExactlyOne : SolutionCountCase::kZero;
  }
  if (divides(a, d) && gcd(Integer(m * r / (a * a)), Integer(d / a)) == 1) {
    return SolutionCountCase::kAtMostRatio;
  }
  return SolutionCountCase::kZero;
}

bool check_solution_count(const Integer& m, const Integer& r, const Integer& d) {
  const Integer count = solution_count(m, r, d);
  switch (predicted_solution_case(m, r, d)) {
    case SolutionCountCase::kExactlyOne:
      return count == 1;
    case SolutionCountCase::kAtMostRatio: {
      const Integer a = gcd(m, r);
      return count * euler_phi(m / a) <= euler_phi(m);
    }
    case SolutionCountCase::kZero:
      return count == 0;
  }
  return false;
}

IdentityCheck check_counting_identity(const Integer& m, const Integer& r,
                                      const DivisorCountTable* table) {
  if (r < 1 || r >= m) throw std::invalid_argument("counting identity needs 1 <= r < m");
  if (gcd(m, r) != 1) throw std::invalid_argument("counting identity needs gcd(m, r) = 1");
  IdentityCheck check{0, g_sum(m, r, table)};
  for (Integer n = 1; n < m; ++n) {
    if (gcd(n, m) != 1) continue;
    const ReducedFraction target = ReducedFraction::from_reduced(n, m);
    for (Integer s = 0; s <= r; ++s) {
      if (gcd(s, r) != 1) continue;
      check.factor_sum += factor_count(target, ReducedFraction::from_reduced(s, r));
    }
  }
  return check;
}

Integer chamber_sum_bound(const Integer& m) {
  if (m < 2) throw std::invalid_argument("sum bound needs m >= 2");
  const Integer phi_m = euler_phi(m);
  Integer bound = phi_m;
  for (Integer d = 2; d <= m; ++d) {
    if (divides(d, m)) bound += (phi_m / euler_phi(d)) * g_total(d);
  }
  return bound;
}

Integer chamber_sum(const Integer& m) {
  if (m < 2) throw std::invalid_argument("chamber sum needs m >= 2");
  Integer total = 0;
  for (Integer n = 1; n < m; ++n) {
    if (gcd(n, m) == 1) total += static_cast<unsigned long>(chamber_count(make_rational(n, m)));
  }
  return total;
}

SumBoundCheck check_sum_bound(const Integer& m) {
  return SumBoundCheck{chamber_sum(m), chamber_sum_bound(m)};
}

StatsRow h_stats(const Integer& m) {
  if (m < 2) throw std::invalid_argument("statistics need m >= 2");
  StatsRow row;
  row.m = m;
  row.phi = euler_phi(m);
  row.h_sum = 0;
  bool first = true;
  for (Integer n = 1; n < m; ++n) {
    if (gcd(n, m) != 1) continue;
    const Integer h = static_cast<unsigned long>(chamber_count(make_rational(n, m)));
    row.h_sum += h;
    if (first || h < row.h_min) row.h_min = h;
    first = false;
  }
  row.h_ave = make_rational(row.h_sum, row.phi);
  row.h_ave.canonicalize();
  const double log_m = std::log(m.get_d());
  const double scale = row.phi.get_d() * row.phi.get_d() / m.get_d() * log_m * log_m;
  row.ratio = row.h_sum.get_d() / scale;
  return row;
}

std::vector<StatsRow> h_stats_range(std::uint64_t lo, std::uint64_t hi, unsigned jobs) {
  if (lo < 2) throw std::invalid_argument("statistics need m >= 2");
  if (hi < lo) return {};
  return parallel_map(hi - lo + 1, jobs,
                      [lo](std::size_t i) { return h_stats(Integer(static_cast<unsigned long>(lo + i))); });
}

std::string stats_csv_header() { return "m,phi,h_min,h_ave_num,h_ave_den,h_sum,ratio"; }

std::string stats_csv_line(const StatsRow& row) {
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.6f", row.ratio);
  return row.m.get_str() + "," + row.phi.get_str() + "," + row.h_min.get_str() + "," +
         row.h_ave.get_num().get_str() + "," + row.h_ave.get_den().get_str() + "," +
         row.h_sum.get_str() + "," + ratio;
}

}  // namespace k3
