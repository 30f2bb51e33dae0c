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

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "k3count/walls.hpp"

namespace k3 {
namespace {

ReducedFraction fr(long n, long m) { return ReducedFraction(n, m); }

long naive_solution_count(long m, long r, long d) {
  long count = 0;
  for (long n = 1; n < m; ++n) {
    for (long s = 0; s <= r; ++s) {
      if (std::gcd(n, m) == 1 && std::gcd(s, r) == 1 && r * n - m * s == d) ++count;
    }
  }
  return count;
}

TEST(SolutionCountTest, KnownValues) {
  EXPECT_EQ(solution_count(7, 3, 2), 1);
  EXPECT_EQ(solution_count(6, 2, 3), 0);
  EXPECT_EQ(solution_count(5, 1, 2), 1);
  EXPECT_EQ(predicted_solution_case(7, 3, 2), SolutionCountCase::kExactlyOne);
  EXPECT_EQ(predicted_solution_case(6, 2, 3), SolutionCountCase::kZero);
  EXPECT_THROW(solution_count(5, 5, 1), std::invalid_argument);
  EXPECT_THROW(solution_count(5, 1, 0), std::invalid_argument);
}

TEST(SolutionCountTest, MatchesDoubleLoopAndCaseSplit) {
  for (long m = 2; m <= 40; ++m) {
    for (long r = 1; r < m; ++r) {
      for (long d = 1; d < m; ++d) {
        ASSERT_EQ(solution_count(m, r, d), naive_solution_count(m, r, d)) << m << "," << r << "," << d;
        EXPECT_TRUE(check_solution_count(m, r, d)) << m << "," << r << "," << d;
      }
    }
  }
}

TEST(CountingIdentityTest, KnownValues) {
  const IdentityCheck three = check_counting_identity(3, 1);
  EXPECT_EQ(three.factor_sum, 4);
  EXPECT_EQ(three.g_value, 4);
  EXPECT_TRUE(three.holds());
  EXPECT_TRUE(check_counting_identity(5, 2).holds());
  EXPECT_TRUE(check_counting_identity(7, 3).holds());
  EXPECT_THROW(check_counting_identity(6, 2), std::invalid_argument);
}

TEST(CountingIdentityTest, HandEnumerationOfThreeOne) {
  // S_{3,1} pairs (n, s): F(1/3, 0) = 2, F(1/3, 1) = 0, F(2/3, 0) = 0, F(2/3, 1) = 2.
  EXPECT_EQ(factor_count(fr(1, 3), fr(0, 1)), 2);
  EXPECT_EQ(factor_count(fr(1, 3), fr(1, 1)), 0);
  EXPECT_EQ(factor_count(fr(2, 3), fr(0, 1)), 0);
  EXPECT_EQ(factor_count(fr(2, 3), fr(1, 1)), 2);
}

TEST(CountingIdentityTest, HoldsForCoprimePairs) {
  const DivisorCountTable table(40 * 40);
  for (long m = 2; m <= 40; ++m) {
    for (long r = 1; r < m; ++r) {
      if (std::gcd(m, r) != 1) continue;
      Integer direct = 0;
      for (long n = 1; n < m; ++n) {
        if (std::gcd(n, m) != 1) continue;
        for (long s = 0; s <= r; ++s) {
          if (std::gcd(s, r) == 1) direct += factor_count(fr(n, m), fr(s, r));
        }
      }
      const IdentityCheck c = check_counting_identity(m, r, &table);
      EXPECT_EQ(c.factor_sum, direct);
      EXPECT_TRUE(c.holds()) << m << "," << r << ": " << c.factor_sum << " vs " << c.g_value;
    }
  }
}

TEST(FactorPropertiesTest, HoldExhaustivelyForSmallRanks) {
  for (long m = 2; m <= 30; ++m) {
    for (long n = 1; n < m; ++n) {
      if (std::gcd(n, m) != 1) continue;
      const ReducedFraction t = fr(n, m);
      const std::size_t h = chamber_count(t.value());
      EXPECT_TRUE(chamber_upper_bound_holds(t, h));
      for (long r = 1; r < m; ++r) {
        for (long s = -r; s <= 2 * r; ++s) {
          if (std::gcd(s, r) != 1) continue;
          const ReducedFraction c = fr(s, r);
          ASSERT_TRUE(factor_symmetry_holds(t, c)) << t.str() << " " << c.str();
          ASSERT_TRUE(factor_vanishing_holds(t, c)) << t.str() << " " << c.str();
          ASSERT_TRUE(factor_lower_bound_holds(t, c)) << t.str() << " " << c.str();
          ASSERT_TRUE(chamber_lower_bound_holds(t, c, h)) << t.str() << " " << c.str();
          ASSERT_TRUE(gcd_monotonicity_holds(t, c)) << t.str() << " " << c.str();
        }
      }
    }
  }
}

TEST(FactorPropertiesTest, SymmetryByDirectEvaluation) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> pick(2, 200);
  for (int i = 0; i < 300; ++i) {
    const long m = pick(rng);
    const long n = 1 + pick(rng) % (m - 1);
    const long r = 1 + pick(rng) % (m - 1);
    const long s = pick(rng) % (2 * r + 1) - r / 2;
    if (std::gcd(n, m) != 1 || std::gcd(s, r) != 1) continue;
    EXPECT_EQ(factor_count(fr(n, m), fr(s, r)), factor_count(fr(m - n, m), fr(r - s, r)));
  }
}

TEST(FactorPropertiesTest, PredicatesDetectFalseBounds) {
  // A chamber count below F + 1 must be rejected.
  const ReducedFraction t = fr(1, 5);
  const ReducedFraction c = fr(0, 1);
  ASSERT_EQ(factor_count(t, c), 4);
  EXPECT_FALSE(chamber_lower_bound_holds(t, c, 4));
  EXPECT_TRUE(chamber_lower_bound_holds(t, c, 5));
  EXPECT_FALSE(chamber_upper_bound_holds(fr(1, 5), 6));
}

TEST(SumBoundTest, KnownValues) {
  const SumBoundCheck five = check_sum_bound(5);
  EXPECT_EQ(five.h_sum, 22);
  EXPECT_TRUE(five.holds());
  const SumBoundCheck two = check_sum_bound(2);
  EXPECT_EQ(two.h_sum, 2);
  EXPECT_EQ(two.bound, euler_phi(2) + g_total(2));
  EXPECT_TRUE(two.holds());
  EXPECT_TRUE(check_sum_bound(93).holds());
  EXPECT_THROW(chamber_sum_bound(1), std::invalid_argument);
}

TEST(SumBoundTest, HoldsUpToSixty) {
  for (long m = 2; m <= 60; ++m) {
    const SumBoundCheck c = check_sum_bound(m);
    EXPECT_TRUE(c.holds()) << m << ": " << c.h_sum << " > " << c.bound;
    EXPECT_EQ(c.h_sum, chamber_sum(m));
    EXPECT_GE(c.h_sum, euler_phi(m));
  }
}

TEST(StatsTest, KnownRows) {
  const StatsRow five = h_stats(5);
  EXPECT_EQ(five.h_min, 5);
  EXPECT_EQ(five.h_sum, 22);
  EXPECT_EQ(five.phi, 4);
  EXPECT_EQ(five.h_ave, Rational(11, 2));
  const StatsRow seven = h_stats(7);
  EXPECT_EQ(seven.h_min, 7);
  EXPECT_EQ(seven.h_sum, 42);
  const StatsRow two = h_stats(2);
  EXPECT_EQ(two.h_min, 2);
  EXPECT_EQ(two.h_sum, 2);
}

TEST(StatsTest, RangeIsOrderedConsistentAndThreadIndependent) {
  const auto serial = h_stats_range(2, 40, 1);
  const auto threaded = h_stats_range(2, 40, 3);
  ASSERT_EQ(serial.size(), 39u);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    const StatsRow& row = serial[i];
    EXPECT_EQ(row.m, Integer(static_cast<unsigned long>(i + 2)));
    EXPECT_EQ(stats_csv_line(row), stats_csv_line(threaded[i]));
    EXPECT_LE(Rational(row.h_min), row.h_ave);
    EXPECT_LE(row.h_ave, Rational(row.h_sum));
    EXPECT_EQ(row.h_ave * row.phi, row.h_sum);
    EXPECT_GE(row.h_sum, row.phi);
    EXPECT_LE(row.h_sum, chamber_sum_bound(row.m));
  }
}

TEST(StatsTest, CsvFormat) {
  EXPECT_EQ(stats_csv_header(), "m,phi,h_min,h_ave_num,h_ave_den,h_sum,ratio");
  const std::string line = stats_csv_line(h_stats(5));
  EXPECT_EQ(line.rfind("5,4,5,11,2,22,", 0), 0u) << line;
}

}  // namespace
}  // namespace k3
