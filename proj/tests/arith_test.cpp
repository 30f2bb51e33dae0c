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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace k3 {
namespace {

std::uint64_t naive_tau(std::uint64_t a) {
  std::uint64_t count = 0;
  for (std::uint64_t d = 1; d <= a; ++d) count += (a % d == 0) ? 1 : 0;
  return count;
}

long naive_phi(long m) {
  long count = 0;
  for (long j = 1; j <= m; ++j) count += (std::gcd(j, m) == 1) ? 1 : 0;
  return count;
}

TEST(ReducedFractionTest, ReducesAndNormalizesSign) {
  const ReducedFraction f(6, -4);
  EXPECT_EQ(f.num(), -3);
  EXPECT_EQ(f.den(), 2);
  EXPECT_EQ(f.str(), "-3/2");
  EXPECT_EQ(ReducedFraction(0, 7).den(), 1);
}

TEST(ReducedFractionTest, RejectsZeroDenominator) {
  EXPECT_THROW(ReducedFraction(1, 0), std::invalid_argument);
  EXPECT_THROW(ReducedFraction::from_reduced(2, 4), std::invalid_argument);
  EXPECT_THROW(ReducedFraction::from_reduced(1, -3), std::invalid_argument);
}

TEST(ReducedFractionTest, ParsesLiterals) {
  EXPECT_EQ(ReducedFraction::parse("3/8"), ReducedFraction(3, 8));
  EXPECT_EQ(ReducedFraction::parse("5"), ReducedFraction(5, 1));
  EXPECT_EQ(ReducedFraction::parse("-2/4"), ReducedFraction(-1, 2));
  EXPECT_EQ(ReducedFraction::parse("+7/21"), ReducedFraction(1, 3));
  for (const char* bad : {"", "/", "3/", "/4", "a", "1/0", "1//2", "1/2/3", "1.5", " "}) {
    EXPECT_THROW(ReducedFraction::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(ReducedFractionTest, ModOneLandsInUnitInterval) {
  EXPECT_EQ(ReducedFraction(-1, 3).mod_one(), ReducedFraction(2, 3));
  EXPECT_EQ(ReducedFraction(7, 3).mod_one(), ReducedFraction(1, 3));
  EXPECT_EQ(ReducedFraction(5, 1).mod_one(), ReducedFraction(0, 1));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 200);
  for (int i = 0; i < 500; ++i) {
    const ReducedFraction f(num(rng), den(rng));
    const ReducedFraction g = f.mod_one();
    EXPECT_GE(g.num(), 0);
    EXPECT_LT(g.num(), g.den());
    const Rational diff = f.value() - g.value();
    EXPECT_EQ(diff.get_den(), 1) << f.str();
  }
}

TEST(ReducedFractionTest, OrdersByValue) {
  EXPECT_LT(ReducedFraction(1, 3), ReducedFraction(1, 2));
  EXPECT_LT(ReducedFraction(-1, 2), ReducedFraction(0, 1));
  EXPECT_EQ(ReducedFraction(2, 4), ReducedFraction(1, 2));
}

TEST(ReducedFractionTest, ValueIsCanonical) {
  const Rational v = ReducedFraction(10, -4).value();
  EXPECT_EQ(v.get_num(), -5);
  EXPECT_EQ(v.get_den(), 2);
}

TEST(EulerPhiTest, KnownValues) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(euler_phi(93), 60);
  EXPECT_EQ(euler_phi(811), 810);
}

TEST(EulerPhiTest, MatchesNaiveCountAndDivisorSum) {
  for (long m = 1; m <= 500; ++m) {
    EXPECT_EQ(euler_phi(m), naive_phi(m)) << m;
    Integer total = 0;
    for (long d = 1; d <= m; ++d) {
      if (m % d == 0) total += euler_phi(d);
    }
    EXPECT_EQ(total, m) << m;
  }
}

TEST(ModInverseTest, KnownValues) {
  EXPECT_EQ(mod_inverse_canonical(3, 7), 5);
  EXPECT_EQ(mod_inverse_canonical(2, 5), 3);
  EXPECT_EQ(mod_inverse_canonical(0, 1), 0);
  EXPECT_EQ(mod_inverse_canonical(-1, 4), 3);
  EXPECT_THROW(mod_inverse_canonical(2, 4), std::invalid_argument);
}

TEST(ModInverseTest, InverseInCanonicalRange) {
  for (long m = 2; m <= 500; ++m) {
    for (long n = -m; n <= m; ++n) {
      if (std::gcd(n, m) != 1) continue;
      const Integer inv = mod_inverse_canonical(n, m);
      ASSERT_GE(inv, 0);
      ASSERT_LT(inv, m);
      ASSERT_EQ(mod_floor(Integer(n) * inv, m), 1) << n << " mod " << m;
    }
  }
}

TEST(TauTest, KnownValues) {
  EXPECT_EQ(tau(1), 1u);
  EXPECT_EQ(tau(7), 2u);
  EXPECT_EQ(tau(12), 6u);
  EXPECT_EQ(tau(720720), 240u);
}

TEST(TauTest, TrialDivisionMatchesNaive) {
  for (std::uint64_t a = 1; a <= 2000; ++a) EXPECT_EQ(tau(a), naive_tau(a)) << a;
}

TEST(TauTest, SieveMatchesTrialDivision) {
  const DivisorCountTable table(1000000);
  EXPECT_EQ(table.limit(), 1000000u);
  for (std::uint64_t a = 1; a <= 2000; ++a) EXPECT_EQ(table(a), naive_tau(a)) << a;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1000000);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t a = pick(rng);
    EXPECT_EQ(table(a), tau(a)) << a;
  }
  EXPECT_THROW(table(0), std::out_of_range);
  EXPECT_THROW(table(1000001), std::out_of_range);
}

TEST(ContinuedFractionTest, KnownValues) {
  const std::vector<Integer> a{2, 2};
  const std::vector<Integer> b{2, 3};
  const std::vector<Integer> c{1, 1, 1, 1};
  EXPECT_EQ(cf_value(a), ReducedFraction(2, 5));
  EXPECT_EQ(cf_value(b), ReducedFraction(3, 7));
  EXPECT_EQ(cf_value(c), ReducedFraction(3, 5));
  EXPECT_THROW(cf_value(std::vector<Integer>{}), std::invalid_argument);
  EXPECT_THROW(cf_value(std::vector<Integer>{2, 0}), std::invalid_argument);
}

TEST(ContinuedFractionTest, RandomTermsGiveReducedValueInUnitInterval) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<int> term(1, 9);
  for (int i = 0; i < 500; ++i) {
    std::vector<Integer> terms(len(rng));
    for (auto& t : terms) t = term(rng);
    if (terms.back() == 1) terms.back() = 2;
    // Evaluate from the tail with canonical rationals.
    Rational oracle = 0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      oracle = 1 / (Rational(*it) + oracle);
      oracle.canonicalize();
    }
    const ReducedFraction v = cf_value(terms);
    EXPECT_EQ(v.value(), oracle);
    EXPECT_EQ(gcd(v.num(), v.den()), 1);
    EXPECT_GT(v.num(), 0);
    if (terms.size() > 1 || terms.front() > 1) EXPECT_LT(v.num(), v.den());
  }
}

TEST(FibonacciTest, KnownValues) {
  EXPECT_EQ(fibonacci(1), 1);
  EXPECT_EQ(fibonacci(2), 1);
  EXPECT_EQ(fibonacci(7), 13);
  EXPECT_EQ(fibonacci(21), 10946);
  EXPECT_EQ(fibonacci(100), Integer("354224848179261915075"));
}

TEST(FibonacciTest, ConsecutiveTermsAreCoprimeAndRatioIsAllOnesFraction) {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    EXPECT_EQ(gcd(fibonacci(n), fibonacci(n + 1)), 1);
    EXPECT_EQ(fibonacci(n + 2), fibonacci(n + 1) + fibonacci(n));
  }
  for (std::uint64_t n = 2; n <= 20; ++n) {
    const std::vector<Integer> ones(n, Integer(1));
    EXPECT_EQ(cf_value(ones), ReducedFraction(fibonacci(n), fibonacci(n + 1))) << n;
  }
}

TEST(PellTest, FirstSolutions) {
  const auto sols = pell_solutions(3);
  ASSERT_EQ(sols.size(), 3u);
  EXPECT_EQ(sols[0], (PellSolution{1, 1}));
  EXPECT_EQ(sols[1], (PellSolution{5, 7}));
  EXPECT_EQ(sols[2], (PellSolution{29, 41}));
}

TEST(PellTest, EverySolutionSatisfiesEquationAndListIsComplete) {
  const auto sols = pell_solutions(20);
  for (const auto& s : sols) EXPECT_EQ(2 * s.x * s.x - s.y * s.y, 1);
  // No positive solution hides between the first few listed ones.
  std::vector<PellSolution> found;
  for (long x = 1; x <= 1000; ++x) {
    const long y2 = 2 * x * x - 1;
    const long y = static_cast<long>(std::llround(std::sqrt(static_cast<double>(y2))));
    if (y * y == y2) found.push_back({x, y});
  }
  ASSERT_EQ(found.size(), 5u);
  for (std::size_t i = 0; i < found.size(); ++i) EXPECT_EQ(found[i], sols[i]);
}

}  // namespace
}  // namespace k3
