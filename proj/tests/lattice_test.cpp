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

#include "k3count/lattice.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

namespace k3 {
namespace {

const LatticePtr& ell() {
  static const LatticePtr lattice = NSLattice::elliptic();
  return lattice;
}

DivisorClass ec(long p, long q) { return elliptic_class(p, q); }

// Searches integral ample classes a*sigma + b*e (b > 2a > 0) orthogonal to D.
bool ample_perp_by_search(long p, long q) {
  for (long a = 1; a <= 40; ++a) {
    for (long b = 2 * a + 1; b <= 2 * a + 200; ++b) {
      if (-2 * p * a + p * b + q * a == 0) return true;
    }
  }
  return false;
}

TEST(NSLatticeTest, EllipticPreset) {
  const auto& l = *ell();
  EXPECT_EQ(l.rank(), 2u);
  EXPECT_EQ(l.gram(0, 0), -2);
  EXPECT_EQ(l.gram(0, 1), 1);
  EXPECT_EQ(l.gram(1, 0), 1);
  EXPECT_EQ(l.gram(1, 1), 0);
  EXPECT_EQ(l.index_of("s"), 0u);
  EXPECT_EQ(l.index_of("sigma"), 0u);
  EXPECT_EQ(l.index_of("e"), 1u);
  EXPECT_EQ(l.index_of("x"), 2u);
}

TEST(NSLatticeTest, RejectsMalformedGram) {
  EXPECT_THROW(NSLattice({{1, 2}, {3, 4}}, {"a", "b"}), std::invalid_argument);
  EXPECT_THROW(NSLattice({{1, 0}, {0}}, {"a", "b"}), std::invalid_argument);
  EXPECT_THROW(NSLattice({{1}}, {"a", "b"}), std::invalid_argument);
}

TEST(DivisorClassTest, RejectsWrongLength) {
  EXPECT_THROW(DivisorClass(ell(), {1, 2, 3}), std::invalid_argument);
}

TEST(IntersectTest, KnownValues) {
  EXPECT_EQ(intersect(ec(1, 0), ec(1, 0)), -2);
  EXPECT_EQ(intersect(ec(0, 1), ec(0, 1)), 0);
  EXPECT_EQ(intersect(ec(1, 0), ec(0, 1)), 1);
  EXPECT_EQ(intersect(ec(1, 4), ec(1, -2)), 0);
}

TEST(IntersectTest, BilinearAndSymmetric) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-50, 50);
  for (int i = 0; i < 500; ++i) {
    const DivisorClass a = ec(c(rng), c(rng));
    const DivisorClass b = ec(c(rng), c(rng));
    const DivisorClass d = ec(c(rng), c(rng));
    const Integer k = c(rng);
    EXPECT_EQ(intersect(a, b), intersect(b, a));
    EXPECT_EQ(intersect(a + b, d), intersect(a, d) + intersect(b, d));
    EXPECT_EQ(intersect(k * a, d), k * intersect(a, d));
    // Explicit expansion of the gram form.
    const Integer expected = -2 * a[0] * b[0] + a[0] * b[1] + a[1] * b[0];
    EXPECT_EQ(intersect(a, b), expected);
  }
}

TEST(IntersectTest, HodgeIndexOnElliptic) {
  // A nonzero class orthogonal to an ample class has negative square.
  for (long a = 1; a <= 6; ++a) {
    for (long b = 2 * a + 1; b <= 2 * a + 8; ++b) {
      const DivisorClass h = ec(a, b);
      ASSERT_TRUE(is_ample_elliptic(h));
      EXPECT_GT(intersect(h, h), 0);
      for (long p = -12; p <= 12; ++p) {
        for (long q = -40; q <= 40; ++q) {
          const DivisorClass d = ec(p, q);
          if (d.is_zero() || intersect(d, h) != 0) continue;
          EXPECT_LT(intersect(d, d), 0) << d.str();
        }
      }
    }
  }
}

TEST(IntersectTest, RejectsMixedLattices) {
  const DivisorClass p(NSLattice::pell(), {1, 0, 0});
  EXPECT_THROW(intersect(ec(1, 0), p), LatticeMismatch);
  EXPECT_THROW(ec(1, 0) + p, LatticeMismatch);
}

TEST(PrimitiveNormalizeTest, KnownValues) {
  EXPECT_EQ(primitive_normalize(ec(2, -4)), ec(1, -2));
  EXPECT_EQ(primitive_normalize(ec(-1, 2)), ec(1, -2));
  EXPECT_EQ(primitive_normalize(ec(1, -3)), ec(1, -3));
  EXPECT_EQ(primitive_normalize(ec(0, -6)), ec(0, 1));
  EXPECT_THROW(primitive_normalize(DivisorClass::zero(ell())), std::invalid_argument);
}

TEST(PrimitiveNormalizeTest, IdempotentPrimitiveAndProportional) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> c(-60, 60);
  for (int i = 0; i < 1000; ++i) {
    const DivisorClass d = ec(c(rng), c(rng));
    if (d.is_zero()) continue;
    const DivisorClass n = primitive_normalize(d);
    EXPECT_EQ(primitive_normalize(n), n);
    EXPECT_EQ(gcd(n[0], n[1]), 1);
    EXPECT_EQ(n[0] * d[1], n[1] * d[0]);
    EXPECT_EQ(primitive_normalize(-d), n);
  }
}

TEST(PerpMeetsAmpleTest, KnownValues) {
  EXPECT_TRUE(perp_meets_ample(ec(1, -2)));
  EXPECT_FALSE(perp_meets_ample(ec(1, 0)));
  EXPECT_FALSE(perp_meets_ample(ec(0, 1)));
  EXPECT_THROW(perp_meets_ample(DivisorClass::zero(ell())), std::invalid_argument);
}

TEST(PerpMeetsAmpleTest, MatchesSearchForOrthogonalAmpleClass) {
  for (long p = -8; p <= 8; ++p) {
    for (long q = -8; q <= 8; ++q) {
      if (p == 0 && q == 0) continue;
      EXPECT_EQ(perp_meets_ample(ec(p, q)), ample_perp_by_search(p, q)) << ec(p, q).str();
    }
  }
}

TEST(AmpleTest, Interior) {
  EXPECT_TRUE(is_ample_elliptic(ec(1, 3)));
  EXPECT_TRUE(is_ample_elliptic(ec(1, 4)));
  EXPECT_FALSE(is_ample_elliptic(ec(1, 2)));
  EXPECT_FALSE(is_ample_elliptic(ec(0, 1)));
  EXPECT_FALSE(is_ample_elliptic(ec(-1, -3)));
}

TEST(ParseDivisorTest, AcceptsExpressions) {
  EXPECT_EQ(parse_divisor(ell(), "2e-2s"), ec(-2, 2));
  EXPECT_EQ(parse_divisor(ell(), "sigma+4e"), ec(1, 4));
  EXPECT_EQ(parse_divisor(ell(), "-s"), ec(-1, 0));
  EXPECT_EQ(parse_divisor(ell(), "3*e + s - e"), ec(1, 2));
  EXPECT_EQ(parse_divisor(ell(), "0"), ec(0, 0));
  const DivisorClass f = parse_divisor(NSLattice::pell(), "f");
  EXPECT_EQ(f, DivisorClass(NSLattice::pell(), {0, 0, 1}));
}

TEST(ParseDivisorTest, RejectsMalformed) {
  for (const char* bad : {"", "2x", "+", "s+", "2", "e e", "3**e", "s-"}) {
    EXPECT_THROW(parse_divisor(ell(), bad), std::invalid_argument) << bad;
  }
}

TEST(ParseDivisorTest, RoundTripsPrintedForm) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> c(-30, 30);
  for (int i = 0; i < 500; ++i) {
    const DivisorClass d = ec(c(rng), c(rng));
    EXPECT_EQ(parse_divisor(ell(), d.str()), d) << d.str();
  }
  EXPECT_EQ(ec(-82, 82).str(), "-82s+82e");
  EXPECT_EQ(ec(1, -2).str(), "s-2e");
  EXPECT_EQ(ec(0, 0).str(), "0");
}

}  // namespace
}  // namespace k3
