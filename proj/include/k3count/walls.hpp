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

#include <cstddef>
#include <optional>
#include <vector>

#include "k3count/arith.hpp"
#include "k3count/integer.hpp"
#include "k3count/lattice.hpp"
#include "k3count/mukai.hpp"

namespace k3 {

/// A wall in the ample cone of the elliptic lattice, identified by the
/// primitive class delta = p*sigma + q*e (p > 0) whose orthogonal it is. The
/// wall is the ray through sigma + c*e with c = 2 - q/p > 2.
struct Wall {
  DivisorClass delta;
  Rational position;

  friend bool operator==(const Wall& a, const Wall& b) { return a.delta == b.delta; }
};

/// Orders walls by position along the ample cone.
bool wall_less(const Wall& a, const Wall& b);

/// Builds the wall orthogonal to `d`; throws std::logic_error if d^perp
/// misses the ample cone.
Wall make_wall(const DivisorClass& d);

/// A spherical vector v(s/r, k) of smaller rank that destabilizes the target.
struct Destabilizer {
  ReducedFraction slope;
  Integer k;
  MukaiVector vector;
  Wall wall;
};

struct CountReport {
  ParamCoords target;
  std::vector<Destabilizer> destabilizers;
  /// Distinct walls, sorted by position.
  std::vector<Wall> walls;
  std::size_t h_value = 1;
};

/// Which candidate ranks r to scan: r <= m/2 suffices, r < m is the full
/// criterion. Both produce the same wall set.
enum class RankBound { Half, BelowTarget };

/// Inclusive range of integers.
struct KRange {
  Integer first;
  Integer last;
  Integer size() const { return last - first + 1; }
};

/// Whether v(cand, k) destabilizes the target v(n/m, k_target): r < m and
///   (n/m - s/r)^2 - 1/r^2 < (n/m - s/r) (b_target/m - b/r) < 0,
/// where b, b_target are the e-coefficients of the two first Chern classes.
/// Evaluated in exact rational arithmetic, term by term.
bool is_destabilizing(const ParamCoords& target, const ReducedFraction& cand, const Integer& k);

/// Convenience overload for a target with k = 0.
bool is_destabilizing(const ReducedFraction& target, const ReducedFraction& cand,
                      const Integer& k);

/// All k for which v(cand, k) destabilizes the target, solved as an open
/// interval in k. Empty when r >= m or the interval has no integer point.
std::optional<KRange> destabilizing_k_range(const ParamCoords& target,
                                            const ReducedFraction& cand);

/// Number of k with is_destabilizing(target, cand, k), the function F.
Integer factor_count(const ReducedFraction& target, const ReducedFraction& cand);

/// F computed through divisibility instead of the k-interval:
///   #{t >= 1 : (rn - ms) | m^2 + r^2 - tmr  and  m^2 + r^2 - tmr > (rn - ms)^2}.
/// Requires gcd(m, r) = 1 and r < m; throws std::invalid_argument otherwise.
Integer factor_count_by_divisors(const ReducedFraction& target, const ReducedFraction& cand);

/// Wall between the target and v(cand, k).
Wall wall_of(const ParamCoords& target, const ReducedFraction& cand, const Integer& k);

/// Requires m >= 2. Every destabilizer with r in the chosen rank range, in
/// order of increasing r, then s, then k.
std::vector<Destabilizer> enumerate_destabilizers(const ParamCoords& target,
                                                  RankBound bound = RankBound::Half);

/// Distinct walls of the target, sorted by position.
std::vector<Wall> actual_walls(const ParamCoords& target, RankBound bound = RankBound::Half);

/// Full report for H(a): a is reduced mod 1 to n/m with 0 <= n < m and the
/// target is v(n/m, 0).
CountReport count_chambers(const Rational& a);

/// H(a) without building the report.
std::size_t chamber_count(const Rational& a);

/// G(m, r) = 2 * sum over a in A_{m,r} of floor(tau(a)/2), where A_{m,r} is
/// the set {m^2 + r^2 - t r m : t in Z} intersected with [1, m^2].
/// Requires m >= 2 and 1 <= r < m. `table`, if given, must cover m^2.
Integer g_sum(const Integer& m, const Integer& r, const DivisorCountTable* table = nullptr);

/// G(m) = sum of G(m, r) over 1 <= r < m with gcd(r, m) = 1.
Integer g_total(const Integer& m, const DivisorCountTable* table = nullptr);

/// G'(m) = sum of tau(a) over the set A_m of values m^2 + r^2 - t r m in
/// [1, m^2] with r, t >= 1 and gcd(m, r) = 1.
Integer g_prime(const Integer& m, const DivisorCountTable* table = nullptr);

/// Sorted distinct values of A_m. Scans r < m only; a value reached with
/// r > m is also reached with tm - r.
std::vector<Integer> a_set(const Integer& m);

/// Superset of the numerical walls of a Chern character (rk, l, ch2): every
/// primitive delta with delta^perp meeting the ample cone and
/// delta^2 >= -rk^2 l^2 + 2 rk^3 ch2 (the bound is replaced by -1 when it is
/// non-negative). Requires rk > 0 and (rk, l) primitive.
std::vector<Wall> numerical_wall_candidates(const ChernVector& c);

/// The lower bound on delta^2 used above, after the -1 replacement.
Integer numerical_wall_bound(const ChernVector& c);

/// Membership in numerical_wall_candidates(c) without enumerating the set,
/// which has on the order of rk^4 log(rk) elements.
bool is_numerical_wall_candidate(const ChernVector& c, const Wall& wall);

}  // namespace k3
