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

#include "k3count/walls.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace k3 {

bool wall_less(const Wall& a, const Wall& b) {
  if (a.position != b.position) return a.position < b.position;
  return a.delta.coeffs() < b.delta.coeffs();
}

Wall make_wall(const DivisorClass& d) {
  if (d.is_zero() || !perp_meets_ample(d)) {
    throw std::logic_error("class " + d.str() + " does not define a wall in the ample cone");
  }
  DivisorClass delta = primitive_normalize(d);
  Rational position = Rational(2) - make_rational(delta[1], delta[0]);
  position.canonicalize();
  return Wall{std::move(delta), std::move(position)};
}

namespace {

// Data of one candidate (s/r) against a target with e-coefficient b_target.
// The wall class for k is d*sigma + (e0 - m*r*k)*e, and k destabilizes iff
//   d^2 - m^2 < d * (e0 - m*r*k) < 0.
struct Candidate {
  Integer d;
  Integer e0;
  KRange ks;
};

std::optional<Candidate> solve_candidate(const Integer& n, const Integer& m,
                                         const Integer& b_target, const Integer& s,
                                         const Integer& r) {
  if (r < 1 || r >= m) return std::nullopt;
  Integer d = r * n - m * s;
  if (d == 0 || abs(d) >= m) return std::nullopt;
  Integer e0 = r * b_target - m * (s - mod_inverse_canonical(s, r));

  Integer c = d * m * r;
  Integer lo = d * e0;
  Integer hi = lo + m * m - d * d;
  if (c < 0) {
    c = -c;
    Integer flipped_lo = -hi;
    hi = -lo;
    lo = std::move(flipped_lo);
  }
  // c*k in the open interval (lo, hi).
  Integer first = floor_div(lo, c) + 1;
  Integer last = ceil_div(hi, c) - 1;
  if (first > last) return std::nullopt;
  return Candidate{std::move(d), std::move(e0), KRange{std::move(first), std::move(last)}};
}

// Calls visit(s, r, candidate) for every s/r in the rank range with at least
// one destabilizing k. Outside the window |n/m - s/r| < 1/r nothing
// destabilizes, so s ranges over (rn/m - 1, rn/m + 1).
template <class Visit>
void scan_candidates(const ParamCoords& target, RankBound bound, Visit&& visit) {
  const Integer& n = target.n();
  const Integer& m = target.m();
  if (m < 2) return;
  const Integer b_target = target.fiber_coefficient();
  const Integer r_max = bound == RankBound::Half ? Integer(m / 2) : Integer(m - 1);
  for (Integer r = 1; r <= r_max; ++r) {
    const Integer rn = r * n;
    const Integer s_first = floor_div(rn - m, m) + 1;
    const Integer s_last = ceil_div(rn + m, m) - 1;
    for (Integer s = s_first; s <= s_last; ++s) {
      if (gcd(s, r) != 1) continue;
      if (auto cand = solve_candidate(n, m, b_target, s, r)) visit(s, r, *cand);
    }
  }
}

std::pair<Integer, Integer> normalized_ray(const Integer& p, const Integer& q) {
  Integer g = gcd(p, q);
  Integer np = p / g;
  Integer nq = q / g;
  if (np < 0) {
    np = -np;
    nq = -nq;
  }
  if (!(np > 0 && nq < 0)) {
    throw std::logic_error("destabilizing wall misses the ample cone");
  }
  return {std::move(np), std::move(nq)};
}

ParamCoords target_mod_one(const Rational& a) {
  ReducedFraction reduced = ReducedFraction(a).mod_one();
  return ParamCoords(reduced.num(), reduced.den(), 0);
}

}  // namespace

bool is_destabilizing(const ParamCoords& target, const ReducedFraction& cand, const Integer& k) {
  const Integer& r = cand.den();
  const Integer& s = cand.num();
  if (r >= target.m()) return false;
  const Integer b_cand = k * r + s - mod_inverse_canonical(s, r);

  const Rational offset = target.slope().value() - cand.value();
  const Rational drift =
      make_rational(target.fiber_coefficient(), target.m()) - make_rational(b_cand, r);
  const Rational middle = offset * drift;
  const Rational left = offset * offset - make_rational(1, r * r);
  return left < middle && middle < 0;
}

bool is_destabilizing(const ReducedFraction& target, const ReducedFraction& cand,
                      const Integer& k) {
  return is_destabilizing(ParamCoords(target), cand, k);
}

std::optional<KRange> destabilizing_k_range(const ParamCoords& target,
                                            const ReducedFraction& cand) {
  if (auto c = solve_candidate(target.n(), target.m(), target.fiber_coefficient(), cand.num(),
                               cand.den())) {
    return std::move(c->ks);
  }
  return std::nullopt;
}

Integer factor_count(const ReducedFraction& target, const ReducedFraction& cand) {
  auto ks = destabilizing_k_range(ParamCoords(target), cand);
  return ks ? ks->size() : Integer(0);
}

Integer factor_count_by_divisors(const ReducedFraction& target, const ReducedFraction& cand) {
  const Integer& n = target.num();
  const Integer& m = target.den();
  const Integer& s = cand.num();
  const Integer& r = cand.den();
  if (r >= m) throw std::invalid_argument("candidate rank must be below the target rank");
  if (gcd(m, r) != 1) throw std::invalid_argument("divisor form of F needs gcd(m, r) = 1");
  const Integer d = abs(Integer(r * n - m * s));
  const Integer floor_value = d * d;
  const Integer step = m * r;
  Integer count = 0;
  for (Integer a = m * m + r * r - step; a > floor_value; a -= step) {
    if (divides(d, a)) ++count;
  }
  return count;
}

Wall wall_of(const ParamCoords& target, const ReducedFraction& cand, const Integer& k) {
  const Integer& m = target.m();
  const Integer& s = cand.num();
  const Integer& r = cand.den();
  const Integer d = r * target.n() - m * s;
  const Integer b_cand = k * r + s - mod_inverse_canonical(s, r);
  const Integer e = r * target.fiber_coefficient() - m * b_cand;
  return make_wall(elliptic_class(d, e));
}

std::vector<Destabilizer> enumerate_destabilizers(const ParamCoords& target, RankBound bound) {
  if (target.m() < 2) throw std::invalid_argument("destabilizers need target rank >= 2");
  std::vector<Destabilizer> out;
  scan_candidates(target, bound, [&](const Integer& s, const Integer& r, const Candidate& c) {
    const ReducedFraction slope = ReducedFraction::from_reduced(s, r);
    for (Integer k = c.ks.first; k <= c.ks.last; ++k) {
      const Integer e = c.e0 - target.m() * r * k;
      out.push_back(Destabilizer{slope, k, from_param(ParamCoords(slope, k)),
                                 make_wall(elliptic_class(c.d, e))});
    }
  });
  return out;
}

std::vector<Wall> actual_walls(const ParamCoords& target, RankBound bound) {
  std::vector<Wall> walls;
  if (target.m() < 2) return walls;
  for (auto& dest : enumerate_destabilizers(target, bound)) walls.push_back(std::move(dest.wall));
  std::sort(walls.begin(), walls.end(), wall_less);
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  return walls;
}

CountReport count_chambers(const Rational& a) {
  CountReport report{target_mod_one(a), {}, {}, 1};
  if (report.target.m() < 2) return report;
  report.destabilizers = enumerate_destabilizers(report.target, RankBound::Half);
  for (const auto& dest : report.destabilizers) report.walls.push_back(dest.wall);
  std::sort(report.walls.begin(), report.walls.end(), wall_less);
  report.walls.erase(std::unique(report.walls.begin(), report.walls.end()), report.walls.end());
  // The ample cone is a 2-dimensional cone cut by rays.
  report.h_value = report.walls.size() + 1;
  return report;
}

std::size_t chamber_count(const Rational& a) {
  const ParamCoords target = target_mod_one(a);
  std::vector<std::pair<Integer, Integer>> rays;
  scan_candidates(target, RankBound::Half,
                  [&](const Integer&, const Integer& r, const Candidate& c) {
                    const Integer step = target.m() * r;
                    Integer e = c.e0 - step * c.ks.first;
                    for (Integer k = c.ks.first; k <= c.ks.last; ++k, e -= step) {
                      rays.push_back(normalized_ray(c.d, e));
                    }
                  });
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays.size() + 1;
}

namespace {

void require_g_range(const Integer& m, const Integer& r) {
  if (m < 2) throw std::invalid_argument("G sums need m >= 2");
  if (r < 1 || r >= m) throw std::invalid_argument("G(m, r) needs 1 <= r < m");
}

std::uint64_t divisor_count(const Integer& a, const DivisorCountTable* table) {
  if (table && a.fits_ulong_p() && a.get_ui() <= table->limit()) return (*table)(a.get_ui());
  return tau(a);
}

// Local sieve when the caller did not provide one and m^2 is small enough.
std::optional<DivisorCountTable> local_table(const Integer& m, const DivisorCountTable* table) {
  const Integer square = m * m;
  if (table && square <= table->limit()) return std::nullopt;
  if (square > 20'000'000) return std::nullopt;
  return DivisorCountTable(square.get_ui());
}

}  // namespace

Integer g_sum(const Integer& m, const Integer& r, const DivisorCountTable* table) {
  require_g_range(m, r);
  const Integer step = r * m;
  Integer total = 0;
  for (Integer a = m * m + r * r - step; a >= 1; a -= step) {
    total += 2 * (divisor_count(a, table) / 2);
  }
  return total;
}

Integer g_total(const Integer& m, const DivisorCountTable* table) {
  if (m < 2) throw std::invalid_argument("G sums need m >= 2");
  auto owned = local_table(m, table);
  const DivisorCountTable* use = owned ? &*owned : table;
  Integer total = 0;
  for (Integer r = 1; r < m; ++r) {
    if (gcd(r, m) == 1) total += g_sum(m, r, use);
  }
  return total;
}

std::vector<Integer> a_set(const Integer& m) {
  if (m < 2) throw std::invalid_argument("A_m needs m >= 2");
  std::vector<Integer> values;
  for (Integer r = 1; r < m; ++r) {
    if (gcd(r, m) != 1) continue;
    const Integer step = r * m;
    for (Integer a = m * m + r * r - step; a >= 1; a -= step) values.push_back(a);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

Integer g_prime(const Integer& m, const DivisorCountTable* table) {
  auto owned = local_table(m, table);
  const DivisorCountTable* use = owned ? &*owned : table;
  Integer total = 0;
  for (const auto& a : a_set(m)) total += divisor_count(a, use);
  return total;
}

Integer numerical_wall_bound(const ChernVector& c) {
  if (!is_elliptic(c.ch1.lattice())) {
    throw std::invalid_argument("numerical walls are enumerated on the elliptic lattice only");
  }
  if (c.rk <= 0) throw std::invalid_argument("numerical walls need positive rank");
  if (gcd(gcd(c.rk, c.ch1[0]), c.ch1[1]) != 1) {
    throw std::invalid_argument("(rk, ch1) must be primitive");
  }
  Integer bound = -c.rk * c.rk * intersect(c.ch1, c.ch1) + 2 * c.rk * c.rk * c.rk * c.ch2;
  if (bound >= 0) bound = -1;
  return bound;
}

bool is_numerical_wall_candidate(const ChernVector& c, const Wall& wall) {
  const Integer bound = numerical_wall_bound(c);
  return wall.delta == primitive_normalize(wall.delta) && perp_meets_ample(wall.delta) &&
         intersect(wall.delta, wall.delta) >= bound;
}

std::vector<Wall> numerical_wall_candidates(const ChernVector& c) {
  const Integer bound = numerical_wall_bound(c);
  // delta = p*sigma - j*e with p, j >= 1 has delta^2 = -2p(p + j).
  const Integer limit = floor_div(-bound, 2);
  std::vector<Wall> out;
  for (Integer p = 1; p * (p + 1) <= limit; ++p) {
    for (Integer j = 1; p * (p + j) <= limit; ++j) {
      if (gcd(p, j) == 1) out.push_back(make_wall(elliptic_class(p, -j)));
    }
  }
  std::sort(out.begin(), out.end(), wall_less);
  return out;
}

}  // namespace k3
