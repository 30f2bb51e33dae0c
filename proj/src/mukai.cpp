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

#include "k3count/mukai.hpp"

#include <stdexcept>

namespace k3 {

MukaiVector& MukaiVector::operator+=(const MukaiVector& other) {
  rk += other.rk;
  c1 += other.c1;
  s += other.s;
  return *this;
}

MukaiVector operator*(const Integer& k, const MukaiVector& v) {
  return MukaiVector{k * v.rk, k * v.c1, k * v.s};
}

MukaiVector MukaiVector::operator-() const { return MukaiVector{-rk, -c1, -s}; }

std::string MukaiVector::str() const {
  return "(" + rk.get_str() + ", " + c1.str() + ", " + s.get_str() + ")";
}

std::string ChernVector::str() const {
  return "(" + rk.get_str() + ", " + ch1.str() + ", " + ch2.get_str() + ")";
}

ParamCoords::ParamCoords(Integer n, Integer m, Integer k)
    : n_(std::move(n)), m_(std::move(m)), k_(std::move(k)) {
  if (m_ < 1) throw std::invalid_argument("rank parameter m must be positive");
  if (gcd(n_, m_) != 1) {
    throw std::invalid_argument("slope " + n_.get_str() + "/" + m_.get_str() +
                                " is not in lowest terms");
  }
}

ParamCoords::ParamCoords(const ReducedFraction& slope, Integer k)
    : ParamCoords(slope.num(), slope.den(), std::move(k)) {}

Integer ParamCoords::fiber_coefficient() const {
  return k_ * m_ + n_ - mod_inverse_canonical(n_, m_);
}

std::string ParamCoords::str() const {
  return "(" + n_.get_str() + "/" + m_.get_str() + ", " + k_.get_str() + ")";
}

Integer mukai_pairing(const MukaiVector& v, const MukaiVector& w) {
  return intersect(v.c1, w.c1) - v.rk * w.s - w.rk * v.s;
}

bool is_spherical(const MukaiVector& v) { return v.rk > 0 && mukai_pairing(v, v) == -2; }

MukaiVector line_bundle_vector(const DivisorClass& d) {
  Integer square = intersect(d, d);
  if (!divides(Integer(2), square)) {
    throw std::invalid_argument("line bundle class with odd self-intersection");
  }
  return MukaiVector{1, d, square / 2 + 1};
}

MukaiVector twist_reflect(const MukaiVector& w, const MukaiVector& v) {
  if (!is_spherical(w)) {
    throw std::invalid_argument("twist center " + w.str() + " is not spherical");
  }
  return v + mukai_pairing(w, v) * w;
}

ChernVector chern_of(const MukaiVector& v) { return ChernVector{v.rk, v.c1, v.s - v.rk}; }

MukaiVector mukai_of(const ChernVector& c) { return MukaiVector{c.rk, c.ch1, c.ch2 + c.rk}; }

Integer discriminant(const ChernVector& c) { return intersect(c.ch1, c.ch1) - 2 * c.rk * c.ch2; }

Rational slope(const ChernVector& c, const DivisorClass& h) {
  if (c.rk == 0) throw std::domain_error("slope is undefined in rank zero");
  Rational mu(intersect(h, c.ch1), c.rk);
  mu.canonicalize();
  return mu;
}

MukaiVector from_param(const ParamCoords& p) {
  const Integer& n = p.n();
  const Integer& m = p.m();
  const Integer b = p.fiber_coefficient();
  const Integer numerator = -n * n + n * b + 1;
  if (!divides(m, numerator)) {
    throw std::logic_error("spherical parametrization produced a non-integral s for " + p.str());
  }
  return MukaiVector{m, elliptic_class(n, b), numerator / m};
}

ParamCoords to_param(const MukaiVector& v) {
  if (!is_elliptic(v.c1.lattice())) {
    throw std::invalid_argument("parametrization is defined on the elliptic lattice only");
  }
  if (!is_spherical(v)) throw std::invalid_argument(v.str() + " is not spherical");
  const Integer& m = v.rk;
  const Integer& n = v.c1[0];
  const Integer& b = v.c1[1];
  // <v,v> = -2 forces m | n^2 - bn - 1, hence gcd(n, m) = 1 and
  // b = n - n^-1 (mod m).
  const Integer shifted = b - n + mod_inverse_canonical(n, m);
  if (!divides(m, shifted)) {
    throw std::logic_error("fiber coefficient of " + v.str() + " is off the expected residue");
  }
  return ParamCoords(n, m, shifted / m);
}

}  // namespace k3
