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

#include <string>

#include "k3count/arith.hpp"
#include "k3count/integer.hpp"
#include "k3count/lattice.hpp"

namespace k3 {

/// (rank, first Chern class, s) with s = ch2 + rank.
struct MukaiVector {
  Integer rk;
  DivisorClass c1;
  Integer s;

  MukaiVector& operator+=(const MukaiVector& other);
  friend MukaiVector operator+(MukaiVector a, const MukaiVector& b) { return a += b; }
  friend MukaiVector operator*(const Integer& k, const MukaiVector& v);
  MukaiVector operator-() const;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;

  /// "(113, -82s+82e, -119)"
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const MukaiVector& x) { return os << x.str(); }
};

struct ChernVector {
  Integer rk;
  DivisorClass ch1;
  Integer ch2;

  friend bool operator==(const ChernVector&, const ChernVector&) = default;
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const ChernVector& x) { return os << x.str(); }
};

/// Coordinates (n/m, k) of a spherical Mukai vector on the elliptic lattice.
/// n/m is in lowest terms with m >= 1; for m == 1 every integer n is allowed.
class ParamCoords {
 public:
  /// Throws std::invalid_argument if m < 1 or gcd(n, m) != 1.
  ParamCoords(Integer n, Integer m, Integer k = 0);
  ParamCoords(const ReducedFraction& slope, Integer k = 0);

  const Integer& n() const { return n_; }
  const Integer& m() const { return m_; }
  const Integer& k() const { return k_; }
  ReducedFraction slope() const { return ReducedFraction::from_reduced(n_, m_); }

  /// Coefficient of e in c1: k*m + n - (n^-1 mod m).
  Integer fiber_coefficient() const;

  friend bool operator==(const ParamCoords&, const ParamCoords&) = default;
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const ParamCoords& x) { return os << x.str(); }

 private:
  Integer n_;
  Integer m_;
  Integer k_;
};

Integer mukai_pairing(const MukaiVector& v, const MukaiVector& w);
bool is_spherical(const MukaiVector& v);

/// (1, D, D^2/2 + 1). Throws std::invalid_argument when D^2 is odd.
MukaiVector line_bundle_vector(const DivisorClass& d);

/// v + <w, v> w, the action of the spherical twist along w on Mukai vectors.
/// Throws std::invalid_argument unless w is spherical.
MukaiVector twist_reflect(const MukaiVector& w, const MukaiVector& v);

ChernVector chern_of(const MukaiVector& v);
MukaiVector mukai_of(const ChernVector& c);

/// ch1^2 - 2 rk ch2.
Integer discriminant(const ChernVector& c);

/// (H . ch1) / rk. Throws std::domain_error for rank zero.
Rational slope(const ChernVector& c, const DivisorClass& h);

MukaiVector from_param(const ParamCoords& p);

/// Inverse of from_param. Throws std::invalid_argument for non-spherical
/// vectors or vectors off the elliptic lattice.
ParamCoords to_param(const MukaiVector& v);

}  // namespace k3
