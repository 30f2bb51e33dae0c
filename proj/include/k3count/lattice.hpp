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

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "k3count/integer.hpp"

namespace k3 {

/// An integral lattice given by a symmetric Gram matrix in a fixed basis.
class NSLattice {
 public:
  /// Throws std::invalid_argument unless gram is square, symmetric and has
  /// one label per basis vector. `aliases` maps extra input spellings to
  /// basis indices (e.g. "sigma" -> 0).
  NSLattice(std::vector<std::vector<Integer>> gram, std::vector<std::string> labels,
            std::map<std::string, std::size_t> aliases = {});

  /// Elliptic K3 with a section: basis (sigma, e), sigma^2 = -2, sigma.e = 1,
  /// e^2 = 0. Labels "s", "e"; "sigma" accepted on input.
  static std::shared_ptr<const NSLattice> elliptic();

  /// Rank-3 lattice diag(12, -6, -30), labelled h, e, f.
  static std::shared_ptr<const NSLattice> pell();

  std::size_t rank() const { return labels_.size(); }
  const Integer& gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of a basis label or alias, or rank() when unknown.
  std::size_t index_of(std::string_view label) const;

  bool operator==(const NSLattice& other) const {
    return gram_ == other.gram_ && labels_ == other.labels_;
  }

 private:
  std::vector<std::vector<Integer>> gram_;
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t, std::less<>> aliases_;
};

using LatticePtr = std::shared_ptr<const NSLattice>;

class LatticeMismatch : public std::invalid_argument {
 public:
  LatticeMismatch() : std::invalid_argument("divisor classes live on different lattices") {}
};

/// An integer coordinate vector on a lattice.
class DivisorClass {
 public:
  DivisorClass(LatticePtr lattice, std::vector<Integer> coeffs);
  static DivisorClass zero(LatticePtr lattice);

  const NSLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;
  bool same_lattice(const DivisorClass& other) const;

  DivisorClass operator-() const;
  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Integer& k, const DivisorClass& d);

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.same_lattice(b) && a.coeffs_ == b.coeffs_;
  }

  /// Linear expression over the lattice labels, e.g. "s-2e", "-82s+82e", "0".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const DivisorClass& x) { return os << x.str(); }

 private:
  LatticePtr lattice_;
  std::vector<Integer> coeffs_;
};

/// D1^T * gram * D2. Throws LatticeMismatch across lattices.
Integer intersect(const DivisorClass& a, const DivisorClass& b);

/// Divides by the content and makes the first non-zero coefficient positive.
/// Throws std::invalid_argument on the zero class.
DivisorClass primitive_normalize(const DivisorClass& d);

/// p*sigma + q*e on the elliptic lattice.
DivisorClass elliptic_class(const Integer& sigma_coeff, const Integer& e_coeff);

bool is_elliptic(const NSLattice& lattice);

/// Whether D^perp meets the open ample cone of the elliptic lattice. The nef
/// cone is spanned by e and 2e + sigma, so this holds exactly when D.e and
/// D.(2e + sigma) are non-zero with opposite signs.
bool perp_meets_ample(const DivisorClass& d);

/// Whether H lies in the open ample cone of the elliptic lattice.
bool is_ample_elliptic(const DivisorClass& h);

/// Parses linear expressions such as "2e-2s", "sigma - e", "3*h+2e-f" or "0".
/// Throws std::invalid_argument on malformed input or unknown labels.
DivisorClass parse_divisor(const LatticePtr& lattice, std::string_view text);

}  // namespace k3
