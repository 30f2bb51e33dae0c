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
#include <string>
#include <vector>

#include "k3count/arith.hpp"
#include "k3count/integer.hpp"
#include "k3count/lattice.hpp"
#include "k3count/mukai.hpp"

namespace k3 {

// Numeric certificates for a family of rank-2 spherical bundles V on the
// lattice diag(12, -6, -30) with basis (h, u, w) (printed as h, e, f). For a
// solution (a, b) of 2a^2 - b^2 = 1:
//   D = a h + b u + w,   E = -a h - b u,   H = 7a h + 7b u + 3w,
// and V is the non-split extension of O(E) by O(D).

/// Pseudo-effective classes on the Pell lattice: D^2 >= 0 and h-coefficient
/// >= 0. Throws std::invalid_argument on any other lattice.
bool is_pseudoeffective(const DivisorClass& d);

struct CertificateCheck {
  std::string name;
  Rational actual;
  Rational expected;
  bool passed = false;
};

struct PellCertificate {
  PellSolution solution;
  DivisorClass d;
  DivisorClass e;
  DivisorClass h;
  MukaiVector bundle_vector;
  std::vector<CertificateCheck> checks;

  bool all_passed() const;
  /// The first failed check, or nullptr.
  const CertificateCheck* first_failure() const;
};

/// Certificates for the first `count` Pell solutions. Each one records every
/// numeric ingredient (with values) and the non-effectivity of D_j - D_i and
/// E_j - D_i against every earlier solution j.
std::vector<PellCertificate> certify_family(std::size_t count);

/// Number of classes x h + y u + z w with |x|, |y|, |z| <= radius and square
/// -2. The ampleness criterion assumes there are none.
std::size_t count_minus_two_classes(int radius);

}  // namespace k3
