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

#include "k3count/pell_cert.hpp"

#include <stdexcept>

namespace k3 {

bool is_pseudoeffective(const DivisorClass& d) {
  if (!(d.lattice() == *NSLattice::pell())) {
    throw std::invalid_argument("pseudo-effectivity is certified on the Pell lattice only");
  }
  return intersect(d, d) >= 0 && d[0] >= 0;
}

bool PellCertificate::all_passed() const { return first_failure() == nullptr; }

const CertificateCheck* PellCertificate::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

namespace {

constexpr int kMinusTwoSearchRadius = 20;

DivisorClass pell_class(const Integer& x, const Integer& y, const Integer& z) {
  return DivisorClass(NSLattice::pell(), {x, y, z});
}

void record(PellCertificate& cert, std::string name, const Rational& actual,
            const Rational& expected) {
  cert.checks.push_back({std::move(name), actual, expected, actual == expected});
}

void record_flag(PellCertificate& cert, std::string name, bool value) {
  record(cert, std::move(name), Rational(value ? 1 : 0), Rational(1));
}

}  // namespace

std::vector<PellCertificate> certify_family(std::size_t count) {
  const LatticePtr lattice = NSLattice::pell();
  const DivisorClass w = pell_class(0, 0, 1);
  std::vector<PellCertificate> certs;
  certs.reserve(count);
  const std::size_t minus_two = count == 0 ? 0 : count_minus_two_classes(kMinusTwoSearchRadius);

  for (const auto& sol : pell_solutions(count)) {
    const Integer& a = sol.x;
    const Integer& b = sol.y;
    PellCertificate cert{sol,
                         pell_class(a, b, 1),
                         pell_class(-a, -b, 0),
                         pell_class(7 * a, 7 * b, 3),
                         line_bundle_vector(pell_class(a, b, 1)) +
                             line_bundle_vector(pell_class(-a, -b, 0)),
                         {}};
    const DivisorClass diff = cert.d - cert.e;

    record(cert, "pell 2a^2-b^2", Rational(2 * a * a - b * b), Rational(1));
    record(cert, "(D-E)^2", Rational(intersect(diff, diff)), Rational(-6));
    const Rational chi = make_rational(intersect(diff, diff), 2) + 2;
    record(cert, "chi(O(E),O(D))", chi, Rational(-1));
    record(cert, "v(V).rk", Rational(cert.bundle_vector.rk), Rational(2));
    record_flag(cert, "v(V).c1 == f", cert.bundle_vector.c1 == w);
    record(cert, "v(V).s", Rational(cert.bundle_vector.s), Rational(-7));
    record_flag(cert, "v(V) spherical", is_spherical(cert.bundle_vector));
    record(cert, "H^2", Rational(intersect(cert.h, cert.h)), Rational(24));
    record_flag(cert, "H h-coefficient > 0", cert.h[0] > 0);
    record(cert, "(-2)-classes in search box", Rational(static_cast<unsigned long>(minus_two)),
           Rational(0));
    record(cert, "H.D", Rational(intersect(cert.h, cert.d)), Rational(-48));
    record(cert, "H.E", Rational(intersect(cert.h, cert.e)), Rational(-42));
    record(cert, "mu_H(V)", slope(chern_of(cert.bundle_vector), cert.h), Rational(-45));
    record_flag(cert, "D-E not pseudo-effective", !is_pseudoeffective(diff));
    record_flag(cert, "E-D not pseudo-effective", !is_pseudoeffective(-diff));

    for (std::size_t j = 0; j < certs.size(); ++j) {
      const std::string idx = std::to_string(j + 1);
      record_flag(cert, "D_" + idx + "-D not pseudo-effective",
                  !is_pseudoeffective(certs[j].d - cert.d));
      record_flag(cert, "E_" + idx + "-D not pseudo-effective",
                  !is_pseudoeffective(certs[j].e - cert.d));
    }
    certs.push_back(std::move(cert));
  }
  return certs;
}

std::size_t count_minus_two_classes(int radius) {
  std::size_t found = 0;
  for (int x = -radius; x <= radius; ++x) {
    for (int y = -radius; y <= radius; ++y) {
      for (int z = -radius; z <= radius; ++z) {
        const DivisorClass c = pell_class(x, y, z);
        if (intersect(c, c) == -2) ++found;
      }
    }
  }
  return found;
}

}  // namespace k3
