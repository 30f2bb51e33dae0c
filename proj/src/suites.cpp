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

#include "k3count/suites.hpp"

#include <array>
#include <functional>
#include <random>
#include <stdexcept>

#include "k3count/arith.hpp"
#include "k3count/bounds.hpp"
#include "k3count/mukai.hpp"
#include "k3count/parallel.hpp"
#include "k3count/pell_cert.hpp"
#include "k3count/published_counts.hpp"
#include "k3count/walls.hpp"

namespace k3 {

bool SuiteResult::passed() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& l : lines) n += l.passed ? 0 : 1;
  return n;
}

namespace {

constexpr std::array<std::string_view, 8> kSuites{
    "published-table", "factor-properties", "counting-identities", "fibonacci",
    "families",        "pell",              "twist",               "numerical-walls"};

std::string h_label(const Integer& n, const Integer& m) {
  return "H(" + n.get_str() + "/" + m.get_str() + ")";
}

// Tallies many cases into one line, keeping the first counterexample.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (!ok && failed_ == 0) first_failure_ = describe();
    if (!ok) ++failed_;
  }

  CheckLine line() const {
    std::string detail = std::to_string(cases_) + " cases";
    if (failed_ > 0) {
      detail += ", " + std::to_string(failed_) + " failed; first: " + first_failure_;
    }
    return {name_, failed_ == 0, detail};
  }

 private:
  std::string name_;
  std::size_t cases_ = 0;
  std::size_t failed_ = 0;
  std::string first_failure_;
};

std::string case_text(const ReducedFraction& t, const ReducedFraction& c) {
  return "n/m=" + t.str() + " s/r=" + c.str();
}

void suite_published_table(SuiteResult& out, unsigned jobs) {
  const auto table = published_counts();
  const auto computed = parallel_map(table.size(), jobs, [&](std::size_t i) {
    return chamber_count(make_rational(table[i].n, table[i].m));
  });
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& row = table[i];
    out.lines.push_back({h_label(row.n, row.m) + " = " + std::to_string(row.h),
                         computed[i] == static_cast<std::size_t>(row.h),
                         "computed " + std::to_string(computed[i])});
  }
}

void suite_factor_properties(SuiteResult& out, unsigned jobs) {
  constexpr long kMaxM = 60;
  Tally symmetry("F symmetry under (n/m, s/r) -> (1-n/m, 1-s/r), m <= 60");
  Tally vanishing("F = 0 when |rn-ms| >= m, m <= 60");
  Tally lower("F >= floor((m^2-d^2)/(mrd)) when 0 < d < m, m <= 60");
  Tally h_lower("H >= F + 1, m <= 60");
  Tally h_upper("H <= 1 + sum F over r <= m/2, m <= 60");
  Tally monotone("F(n/m,s/r) <= F(an/m,as/r), a = gcd(m,r), m <= 60");

  std::vector<ReducedFraction> targets;
  for (long m = 2; m <= kMaxM; ++m) {
    for (long n = 1; n < m; ++n) {
      if (std::gcd(n, m) == 1) targets.emplace_back(n, m);
    }
  }
  const auto hs = parallel_map(targets.size(), jobs,
                               [&](std::size_t i) { return chamber_count(targets[i].value()); });

  for (std::size_t i = 0; i < targets.size(); ++i) {
    const ReducedFraction& t = targets[i];
    const long m = t.den().get_si();
    h_upper.check(chamber_upper_bound_holds(t, hs[i]), [&] { return t.str(); });
    for (long r = 1; r < m; ++r) {
      // s over a window well past |n/m - s/r| < 1/r so vanishing is exercised.
      for (long s = -r; s <= 2 * r; ++s) {
        if (std::gcd(s, r) != 1) continue;
        const ReducedFraction c = ReducedFraction::from_reduced(s, r);
        auto text = [&] { return case_text(t, c); };
        symmetry.check(factor_symmetry_holds(t, c), text);
        vanishing.check(factor_vanishing_holds(t, c), text);
        lower.check(factor_lower_bound_holds(t, c), text);
        h_lower.check(chamber_lower_bound_holds(t, c, hs[i]), text);
        monotone.check(gcd_monotonicity_holds(t, c), text);
      }
    }
  }
  for (const Tally* t : {&symmetry, &vanishing, &lower, &h_lower, &h_upper, &monotone}) {
    out.lines.push_back(t->line());
  }
}

void suite_counting_identities(SuiteResult& out, unsigned jobs) {
  Tally cases("solution counts follow the gcd case split, m <= 40");
  for (long m = 2; m <= 40; ++m) {
    for (long r = 1; r < m; ++r) {
      for (long d = 1; d < m; ++d) {
        cases.check(check_solution_count(m, r, d), [&] {
          return "m=" + std::to_string(m) + " r=" + std::to_string(r) + " d=" + std::to_string(d);
        });
      }
    }
  }
  out.lines.push_back(cases.line());

  const DivisorCountTable table(60 * 60);
  Tally identity("sum of F over S_{m,r} = G(m,r), m <= 60, gcd(m,r) = 1");
  for (long m = 2; m <= 60; ++m) {
    for (long r = 1; r < m; ++r) {
      if (std::gcd(m, r) != 1) continue;
      const IdentityCheck c = check_counting_identity(m, r, &table);
      identity.check(c.holds(), [&] {
        return "m=" + std::to_string(m) + " r=" + std::to_string(r) + ": " +
               c.factor_sum.get_str() + " vs " + c.g_value.get_str();
      });
    }
  }
  out.lines.push_back(identity.line());

  const IdentityCheck g31 = check_counting_identity(3, 1, &table);
  out.lines.push_back({"G(3,1) = 4 = sum of F over S_{3,1}", g31.holds() && g31.g_value == 4,
                       g31.factor_sum.get_str() + " vs " + g31.g_value.get_str()});

  Tally bound("sum of H(n/m) <= phi(m) + sum (phi(m)/phi(d)) G(d), m <= 120");
  const auto checks = parallel_map(119, jobs, [](std::size_t i) {
    return check_sum_bound(Integer(static_cast<unsigned long>(i + 2)));
  });
  for (std::size_t i = 0; i < checks.size(); ++i) {
    bound.check(checks[i].holds(), [&] {
      return "m=" + std::to_string(i + 2) + ": " + checks[i].h_sum.get_str() + " > " +
             checks[i].bound.get_str();
    });
  }
  out.lines.push_back(bound.line());
}

void suite_fibonacci(SuiteResult& out, unsigned jobs) {
  const auto hs = parallel_map(18, jobs, [](std::size_t i) {
    const std::uint64_t n = i + 3;
    return chamber_count(make_rational(fibonacci(n), fibonacci(n + 1)));
  });
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::uint64_t n = i + 3;
    const std::size_t expected = (n / 2) * (n / 2) + 2;
    out.lines.push_back({h_label(fibonacci(n), fibonacci(n + 1)) + " = " +
                             std::to_string(expected) + " (n=" + std::to_string(n) + ")",
                         hs[i] == expected, "computed " + std::to_string(hs[i])});
  }
}

void suite_families(SuiteResult& out, unsigned jobs) {
  Tally reciprocal("H(1/m) = m, 2 <= m <= 300");
  const auto h1 = parallel_map(299, jobs, [](std::size_t i) {
    return chamber_count(make_rational(1, static_cast<unsigned long>(i + 2)));
  });
  for (std::size_t i = 0; i < h1.size(); ++i) {
    reciprocal.check(h1[i] == i + 2, [&] {
      return "m=" + std::to_string(i + 2) + " gave " + std::to_string(h1[i]);
    });
  }
  out.lines.push_back(reciprocal.line());

  Tally near_half("H(n/(2n+1)) = n+4, 2 <= n <= 100");
  const auto h2 = parallel_map(99, jobs, [](std::size_t i) {
    const unsigned long n = i + 2;
    return chamber_count(make_rational(n, 2 * n + 1));
  });
  for (std::size_t i = 0; i < h2.size(); ++i) {
    near_half.check(h2[i] == i + 6, [&] {
      return "n=" + std::to_string(i + 2) + " gave " + std::to_string(h2[i]);
    });
  }
  out.lines.push_back(near_half.line());
}

void suite_pell(SuiteResult& out) {
  for (const auto& cert : certify_family(10)) {
    const CertificateCheck* bad = cert.first_failure();
    out.lines.push_back({"(a,b)=(" + cert.solution.x.get_str() + "," + cert.solution.y.get_str() +
                             "): " + std::to_string(cert.checks.size()) + " checks",
                         bad == nullptr,
                         bad ? bad->name + ": " + to_string(bad->actual) + " != " +
                                   to_string(bad->expected)
                             : "H.D=-48 H.E=-42 H^2=24 (D-E)^2=-6 chi=-1 v(V)=" +
                                   cert.bundle_vector.str() + " mu=-45"});
  }
}

void suite_twist(SuiteResult& out) {
  const MukaiVector start = line_bundle_vector(elliptic_class(-2, 2));
  const MukaiVector first = twist_reflect(line_bundle_vector(elliptic_class(1, -1)), start);
  const MukaiVector chain = twist_reflect(line_bundle_vector(elliptic_class(-1, 1)), first);
  const MukaiVector expected{113, elliptic_class(-82, 82), -119};
  out.lines.push_back({"T_O(e-s) T_O(s-e) v(O(2e-2s)) = (113, 82e-82s, -119)",
                       chain == expected, "computed " + chain.str()});

  std::mt19937_64 rng(20260417);
  std::uniform_int_distribution<long> small(-6, 6);
  std::uniform_int_distribution<long> rank(1, 30);
  Tally negation("T_v(v) = -v for spherical v");
  Tally isometry("twist preserves the Mukai pairing");
  Tally involution("twisting twice is the identity on vectors");
  for (int i = 0; i < 1000; ++i) {
    long m = rank(rng);
    long n = small(rng);
    while (std::gcd(n, m) != 1) n = small(rng);
    const MukaiVector w = from_param(ParamCoords(n, m, small(rng)));
    const MukaiVector v1{small(rng), elliptic_class(small(rng), small(rng)), small(rng)};
    const MukaiVector v2{small(rng), elliptic_class(small(rng), small(rng)), small(rng)};
    auto text = [&] { return "w=" + w.str() + " v=" + v1.str(); };
    negation.check(twist_reflect(w, w) == -w, text);
    isometry.check(
        mukai_pairing(twist_reflect(w, v1), twist_reflect(w, v2)) == mukai_pairing(v1, v2), text);
    involution.check(twist_reflect(w, twist_reflect(w, v1)) == v1, text);
  }
  out.lines.push_back(negation.line());
  out.lines.push_back(isometry.line());
  out.lines.push_back(involution.line());
}

void suite_numerical_walls(SuiteResult& out, unsigned jobs) {
  const ChernVector half = chern_of(from_param(ParamCoords(1, 2, 0)));
  const auto candidates = numerical_wall_candidates(half);
  bool has_basic = false;
  for (const auto& w : candidates) has_basic = has_basic || w.delta == elliptic_class(1, -2);
  out.lines.push_back({"v(1/2,0) has 14 candidate walls including s-2e",
                       candidates.size() == 14 && has_basic,
                       std::to_string(candidates.size()) + " candidates"});

  std::vector<ParamCoords> targets;
  for (long m = 2; m <= 40; ++m) {
    for (long n = 1; n < m; ++n) {
      if (std::gcd(n, m) == 1) targets.emplace_back(n, m, 0);
    }
  }
  const auto contained = parallel_map(targets.size(), jobs, [&](std::size_t i) {
    const ChernVector c = chern_of(from_param(targets[i]));
    for (const auto& wall : actual_walls(targets[i])) {
      if (!is_numerical_wall_candidate(c, wall)) return false;
    }
    return true;
  });
  Tally containment("actual walls lie among numerical wall candidates, m <= 40");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    containment.check(contained[i], [&] { return targets[i].str(); });
  }
  out.lines.push_back(containment.line());

  Tally ranges("walls from r <= m/2 equal walls from r < m, m <= 60");
  std::vector<ParamCoords> wide;
  for (long m = 2; m <= 60; ++m) {
    for (long n = 1; n < m; ++n) {
      if (std::gcd(n, m) == 1) wide.emplace_back(n, m, 0);
    }
  }
  const auto same = parallel_map(wide.size(), jobs, [&](std::size_t i) {
    return actual_walls(wide[i], RankBound::Half) == actual_walls(wide[i], RankBound::BelowTarget);
  });
  for (std::size_t i = 0; i < wide.size(); ++i) {
    ranges.check(same[i], [&] { return wide[i].str(); });
  }
  out.lines.push_back(ranges.line());
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

SuiteResult run_suite(std::string_view name, unsigned jobs) {
  SuiteResult out{std::string(name), {}};
  if (name == "published-table") {
    suite_published_table(out, jobs);
  } else if (name == "factor-properties") {
    suite_factor_properties(out, jobs);
  } else if (name == "counting-identities") {
    suite_counting_identities(out, jobs);
  } else if (name == "fibonacci") {
    suite_fibonacci(out, jobs);
  } else if (name == "families") {
    suite_families(out, jobs);
  } else if (name == "pell") {
    suite_pell(out);
  } else if (name == "twist") {
    suite_twist(out);
  } else if (name == "numerical-walls") {
    suite_numerical_walls(out, jobs);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  return out;
}

}  // namespace k3
