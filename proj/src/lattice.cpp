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

#include <cctype>
#include <sstream>

namespace k3 {

NSLattice::NSLattice(std::vector<std::vector<Integer>> gram, std::vector<std::string> labels,
                     std::map<std::string, std::size_t> aliases)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0 || gram_.size() != n) {
    throw std::invalid_argument("gram matrix size does not match the basis labels");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw std::invalid_argument("gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("gram matrix is not symmetric");
    }
  }
  for (auto& [name, index] : aliases) {
    if (index >= n) throw std::invalid_argument("alias '" + name + "' points outside the basis");
    aliases_.emplace(name, index);
  }
}

std::shared_ptr<const NSLattice> NSLattice::elliptic() {
  static const auto lattice = std::make_shared<const NSLattice>(
      std::vector<std::vector<Integer>>{{-2, 1}, {1, 0}}, std::vector<std::string>{"s", "e"},
      std::map<std::string, std::size_t>{{"sigma", 0}});
  return lattice;
}

std::shared_ptr<const NSLattice> NSLattice::pell() {
  static const auto lattice = std::make_shared<const NSLattice>(
      std::vector<std::vector<Integer>>{{12, 0, 0}, {0, -6, 0}, {0, 0, -30}},
      std::vector<std::string>{"h", "e", "f"});
  return lattice;
}

std::size_t NSLattice::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  if (auto it = aliases_.find(label); it != aliases_.end()) return it->second;
  return rank();
}

DivisorClass::DivisorClass(LatticePtr lattice, std::vector<Integer> coeffs)
    : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
  if (!lattice_) throw std::invalid_argument("divisor class without a lattice");
  if (coeffs_.size() != lattice_->rank()) {
    throw std::invalid_argument("coefficient count does not match the lattice rank");
  }
}

DivisorClass DivisorClass::zero(LatticePtr lattice) {
  const std::size_t n = lattice->rank();
  return DivisorClass(std::move(lattice), std::vector<Integer>(n, Integer(0)));
}

bool DivisorClass::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool DivisorClass::same_lattice(const DivisorClass& other) const {
  return lattice_ == other.lattice_ || *lattice_ == *other.lattice_;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (!same_lattice(other)) throw LatticeMismatch();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (!same_lattice(other)) throw LatticeMismatch();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

DivisorClass operator*(const Integer& k, const DivisorClass& d) {
  DivisorClass out = d;
  for (auto& c : out.coeffs_) c *= k;
  return out;
}

std::string DivisorClass::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    Integer a = abs(c);
    if (a != 1) os << a.get_str();
    os << lattice_->labels()[i];
    first = false;
  }
  return first ? std::string("0") : os.str();
}

Integer intersect(const DivisorClass& a, const DivisorClass& b) {
  if (!a.same_lattice(b)) throw LatticeMismatch();
  const NSLattice& lat = a.lattice();
  Integer total = 0;
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < lat.rank(); ++j) {
      if (lat.gram(i, j) != 0 && b[j] != 0) total += a[i] * lat.gram(i, j) * b[j];
    }
  }
  return total;
}

DivisorClass primitive_normalize(const DivisorClass& d) {
  Integer g = 0;
  for (const auto& c : d.coeffs()) g = gcd(g, c);
  if (g == 0) throw std::invalid_argument("cannot normalize the zero class");
  std::vector<Integer> coeffs = d.coeffs();
  for (auto& c : coeffs) c /= g;
  for (const auto& c : coeffs) {
    if (c == 0) continue;
    if (c < 0) {
      for (auto& x : coeffs) x = -x;
    }
    break;
  }
  return DivisorClass(d.lattice_ptr(), std::move(coeffs));
}

DivisorClass elliptic_class(const Integer& sigma_coeff, const Integer& e_coeff) {
  return DivisorClass(NSLattice::elliptic(), {sigma_coeff, e_coeff});
}

bool is_elliptic(const NSLattice& lattice) { return lattice == *NSLattice::elliptic(); }

namespace {

void require_elliptic(const DivisorClass& d) {
  if (!is_elliptic(d.lattice())) {
    throw std::invalid_argument("operation is defined on the elliptic lattice only");
  }
}

}  // namespace

bool perp_meets_ample(const DivisorClass& d) {
  require_elliptic(d);
  if (d.is_zero()) throw std::invalid_argument("perp of the zero class is the whole space");
  const Integer along_fiber = intersect(d, elliptic_class(0, 1));
  const Integer along_other = intersect(d, elliptic_class(1, 2));
  return sgn(along_fiber) * sgn(along_other) < 0;
}

bool is_ample_elliptic(const DivisorClass& h) {
  require_elliptic(h);
  // a*sigma + b*e = (b - 2a)*e + a*(2e + sigma), interior iff both weights > 0.
  return h[0] > 0 && h[1] > 2 * h[0];
}

namespace {

class DivisorParser {
 public:
  DivisorParser(const LatticePtr& lattice, std::string_view text)
      : lattice_(lattice), text_(text) {}

  DivisorClass parse() {
    std::vector<Integer> coeffs(lattice_->rank(), Integer(0));
    skip_space();
    if (pos_ == text_.size()) fail("empty divisor expression");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;

      Integer coeff = 1;
      bool has_number = false;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ > start) {
        coeff = Integer(std::string(text_.substr(start, pos_ - start)), 10);
        has_number = true;
        skip_space();
        if (peek() == '*') {
          ++pos_;
          skip_space();
        }
      }

      start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) {
        if (!has_number || coeff != 0) fail("expected a basis label");
        skip_space();
        continue;  // a bare "0" term
      }
      std::string_view label = text_.substr(start, pos_ - start);
      std::size_t index = lattice_->index_of(label);
      if (index == lattice_->rank()) fail("unknown basis label '" + std::string(label) + "'");
      coeffs[index] += sign * coeff;
      skip_space();
    }
    return DivisorClass(lattice_, std::move(coeffs));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("malformed divisor '" + std::string(text_) + "': " + what);
  }

  const LatticePtr& lattice_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DivisorClass parse_divisor(const LatticePtr& lattice, std::string_view text) {
  return DivisorParser(lattice, text).parse();
}

}  // namespace k3
