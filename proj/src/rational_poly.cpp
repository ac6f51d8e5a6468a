// Copyright 2026 The kostka-cm Authors
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

#include "kcm/rational_poly.hpp"

#include <sstream>

namespace kcm {

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::linear(const Rational& root) { return RationalPoly({-root, Rational(1)}); }

RationalPoly RationalPoly::from_roots(const std::vector<Rational>& roots) {
  RationalPoly out = constant(1);
  for (const auto& r : roots) out = out * linear(r);
  return out;
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPoly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

bool RationalPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Rational RationalPoly::evaluate(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::pow(unsigned k) const {
  RationalPoly out = constant(1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const Rational& s, const RationalPoly& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& c : out) c *= s;
  return RationalPoly(std::move(out));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {RationalPoly{}, *this};
  std::vector<Rational> quot(rem.size() - dd, Rational(0));
  const Rational& lead = divisor.coeffs_.back();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (sgn(rem[k]) == 0) continue;
    const Rational f = rem[k] / lead;
    quot[k - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= f * divisor.coeffs_[j];
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

std::vector<Rational> RationalPoly::padded(std::size_t length) const {
  if (coeffs_.size() > length) throw std::invalid_argument("polynomial degree exceeds the padded length");
  std::vector<Rational> out = coeffs_;
  out.resize(length, Rational(0));
  return out;
}

std::string RationalPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << (k == 0 || mag == 1 ? "" : "*") << 'z';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

RationalPoly characteristic_polynomial(const RationalMatrix& A) {
  if (!A.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = A.rows();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix M(n, n);
  const RationalMatrix I = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    M = A * M + c[n - k + 1] * I;
    c[n - k] = -(A * M).trace() / static_cast<long>(k);
  }
  return RationalPoly(std::move(c));
}

}  // namespace kcm
