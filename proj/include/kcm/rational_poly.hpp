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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kcm/rational_matrix.hpp"

namespace kcm {

/// Univariate polynomial over Q in z, coefficients low to high with no
/// trailing zeros (the zero polynomial has no coefficients).
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coefficients);

  static RationalPoly constant(const Rational& c);
  /// z - root
  static RationalPoly linear(const Rational& root);
  /// prod (z - r) over roots
  static RationalPoly from_roots(const std::vector<Rational>& roots);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t k) const;
  bool is_monic() const;

  Rational evaluate(const Rational& z) const;
  RationalPoly derivative() const;
  RationalPoly pow(unsigned k) const;

  RationalPoly& operator+=(const RationalPoly& other);
  RationalPoly& operator-=(const RationalPoly& other);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& s, const RationalPoly& a);

  /// (quotient, remainder); throws std::domain_error on division by zero.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& divisor) const;
  RationalPoly mod(const RationalPoly& divisor) const { return divmod(divisor).second; }

  /// Coefficient vector padded with zeros to `length` entries; throws
  /// std::invalid_argument if the degree does not fit.
  std::vector<Rational> padded(std::size_t length) const;

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// det(z Id - A) by the Faddeev-LeVerrier recurrence. Throws
/// DimensionMismatch unless A is square.
RationalPoly characteristic_polynomial(const RationalMatrix& A);

}  // namespace kcm
