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

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kcm {

/// Integer Laurent polynomial in q, stored sparsely as exponent -> nonzero
/// coefficient.
class LaurentPoly {
 public:
  using Terms = std::map<int, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor): 1 and 0 read naturally
  explicit LaurentPoly(Terms terms);

  /// coefficient * q^exponent
  static LaurentPoly monomial(int exponent, const mpz_class& coefficient = 1);
  /// 1 - q^k
  static LaurentPoly one_minus_q_pow(int k);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpz_class coefficient(int exponent) const;
  /// Smallest / largest exponent with a nonzero coefficient. Zero has neither;
  /// both throw std::domain_error on zero.
  int min_exponent() const;
  int max_exponent() const;

  bool is_palindromic() const;
  bool has_nonnegative_coefficients() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  /// Multiplies by q^shift.
  LaurentPoly shifted(int shift) const;
  /// Drops every term with exponent > max_exponent.
  LaurentPoly truncated(int max_exponent) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Terms in increasing exponent order, e.g. "q^-1 + 2 + q"; zero is "0".
  std::string to_string() const;

 private:
  void prune();
  Terms terms_;
};

/// Raised when a division that must be exact leaves a remainder. Reaching it
/// from the Kostka routines means an identity failed.
class NonExactDivision : public std::runtime_error {
 public:
  NonExactDivision(LaurentPoly dividend, LaurentPoly divisor, LaurentPoly remainder);
  const LaurentPoly& dividend() const noexcept { return dividend_; }
  const LaurentPoly& divisor() const noexcept { return divisor_; }
  const LaurentPoly& remainder() const noexcept { return remainder_; }

 private:
  LaurentPoly dividend_;
  LaurentPoly divisor_;
  LaurentPoly remainder_;
};

/// prod_{i=1}^{n} (1 - q^i); 1 for n == 0.
LaurentPoly qfactorial_product(int n);

/// c with a == b * c. Both operands are shifted to have constant term
/// nonzero, divided in Z[q] by long division from the top, and the exponent
/// offset restored. Throws NonExactDivision if no such c exists in Z[q, 1/q],
/// std::domain_error if b is zero.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// q -> 1/q.
LaurentPoly substitute_inverse(const LaurentPoly& a);

mpz_class evaluate_at_one(const LaurentPoly& a);

/// Gaussian binomial [n choose k]_q by the q-Pascal recurrence.
LaurentPoly q_binomial(int n, int k);

/// Gaussian multinomial [n; k_1, ..., k_r]_q as a product of q-binomials.
LaurentPoly q_multinomial(int n, const std::vector<int>& parts);

}  // namespace kcm
