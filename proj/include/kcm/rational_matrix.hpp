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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "kcm/errors.hpp"

namespace kcm {

/// Exact rationals; GMP keeps every value in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// Accepts "p/q", "p" and leading signs. Throws ParseError.
Rational parse_rational(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);
std::string to_string(const Rational& r);

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch on ragged input.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational>& entries);
  static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  std::vector<Rational> row(std::size_t r) const;

  RationalMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& scalar);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

  /// Columns of `other` appended on the right.
  RationalMatrix hstack(const RationalMatrix& other) const;

  /// Rank by Bareiss fraction-free elimination on the row-scaled integer
  /// matrix, with pivot search down the current column.
  std::size_t rank() const;

  /// Determinant by the same elimination. Throws DimensionMismatch if not square.
  Rational determinant() const;

  /// Reduced row echelon form over Q.
  RationalMatrix rref() const;

  /// Canonical basis of the column space: the transposed nonzero rows of
  /// rref(A^t). Two matrices span the same space iff these agree.
  RationalMatrix column_space() const;

  /// Basis of {v : A v = 0}, one column per basis vector.
  RationalMatrix kernel() const;

  /// Unique solution of A x = b for square invertible A; throws
  /// std::domain_error when A is singular.
  std::vector<Rational> solve(const std::vector<Rational>& b) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace kcm
