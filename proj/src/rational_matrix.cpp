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

#include "kcm/rational_matrix.hpp"

#include <utility>

namespace kcm {

Rational parse_rational(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size() && text[begin] == ' ') ++begin;
  std::size_t end = text.size();
  while (end > begin && text[end - 1] == ' ') --end;
  std::string_view body = text.substr(begin, end - begin);
  if (body.empty()) throw ParseError("empty rational", begin);

  auto check_integer = [&](std::string_view digits, std::size_t at) {
    std::size_t i = 0;
    if (i < digits.size() && (digits[i] == '-' || digits[i] == '+')) ++i;
    if (i == digits.size()) throw ParseError("malformed rational '" + std::string(body) + "'", at);
    for (; i < digits.size(); ++i)
      if (digits[i] < '0' || digits[i] > '9')
        throw ParseError("malformed rational '" + std::string(body) + "'", at + i);
  };

  std::size_t slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  check_integer(num, begin);
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) return Rational(mpz_class(num_str));

  std::string_view den = body.substr(slash + 1);
  check_integer(den, begin + slash + 1);
  if (den.front() == '-' || den.front() == '+')
    throw ParseError("denominator must be an unsigned integer", begin + slash + 1);
  mpz_class d(std::string{den});
  if (d == 0) throw ParseError("zero denominator", begin + slash + 1);
  Rational r(mpz_class(num_str), d);
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    try {
      out.push_back(parse_rational(token));
    } catch (const ParseError& e) {
      // Re-anchor the position to the full list.
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" (at position"));
      throw ParseError(msg, pos + e.position());
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& r) { return r.get_str(); }

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
  RationalMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<std::vector<Rational>>& columns) {
  if (columns.empty()) return {};
  RationalMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows_) throw DimensionMismatch("columns of unequal length");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational RationalMatrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum of unequal shapes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix difference of unequal shapes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product of incompatible shapes");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& other) const {
  if (rows_ != other.rows_) throw DimensionMismatch("hstack of matrices with different row counts");
  RationalMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

namespace {

struct IntegerForm {
  std::vector<std::vector<mpz_class>> rows;
  mpz_class scale = 1;  // product of the per-row denominator lcms
};

IntegerForm clear_denominators(const RationalMatrix& m) {
  IntegerForm f;
  f.rows.resize(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) f.rows[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    f.scale *= l;
  }
  return f;
}

struct BareissResult {
  std::size_t rank = 0;
  mpz_class last_pivot = 1;
  int sign = 1;
};

// Fraction-free elimination in place; every division below is exact.
BareissResult bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t cols) {
  BareissResult res;
  const std::size_t rows = a.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      res.sign = -res.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace

std::size_t RationalMatrix::rank() const {
  auto f = clear_denominators(*this);
  return bareiss(f.rows, cols_).rank;
}

Rational RationalMatrix::determinant() const {
  if (!is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  if (rows_ == 0) return 1;
  auto f = clear_denominators(*this);
  auto res = bareiss(f.rows, cols_);
  if (res.rank < rows_) return 0;
  Rational det(res.last_pivot * res.sign, f.scale);
  det.canonicalize();
  return det;
}

RationalMatrix RationalMatrix::rref() const {
  RationalMatrix m = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && sgn(m(p, c)) == 0) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols_; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return m;
}

RationalMatrix RationalMatrix::column_space() const {
  const RationalMatrix e = transpose().rref();
  std::vector<std::vector<Rational>> basis;
  for (std::size_t r = 0; r < e.rows(); ++r) {
    auto v = e.row(r);
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || sgn(x) != 0;
    if (nonzero) basis.push_back(std::move(v));
  }
  if (basis.empty()) return RationalMatrix(rows_, 0);
  return from_columns(basis);
}

RationalMatrix RationalMatrix::kernel() const {
  const RationalMatrix e = rref();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(e(r, c)) != 0) {
        pivot_col.push_back(c);
        is_pivot[c] = true;
        break;
      }
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -e(r, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return RationalMatrix(cols_, 0);
  return from_columns(basis);
}

std::vector<Rational> RationalMatrix::solve(const std::vector<Rational>& b) const {
  if (!is_square() || b.size() != rows_) throw DimensionMismatch("solve needs a square system");
  RationalMatrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = b[r];
  }
  const RationalMatrix e = aug.rref();
  for (std::size_t i = 0; i < rows_; ++i)
    if (e(i, i) != 1) throw std::domain_error("solve: singular system");
  return e.column(cols_);
}

}  // namespace kcm
