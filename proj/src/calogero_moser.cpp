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

#include "kcm/calogero_moser.hpp"

#include <algorithm>
#include <set>

#include "kcm/characters.hpp"

namespace kcm {

namespace {

void require_distinct(const std::vector<Rational>& y) {
  std::set<Rational> seen;
  for (const auto& v : y)
    if (!seen.insert(v).second) throw DuplicateEigenvalue("eigenvalue " + to_string(v) + " occurs twice");
}

void require_square_pair(const RationalMatrix& X, const RationalMatrix& Y) {
  if (!X.is_square() || !Y.is_square() || X.rows() != Y.rows())
    throw DimensionMismatch("expected two square matrices of the same size");
}

}  // namespace

CMPointRegular::CMPointRegular(std::vector<Rational> y, std::vector<Rational> alpha)
    : y_(std::move(y)), alpha_(std::move(alpha)) {
  if (y_.size() != alpha_.size())
    throw DimensionMismatch("y has " + std::to_string(y_.size()) + " entries but alpha has " +
                            std::to_string(alpha_.size()));
  require_distinct(y_);
}

CMPointRegular CMPointRegular::concatenate(const CMPointRegular& a, const CMPointRegular& b) {
  std::vector<Rational> y = a.y_, alpha = a.alpha_;
  y.insert(y.end(), b.y_.begin(), b.y_.end());
  alpha.insert(alpha.end(), b.alpha_.begin(), b.alpha_.end());
  return CMPointRegular(std::move(y), std::move(alpha));
}

MatrixPair wilson_representative(const CMPointRegular& p) {
  const std::size_t n = p.size();
  RationalMatrix X(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) X(i, j) = i == j ? p.alpha()[i] : Rational(1 / (p.y()[j] - p.y()[i]));
  return {std::move(X), RationalMatrix::diagonal(p.y())};
}

CMVerification verify_cm(const RationalMatrix& X, const RationalMatrix& Y) {
  require_square_pair(X, Y);
  CMVerification v;
  v.commutator_plus_identity = X * Y - Y * X + RationalMatrix::identity(X.rows());
  const RationalMatrix& M = v.commutator_plus_identity;
  v.rank = M.rank();
  v.is_rank_one = v.rank == 1;
  if (!v.is_rank_one) return v;

  // Any nonzero entry (i0, j0) gives M = M[:, j0] * (M[i0, :] / M[i0, j0]).
  std::size_t i0 = 0, j0 = 0;
  for (std::size_t i = 0; i < M.rows() && sgn(M(i0, j0)) == 0; ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (sgn(M(i, j)) != 0) {
        i0 = i;
        j0 = j;
        break;
      }
  auto column = M.column(j0);
  auto row = M.row(i0);
  const Rational pivot = M(i0, j0);
  for (auto& x : row) x /= pivot;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (column[i] * row[j] != M(i, j)) {
        v.is_rank_one = false;
        return v;
      }
  v.witness.emplace(std::move(column), std::move(row));
  return v;
}

MatrixPair cstar_act(const Rational& c, const RationalMatrix& X, const RationalMatrix& Y) {
  if (sgn(c) == 0) throw ZeroScalar("the C*-action needs a nonzero scalar");
  return {X * Rational(1 / c), Y * c};
}

MatrixPair involution(const RationalMatrix& X, const RationalMatrix& Y) {
  require_square_pair(X, Y);
  return {Y.transpose(), X.transpose()};
}

std::pair<RationalPoly, RationalPoly> projections(const RationalMatrix& X, const RationalMatrix& Y) {
  return {characteristic_polynomial(X), characteristic_polynomial(Y)};
}

std::vector<RationalPoly> EmbeddedPoint::basis() const {
  std::vector<RationalPoly> out;
  for (std::size_t c = 0; c < subspace.cols(); ++c) out.emplace_back(subspace.column(c));
  return out;
}

EmbeddedPoint wilson_embed(const CMPointRegular& p) {
  const std::size_t n = p.size();
  const std::size_t dim = 2 * n;

  // Row 2j: value at y_j; row 2j+1: derivative at y_j, both of sum c_k z^k.
  RationalMatrix hermite(dim, dim);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& y = p.y()[j];
    Rational power = 1;  // y^k
    for (std::size_t k = 0; k < dim; ++k) {
      hermite(2 * j, k) = power;
      if (k + 1 < dim) hermite(2 * j + 1, k + 1) = power * static_cast<long>(k + 1);
      power *= y;
    }
  }

  std::vector<std::vector<Rational>> columns;
  columns.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // 1 - alpha_i (z - y_i) has value 1 and derivative -alpha_i at y_i.
    std::vector<Rational> rhs(dim, Rational(0));
    rhs[2 * i] = 1;
    rhs[2 * i + 1] = -p.alpha()[i];
    columns.push_back(hermite.solve(rhs));
  }
  return {RationalPoly::from_roots(p.y()), RationalMatrix::from_columns(columns)};
}

std::optional<std::array<Rational, 2>> component_line(const EmbeddedPoint& e, const Rational& point) {
  RationalMatrix image(2, e.subspace.cols());
  const auto basis = e.basis();
  for (std::size_t c = 0; c < basis.size(); ++c) {
    image(0, c) = basis[c].evaluate(point);
    image(1, c) = basis[c].derivative().evaluate(point);
  }
  if (image.rank() != 1) return std::nullopt;
  for (std::size_t c = 0; c < image.cols(); ++c) {
    if (sgn(image(0, c)) != 0) return std::array<Rational, 2>{Rational(1), Rational(image(1, c) / image(0, c))};
    if (sgn(image(1, c)) != 0) return std::array<Rational, 2>{Rational(0), Rational(1)};
  }
  return std::nullopt;
}

RationalMatrix restrict_to_factor(const EmbeddedPoint& e, const RationalPoly& factor) {
  if (factor.degree() < 1 || !e.ideal.mod(factor).is_zero())
    throw std::invalid_argument("restrict_to_factor: " + factor.to_string() + " does not divide the ideal");
  const RationalPoly square = factor.pow(2);
  const std::size_t len = static_cast<std::size_t>(square.degree());
  std::vector<std::vector<Rational>> columns;
  for (const auto& w : e.basis()) columns.push_back(w.mod(square).padded(len));
  return RationalMatrix::from_columns(columns).column_space();
}

RationalMatrix fixed_point_subspace(const Partition& lambda) {
  const std::size_t n = static_cast<std::size_t>(lambda.size());
  const auto exps = fixed_point_exponents(lambda);
  RationalMatrix W(2 * n, n);
  for (std::size_t c = 0; c < n; ++c) W(static_cast<std::size_t>(exps[c]), c) = 1;
  return W;
}

RationalMatrix random_schubert_cell_point(const Partition& lambda, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  const std::size_t n = static_cast<std::size_t>(lambda.size());
  const auto exps = fixed_point_exponents(lambda);
  const std::set<int> pivots(exps.begin(), exps.end());
  RationalMatrix W = fixed_point_subspace(lambda);
  for (std::size_t c = 0; c < n; ++c)
    for (int b = exps[c] + 1; b < static_cast<int>(2 * n); ++b) {
      if (pivots.contains(b)) continue;
      const int p = num(rng);
      Rational coord(p, den(rng));
      coord.canonicalize();
      W(static_cast<std::size_t>(b), c) = coord;
    }
  return W;
}

Partition schubert_profile(const RationalMatrix& W) {
  const std::size_t n = W.cols();
  if (W.rows() != 2 * n) throw DimensionMismatch("schubert_profile expects a 2n x n basis matrix");
  if (W.rank() != n) throw DimensionMismatch("schubert_profile: basis columns are linearly dependent");

  const std::size_t ambient = 2 * n;
  // dim(W cap F_j) = n + j - rank[W | F_j], F_j spanned by the top j monomials.
  std::vector<int> pivots;  // a_1 > a_2 > ...
  std::size_t previous = 0;
  for (std::size_t j = 1; j <= ambient; ++j) {
    RationalMatrix flag(ambient, j);
    for (std::size_t k = 0; k < j; ++k) flag(ambient - 1 - k, k) = 1;
    const std::size_t meet = n + j - W.hstack(flag).rank();
    if (meet == previous + 1) pivots.push_back(static_cast<int>(ambient - j));
    else if (meet != previous) throw NotInAnyCell("flag intersection dimension jumped by more than one");
    previous = meet;
  }
  if (pivots.size() != n) throw NotInAnyCell("found " + std::to_string(pivots.size()) + " flag jumps, expected " +
                                             std::to_string(n));

  std::vector<int> parts;
  for (std::size_t i = 1; i <= n; ++i) {
    const int l = static_cast<int>(ambient) - static_cast<int>(i) - pivots[i - 1];
    if (l > 0) parts.push_back(l);
  }
  // l_i is weakly increasing in i; the partition wants decreasing parts.
  std::reverse(parts.begin(), parts.end());
  return Partition(std::move(parts));
}

CMPointRegular random_regular_point(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> y_num(-40, 40), y_den(1, 6), a_num(-12, 12), a_den(1, 5);
  std::set<Rational> used;
  std::vector<Rational> y, alpha;
  while (y.size() < n) {
    const int num = y_num(rng);
    Rational v(num, y_den(rng));
    v.canonicalize();
    if (used.insert(v).second) y.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const int num = a_num(rng);
    Rational a(num, a_den(rng));
    a.canonicalize();
    alpha.push_back(a);
  }
  return CMPointRegular(std::move(y), std::move(alpha));
}

}  // namespace kcm
