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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kcm/partition.hpp"
#include "kcm/rational_matrix.hpp"
#include "kcm/rational_poly.hpp"

namespace kcm {

class DuplicateEigenvalue : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroScalar : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInAnyCell : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Data of a regular Calogero-Moser point: distinct eigenvalues y of Y and
/// the diagonal entries alpha of X.
class CMPointRegular {
 public:
  /// Throws DimensionMismatch if the lengths differ, DuplicateEigenvalue if
  /// two y coincide.
  CMPointRegular(std::vector<Rational> y, std::vector<Rational> alpha);

  std::size_t size() const noexcept { return y_.size(); }
  const std::vector<Rational>& y() const noexcept { return y_; }
  const std::vector<Rational>& alpha() const noexcept { return alpha_; }

  /// Points of a followed by points of b. Throws DuplicateEigenvalue if the
  /// supports meet.
  static CMPointRegular concatenate(const CMPointRegular& a, const CMPointRegular& b);

 private:
  std::vector<Rational> y_;
  std::vector<Rational> alpha_;
};

struct MatrixPair {
  RationalMatrix X;
  RationalMatrix Y;
  friend bool operator==(const MatrixPair&, const MatrixPair&) = default;
};

/// Y = diag(y), x_ii = alpha_i, x_ij = 1 / (y_j - y_i), so that
/// XY - YX + Id is the all-ones matrix. With the opposite sign off the
/// diagonal one gets 2 Id - J instead, which has full rank once n >= 3.
MatrixPair wilson_representative(const CMPointRegular& p);

struct CMVerification {
  RationalMatrix commutator_plus_identity;  ///< XY - YX + Id
  std::size_t rank = 0;
  bool is_rank_one = false;
  /// When rank one: M == column * row^T exactly.
  std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> witness;
};

/// Throws DimensionMismatch unless X and Y are square of the same size.
CMVerification verify_cm(const RationalMatrix& X, const RationalMatrix& Y);

/// (X / c, c Y). Throws ZeroScalar for c == 0.
MatrixPair cstar_act(const Rational& c, const RationalMatrix& X, const RationalMatrix& Y);

/// (Y^t, X^t).
MatrixPair involution(const RationalMatrix& X, const RationalMatrix& Y);

/// Characteristic polynomials of X and Y: the two points of the n-th
/// symmetric power, as monic polynomials.
std::pair<RationalPoly, RationalPoly> projections(const RationalMatrix& X, const RationalMatrix& Y);

/// (I, W) with I = prod (z - y_i) and W an n-dimensional subspace of
/// Q[z]/I^2, coordinates in the monomial basis 1, z, ..., z^{2n-1}.
struct EmbeddedPoint {
  RationalPoly ideal;
  RationalMatrix subspace;  ///< 2n x n, one basis polynomial per column
  std::vector<RationalPoly> basis() const;
};

/// w_i is the CRT lift of (1 - alpha_i (z - y_i)) mod (z - y_i)^2 and 0 mod
/// (z - y_j)^2 for j != i, found by solving the 2n x 2n Hermite
/// interpolation system; W = span(w_1, ..., w_n).
EmbeddedPoint wilson_embed(const CMPointRegular& p);

/// Image of W in Q[z]/(z - point)^2 in the basis {1, z - point}, as the
/// normalized spanning vector: (1, t) when possible, else (0, 1). Returns
/// nullopt if the image is not a line.
std::optional<std::array<Rational, 2>> component_line(const EmbeddedPoint& e, const Rational& point);

/// W reduced modulo factor^2, where factor divides the ideal; the result is
/// a basis matrix (2 deg(factor) rows) of the image in Q[z]/factor^2.
RationalMatrix restrict_to_factor(const EmbeddedPoint& e, const RationalPoly& factor);

/// Basis z^a, a in fixed_point_exponents(lambda), of W_lambda in
/// Q[z]/(z^{2n}).
RationalMatrix fixed_point_subspace(const Partition& lambda);

/// A point of the Schubert cell of lambda in Q[z]/(z^{2n}): basis vectors
/// z^{a_i} + sum c_{i,b} z^b over the non-pivot b > a_i, with random small
/// rational coordinates c (the cell's affine chart around W_lambda).
RationalMatrix random_schubert_cell_point(const Partition& lambda, std::mt19937_64& rng);

/// Schubert cell of an n-dimensional W in Q[z]/(z^{2n}) relative to the flag
/// F_j = span{z^{2n-j}, ..., z^{2n-1}}. The pivot exponents a_1 > ... > a_n
/// are the positions where dim(W cap F_j) jumps; l_i = 2n - i - a_i. The
/// result is the partition with parts l (zeros dropped); its size is the
/// cell dimension, which equals n exactly on the cells making up Sch_n.
/// Throws DimensionMismatch unless the matrix is 2n x n with rank n, and
/// NotInAnyCell if the jump count is not n.
Partition schubert_profile(const RationalMatrix& W);

/// Reproducible random regular point: y distinct small rationals, alpha
/// arbitrary small rationals.
CMPointRegular random_regular_point(std::size_t n, std::mt19937_64& rng);

}  // namespace kcm
