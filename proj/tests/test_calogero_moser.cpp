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

#include <doctest.h>

#include <random>

#include "kcm/calogero_moser.hpp"
#include "kcm/characters.hpp"

using kcm::CMPointRegular;
using kcm::Partition;
using kcm::Rational;
using kcm::RationalMatrix;
using kcm::RationalPoly;

namespace {

RationalMatrix all_ones(std::size_t n) {
  RationalMatrix J(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) J(r, c) = 1;
  return J;
}

// Columns z^e for the given exponents inside Q[z]/(z^{2n}).
RationalMatrix monomial_span(std::size_t n, const std::vector<int>& exps) {
  RationalMatrix W(2 * n, exps.size());
  for (std::size_t j = 0; j < exps.size(); ++j) W(static_cast<std::size_t>(exps[j]), j) = 1;
  return W;
}

}  // namespace

TEST_SUITE("cm") {
  TEST_CASE("regular point validation") {
    CHECK_THROWS_AS(CMPointRegular({0, 1}, {0}), kcm::DimensionMismatch);
    CHECK_THROWS_AS(CMPointRegular({1, 1}, {0, 0}), kcm::DuplicateEigenvalue);
    CHECK_THROWS_AS(CMPointRegular::concatenate(CMPointRegular({0}, {0}), CMPointRegular({0}, {1})),
                    kcm::DuplicateEigenvalue);
    const auto c = CMPointRegular::concatenate(CMPointRegular({0}, {5}), CMPointRegular({1}, {6}));
    CHECK(c.y() == std::vector<Rational>{0, 1});
    CHECK(c.alpha() == std::vector<Rational>{5, 6});
  }

  TEST_CASE("two-point Wilson representative by hand") {
    const auto [X, Y] = kcm::wilson_representative(CMPointRegular({0, 1}, {2, 3}));
    CHECK(X == (RationalMatrix{{2, 1}, {-1, 3}}));
    CHECK(Y == RationalMatrix::diagonal({0, 1}));
    const auto v = kcm::verify_cm(X, Y);
    CHECK(v.commutator_plus_identity == all_ones(2));
    CHECK(v.rank == 1);
    CHECK(v.is_rank_one);
    REQUIRE(v.witness);
    const auto outer = RationalMatrix::from_columns({v.witness->first}) *
                       RationalMatrix::from_columns({v.witness->second}).transpose();
    CHECK(outer == v.commutator_plus_identity);

    const auto [cx, cy] = kcm::projections(X, Y);
    CHECK(cy == RationalPoly::from_roots({0, 1}));
    CHECK(cx == RationalPoly({7, -5, 1}));  // z^2 - 5z + (6 + 1)

    const auto [rot, diag] = kcm::projections(RationalMatrix{{0, -1}, {1, 0}}, RationalMatrix::diagonal({0, 1}));
    CHECK(rot.to_string() == "z^2 + 1");
    CHECK(diag.to_string() == "z^2 - z");
  }

  TEST_CASE("commutator plus identity is the all-ones matrix on random points") {
    std::mt19937_64 rng(31);
    for (int s = 0; s < 60; ++s) {
      const std::size_t n = 1 + static_cast<std::size_t>(s % 8);
      const auto p = kcm::random_regular_point(n, rng);
      const auto [X, Y] = kcm::wilson_representative(p);
      CHECK(kcm::verify_cm(X, Y).commutator_plus_identity == all_ones(n));
      const auto scaled = kcm::cstar_act(Rational(-3, 2), X, Y);
      CHECK(scaled.X == Rational(-2, 3) * X);
      CHECK(kcm::verify_cm(scaled.X, scaled.Y).is_rank_one);
      const auto flipped = kcm::involution(X, Y);
      CHECK(kcm::involution(flipped.X, flipped.Y) == kcm::MatrixPair{X, Y});
      // [Y^t, X^t] = [X, Y]^t, and J is symmetric.
      CHECK(kcm::verify_cm(flipped.X, flipped.Y).commutator_plus_identity == all_ones(n));
      const auto [cx, cy] = kcm::projections(X, Y);
      CHECK(cy == RationalPoly::from_roots(p.y()));
      Rational sum = 0;
      for (const auto& a : p.alpha()) sum += a;
      CHECK(cx.coefficient(n - 1) == -sum);
    }
  }

  TEST_CASE("off-diagonal sign of the representative") {
    // x_ij = 1/(y_i - y_j) passes at n = 2 but M = 2 Id - J is invertible at n = 3.
    const auto [X2, Y2] = kcm::wilson_representative(CMPointRegular({0, 1}, {0, 0}));
    CHECK(kcm::verify_cm(X2.transpose(), Y2).commutator_plus_identity == (RationalMatrix{{1, -1}, {-1, 1}}));
    CHECK(kcm::verify_cm(X2.transpose(), Y2).is_rank_one);
    const auto [X3, Y3] = kcm::wilson_representative(CMPointRegular({0, 1, 2}, {0, 0, 0}));
    CHECK(X3(0, 2) == Rational(1, 2));
    const auto flipped_sign = kcm::verify_cm(X3.transpose(), Y3);
    CHECK(flipped_sign.rank == 3);
    CHECK(flipped_sign.commutator_plus_identity.determinant() == -4);
    CHECK(kcm::verify_cm(X3, Y3).is_rank_one);
  }

  TEST_CASE("points off the space are reported") {
    const auto ex = kcm::verify_cm(RationalMatrix{{0, -1}, {1, 0}}, RationalMatrix::diagonal({0, 1}));
    CHECK(ex.is_rank_one);
    CHECK(ex.commutator_plus_identity == (RationalMatrix{{1, -1}, {-1, 1}}));
    const auto one = kcm::verify_cm(RationalMatrix(1, 1), RationalMatrix(1, 1));
    CHECK(one.is_rank_one);

    const auto v = kcm::verify_cm(RationalMatrix(2, 2), RationalMatrix(2, 2));
    CHECK(v.rank == 2);
    CHECK_FALSE(v.is_rank_one);
    CHECK_FALSE(v.witness);
    CHECK_THROWS_AS(kcm::verify_cm(RationalMatrix(2, 2), RationalMatrix(3, 3)), kcm::DimensionMismatch);
    CHECK_THROWS_AS(kcm::verify_cm(RationalMatrix(2, 3), RationalMatrix(2, 3)), kcm::DimensionMismatch);
    CHECK_THROWS_AS(kcm::cstar_act(0, RationalMatrix(1, 1), RationalMatrix(1, 1)), kcm::ZeroScalar);
  }

  TEST_CASE("Wilson embedding by hand") {
    const auto one = kcm::wilson_embed(CMPointRegular({0}, {5}));
    CHECK(one.ideal == RationalPoly({0, 1}));
    CHECK(one.basis() == std::vector<RationalPoly>{RationalPoly({1, -5})});

    const auto e = kcm::wilson_embed(CMPointRegular({0, 1}, {0, 0}));
    CHECK(e.ideal == RationalPoly::from_roots({0, 1}));
    const auto basis = e.basis();
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == RationalPoly({1, 0, -3, 2}));
    CHECK(basis[1] == RationalPoly({0, 0, 3, -2}));
    const auto line = kcm::component_line(e, 0);
    REQUIRE(line);
    CHECK((*line)[0] == 1);
    CHECK((*line)[1] == 0);
  }

  TEST_CASE("Wilson embedding interpolates values and derivatives") {
    std::mt19937_64 rng(32);
    for (int s = 0; s < 25; ++s) {
      const std::size_t n = 1 + static_cast<std::size_t>(s % 5);
      const auto p = kcm::random_regular_point(n, rng);
      const auto e = kcm::wilson_embed(p);
      CHECK(e.subspace.rows() == 2 * n);
      CHECK(e.subspace.rank() == n);
      const auto basis = e.basis();
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(basis[i].degree() < static_cast<int>(2 * n));
        const auto d = basis[i].derivative();
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(basis[i].evaluate(p.y()[j]) == (i == j ? 1 : 0));
          CHECK(d.evaluate(p.y()[j]) == (i == j ? -p.alpha()[i] : Rational(0)));
        }
        const auto line = kcm::component_line(e, p.y()[i]);
        REQUIRE(line);
        CHECK((*line)[0] == 1);
        CHECK((*line)[1] == -p.alpha()[i]);
      }
    }
  }

  TEST_CASE("restriction to one factor") {
    const auto a = CMPointRegular({0}, {2});
    const auto b = CMPointRegular({3, 5}, {-1, Rational(1, 2)});
    const auto whole = kcm::wilson_embed(CMPointRegular::concatenate(a, b));
    const auto ea = kcm::wilson_embed(a), eb = kcm::wilson_embed(b);
    CHECK(whole.ideal == ea.ideal * eb.ideal);
    CHECK(kcm::restrict_to_factor(whole, ea.ideal) == ea.subspace.column_space());
    CHECK(kcm::restrict_to_factor(whole, eb.ideal) == eb.subspace.column_space());
  }

  TEST_CASE("Schubert profiles") {
    // A two-dimensional W spanned by z^2, z^3 in Q[z]/(z^4) lies in the zero-dimensional cell.
    CHECK(kcm::schubert_profile(monomial_span(2, {3, 2})) == Partition{});
    CHECK(kcm::schubert_profile(monomial_span(3, {5, 3, 1})) == Partition({2, 1}));
    CHECK(kcm::fixed_point_subspace(Partition({2, 1})) == monomial_span(3, {5, 3, 1}));

    std::mt19937_64 rng(33);
    for (int n = 1; n <= 6; ++n)
      for (const auto& lambda : kcm::enumerate_partitions(n)) {
        CHECK(kcm::schubert_profile(kcm::fixed_point_subspace(lambda)) == lambda);
        const auto W = kcm::random_schubert_cell_point(lambda, rng);
        CHECK(W.rank() == static_cast<std::size_t>(n));
        CHECK(kcm::schubert_profile(W) == lambda);
        // n pivots plus |lambda| = n free coordinates.
        std::size_t nonzero = 0;
        for (std::size_t r = 0; r < W.rows(); ++r)
          for (std::size_t c = 0; c < W.cols(); ++c) nonzero += W(r, c) != 0;
        CHECK(nonzero <= static_cast<std::size_t>(2 * n));
      }

    CHECK_THROWS_AS(kcm::schubert_profile(RationalMatrix(4, 3)), kcm::DimensionMismatch);
    CHECK_THROWS_AS(kcm::schubert_profile(monomial_span(2, {3, 3})), kcm::DimensionMismatch);
  }
}
