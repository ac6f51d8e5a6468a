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

#include <algorithm>
#include <numeric>
#include <random>

#include "kcm/rational_matrix.hpp"
#include "kcm/rational_poly.hpp"

using kcm::Rational;
using kcm::RationalMatrix;
using kcm::RationalPoly;

namespace {

// Determinant by the Leibniz sum over permutations; only for n <= 6.
Rational leibniz_det(const RationalMatrix& A) {
  const std::size_t n = A.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= A(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int sparsity = 0) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4), zero(0, 9);
  RationalMatrix A(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (zero(rng) < sparsity) continue;
      const int p = num(rng);
      const int q = den(rng);
      A(r, c) = Rational(p, q);
      A(r, c).canonicalize();
    }
  return A;
}

// Rank as the size of the largest nonsingular square minor, by Leibniz.
std::size_t minor_rank(const RationalMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  for (std::size_t k = std::min(m, n); k > 0; --k) {
    std::vector<bool> rsel(m, false), csel(n, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        RationalMatrix M(k, k);
        std::size_t i = 0;
        for (std::size_t r = 0; r < m; ++r) {
          if (!rsel[r]) continue;
          std::size_t j = 0;
          for (std::size_t c = 0; c < n; ++c)
            if (csel[c]) M(i, j++) = A(r, c);
          ++i;
        }
        if (leibniz_det(M) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

}  // namespace

TEST_SUITE("rational_matrix") {
  TEST_CASE("rational parsing") {
    CHECK(kcm::parse_rational("3/4") == Rational(3, 4));
    CHECK(kcm::parse_rational("-6/8") == Rational(-3, 4));
    CHECK(kcm::parse_rational("+5") == 5);
    CHECK(kcm::parse_rational(" 0 ") == 0);
    CHECK(kcm::to_string(Rational(-3, 4)) == "-3/4");
    CHECK(kcm::to_string(Rational(2)) == "2");
    CHECK_THROWS_AS(kcm::parse_rational("1/0"), kcm::ParseError);
    CHECK_THROWS_AS(kcm::parse_rational("1/-2"), kcm::ParseError);
    CHECK_THROWS_AS(kcm::parse_rational("abc"), kcm::ParseError);
    CHECK_THROWS_AS(kcm::parse_rational(""), kcm::ParseError);
    const auto list = kcm::parse_rational_list("0,1/2,-3");
    REQUIRE(list.size() == 3);
    CHECK(list[1] == Rational(1, 2));
    try {
      (void)kcm::parse_rational_list("1,2,3/0");
      FAIL("expected a parse error");
    } catch (const kcm::ParseError& e) {
      CHECK(e.position() >= 5);
    }
  }

  TEST_CASE("construction and arithmetic") {
    const RationalMatrix A{{1, 2}, {3, 4}};
    const RationalMatrix B{{0, 1}, {1, 0}};
    CHECK(A * B == RationalMatrix{{2, 1}, {4, 3}});
    CHECK(A + B == RationalMatrix{{1, 3}, {4, 4}});
    CHECK(A - A == RationalMatrix(2, 2));
    CHECK(Rational(1, 2) * A == RationalMatrix{{Rational(1, 2), 1}, {Rational(3, 2), 2}});
    CHECK(A.transpose() == RationalMatrix{{1, 3}, {2, 4}});
    CHECK(A.trace() == 5);
    CHECK(A.hstack(B).cols() == 4);
    CHECK(RationalMatrix::identity(3).rank() == 3);
    CHECK(RationalMatrix::diagonal({1, 0, 2}).rank() == 2);
    CHECK(RationalMatrix::from_columns({{1, 2}, {3, 4}}) == RationalMatrix{{1, 3}, {2, 4}});
    CHECK_THROWS_AS((RationalMatrix{{1, 2}, {3}}), kcm::DimensionMismatch);
    CHECK_THROWS_AS(A * RationalMatrix(3, 1), kcm::DimensionMismatch);
    CHECK_THROWS_AS((void)RationalMatrix(2, 3).determinant(), kcm::DimensionMismatch);
  }

  TEST_CASE("determinant agrees with the Leibniz sum") {
    std::mt19937_64 rng(21);
    CHECK(RationalMatrix{{1, 2}, {3, 4}}.determinant() == -2);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
      const RationalMatrix A = random_matrix(n, n, rng, trial % 3 == 0 ? 6 : 0);
      CHECK(A.determinant() == leibniz_det(A));
    }
  }

  TEST_CASE("rank agrees with the largest nonsingular minor") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 120; ++trial) {
      const std::size_t m = 1 + static_cast<std::size_t>(trial % 4), n = 1 + static_cast<std::size_t>((trial / 4) % 4);
      RationalMatrix A = random_matrix(m, n, rng, 5 + trial % 4);
      if (trial % 5 == 0 && m > 1)  // force a dependent row
        for (std::size_t c = 0; c < n; ++c) A(m - 1, c) = 2 * A(0, c);
      CHECK(A.rank() == minor_rank(A));
      CHECK(A.transpose().rank() == A.rank());
    }
  }

  TEST_CASE("rref, kernel, column space and solve") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t m = 2 + static_cast<std::size_t>(trial % 3), n = 2 + static_cast<std::size_t>((trial / 3) % 4);
      const RationalMatrix A = random_matrix(m, n, rng, 4);
      const RationalMatrix K = A.kernel();
      CHECK(K.cols() == n - A.rank());
      if (K.cols() > 0) CHECK((A * K).is_zero());
      CHECK(A.rref().rank() == A.rank());
      CHECK(A.rref().rref() == A.rref());
      const RationalMatrix S = A.column_space();
      CHECK(S.cols() == A.rank());
      CHECK(A.hstack(S).rank() == A.rank());
      // Column space is canonical under column operations.
      RationalMatrix B = A;
      for (std::size_t r = 0; r < m; ++r) B(r, 0) += 3 * A(r, n - 1);
      CHECK(B.column_space() == S);
    }
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
      const RationalMatrix A = random_matrix(n, n, rng);
      std::vector<Rational> b(n);
      for (auto& x : b) x = Rational(static_cast<long>(rng() % 9) - 4);
      if (A.determinant() == 0) {
        CHECK_THROWS_AS((void)A.solve(b), std::domain_error);
        continue;
      }
      const auto x = A.solve(b);
      RationalMatrix xc = RationalMatrix::from_columns({x});
      CHECK(A * xc == RationalMatrix::from_columns({b}));
    }
  }

  TEST_CASE("polynomials") {
    const RationalPoly p = RationalPoly::from_roots({0, 1});
    CHECK(p.to_string() == "z^2 - z");
    CHECK(p.degree() == 2);
    CHECK(p.is_monic());
    CHECK(p.evaluate(3) == 6);
    CHECK(p.derivative() == RationalPoly({-1, 2}));
    CHECK(RationalPoly::linear(2).pow(2) == RationalPoly({4, -4, 1}));
    CHECK(RationalPoly().degree() == -1);
    const auto [q, r] = RationalPoly({1, 0, 0, 1}).divmod(RationalPoly({1, 1}));
    CHECK(q == RationalPoly({1, -1, 1}));
    CHECK(r.is_zero());
    CHECK(RationalPoly({3, 0, 1}).mod(RationalPoly({0, 1})) == RationalPoly::constant(3));
    CHECK(p.padded(4) == std::vector<Rational>{0, -1, 1, 0});
    CHECK_THROWS_AS((void)p.padded(2), std::invalid_argument);
    CHECK_THROWS_AS((void)p.divmod(RationalPoly()), std::domain_error);

    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> a(1 + rng() % 5), b(1 + rng() % 4);
      for (auto& c : a) {
        c = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
        c.canonicalize();
      }
      for (auto& c : b) {
        c = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
        c.canonicalize();
      }
      const RationalPoly A(a), B(b);
      if (B.is_zero()) continue;
      const auto [qq, rr] = A.divmod(B);
      CHECK(qq * B + rr == A);
      CHECK(rr.degree() < B.degree());
      Rational z(static_cast<long>(rng() % 7) - 3, 2);
      z.canonicalize();
      CHECK((A * B).evaluate(z) == A.evaluate(z) * B.evaluate(z));
    }
  }

  TEST_CASE("characteristic polynomial agrees with det(t Id - A)") {
    std::mt19937_64 rng(25);
    CHECK(kcm::characteristic_polynomial(RationalMatrix::diagonal({2, 3})) == RationalPoly::from_roots({2, 3}));
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
      const RationalMatrix A = random_matrix(n, n, rng);
      const RationalPoly chi = kcm::characteristic_polynomial(A);
      CHECK(chi.degree() == static_cast<int>(n));
      CHECK(chi.is_monic());
      CHECK(chi.coefficient(n - 1) == -A.trace());
      // n + 1 sample points determine a degree-n polynomial.
      for (int t = -2; t <= static_cast<int>(n) - 1; ++t) {
        const RationalMatrix tIA = Rational(t) * RationalMatrix::identity(n) - A;
        CHECK(chi.evaluate(t) == leibniz_det(tIA));
      }
    }
    CHECK_THROWS_AS(kcm::characteristic_polynomial(RationalMatrix(2, 3)), kcm::DimensionMismatch);
  }
}
