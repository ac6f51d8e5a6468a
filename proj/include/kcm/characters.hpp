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

#include <span>
#include <string>
#include <vector>

#include "kcm/laurent_poly.hpp"
#include "kcm/partition.hpp"

namespace kcm {

// Weight convention: C* acts on z^a with weight -a, so every character here
// is written in that grading.

/// K_lambda(q) = (1-q)...(1-q^n) / prod_u (1 - q^{h(u)}), normalized so the
/// constant term is 1. K of the empty partition is 1.
LaurentPoly kostka(const Partition& lambda);

/// (1-q)...(1-q^n) / prod_{chi,u} (1 - q^{h(u)}) over all components.
LaurentPoly kostka_wreath(const GammaPartition& Lambda);

/// Same polynomial via the Gaussian multinomial times the component Kostka
/// polynomials. Must agree with kostka_wreath.
LaurentPoly kostka_wreath_factorized(const GammaPartition& Lambda);

/// K, K(q) * K(1/q) and K(1) for one fixed point of the zero fiber.
struct CharacterReport {
  std::string lambda;  ///< text form of the index (Partition or GammaPartition grammar)
  LaurentPoly kostka;
  LaurentPoly character;
  mpz_class dimension;
};

CharacterReport character(const Partition& lambda);
CharacterReport character(const GammaPartition& Lambda);

/// Exponents of the monomial basis of the fixed point W_lambda inside
/// C[z]/(z^{2n}), n = |lambda|: {2n - l_i - i}, i = 1..n, with l the
/// increasing zero-padded parts. Listed in i order, hence strictly decreasing.
std::vector<int> fixed_point_exponents(const Partition& lambda);

/// C*-weights of the tangent space to the Schubert cell at W_lambda, read
/// off line by line from its Hom decomposition: for source z^{a_i} the
/// targets are z^b, a_i < b <= 2n-1, b not an earlier source; the line
/// Hom(z^{a_i}, z^b) has weight a_i - b. Returned sorted ascending.
std::vector<int> tangent_weights(const Partition& lambda);

/// Checks through q^order that prod_u (1 - q^{h})^{-1} * prod_{i<=n} (1 - q^i)
/// equals K_lambda(q), expanding the inverse factors as truncated geometric
/// series.
bool completion_character_check(const Partition& lambda, int order);

/// Same identity with an explicit hook multiset standing in for lambda's.
/// Used to confirm the check rejects corrupted hooks.
bool completion_character_check(std::span<const int> hooks, const Partition& lambda, int order);

/// prod_{h in hooks} (1 - q^h)^{-1} truncated after q^order.
LaurentPoly inverse_hook_series(std::span<const int> hooks, int order);

}  // namespace kcm
