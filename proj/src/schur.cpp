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

#include "kcm/schur.hpp"

#include <map>

#include "kcm/characters.hpp"

namespace kcm {

mpz_class SchurExpansion::coefficient(const GammaPartition& Lambda) const {
  for (const auto& t : terms)
    if (t.label == Lambda) return t.multiplicity;
  return 0;
}

mpz_class SchurExpansion::coefficient(const Partition& lambda) const {
  return coefficient(GammaPartition({lambda}));
}

mpz_class SchurExpansion::sum_of_squares() const {
  mpz_class total = 0;
  for (const auto& t : terms) total += t.multiplicity * t.multiplicity;
  return total;
}

SchurExpansion expand_p1n_wreath(int N, int n) {
  if (N < 1) throw std::invalid_argument("expand_p1n_wreath: N must be positive");
  if (n < 1) throw std::invalid_argument("expand_p1n_wreath: n must be positive");

  std::map<GammaPartition, mpz_class> level{{GammaPartition(std::vector<Partition>(static_cast<std::size_t>(N))), 1}};
  for (int step = 0; step < n; ++step) {
    std::map<GammaPartition, mpz_class> next;
    for (const auto& [Lambda, m] : level) {
      for (int chi = 0; chi < N; ++chi) {
        for (int row : Lambda[chi].addable_rows()) {
          std::vector<Partition> comps = Lambda.components();
          comps[static_cast<std::size_t>(chi)] = comps[static_cast<std::size_t>(chi)].with_box_added(row);
          next[GammaPartition(std::move(comps))] += m;
        }
      }
    }
    level = std::move(next);
  }

  SchurExpansion out;
  out.n = n;
  out.N = N;
  for (auto& Lambda : enumerate_gamma_partitions(N, n)) {
    auto it = level.find(Lambda);
    if (it != level.end()) out.terms.push_back({std::move(Lambda), it->second});
  }
  return out;
}

SchurExpansion expand_p1n(int n) { return expand_p1n_wreath(1, n); }

std::optional<GammaPartition> multiplicity_identity_violation(int N, int n) {
  const mpz_class n_factorial = factorial(n);
  for (const auto& Lambda : enumerate_gamma_partitions(N, n)) {
    mpz_class hook_product = 1;
    for (int h : hook_lengths(Lambda)) hook_product *= h;
    if (!mpz_divisible_p(n_factorial.get_mpz_t(), hook_product.get_mpz_t())) return Lambda;
    const mpz_class d = n_factorial / hook_product;
    if (d != wreath_dimension(Lambda)) return Lambda;
    if (d != evaluate_at_one(kostka_wreath(Lambda))) return Lambda;
  }
  return std::nullopt;
}

}  // namespace kcm
