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

#include "kcm/characters.hpp"

#include <algorithm>
#include <set>

namespace kcm {

namespace {

LaurentPoly hook_product(std::span<const int> hooks) {
  LaurentPoly out(1);
  for (int h : hooks) out *= LaurentPoly::one_minus_q_pow(h);
  return out;
}

CharacterReport make_report(std::string label, LaurentPoly k) {
  CharacterReport r;
  r.lambda = std::move(label);
  r.character = k * substitute_inverse(k);
  r.dimension = evaluate_at_one(k);
  r.kostka = std::move(k);
  return r;
}

}  // namespace

LaurentPoly kostka(const Partition& lambda) {
  const auto hooks = hook_lengths(lambda);
  return exact_divide(qfactorial_product(lambda.size()), hook_product(hooks));
}

LaurentPoly kostka_wreath(const GammaPartition& Lambda) {
  const auto hooks = hook_lengths(Lambda);
  return exact_divide(qfactorial_product(Lambda.size()), hook_product(hooks));
}

LaurentPoly kostka_wreath_factorized(const GammaPartition& Lambda) {
  LaurentPoly out = q_multinomial(Lambda.size(), Lambda.component_sizes());
  for (const auto& c : Lambda.components()) out *= kostka(c);
  return out;
}

CharacterReport character(const Partition& lambda) { return make_report(lambda.to_string(), kostka(lambda)); }

CharacterReport character(const GammaPartition& Lambda) {
  return make_report(Lambda.to_string(), kostka_wreath(Lambda));
}

std::vector<int> fixed_point_exponents(const Partition& lambda) {
  const int n = lambda.size();
  const auto l = lambda.padded_increasing(n);
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) a[static_cast<std::size_t>(i - 1)] = 2 * n - l[static_cast<std::size_t>(i - 1)] - i;
  return a;
}

std::vector<int> tangent_weights(const Partition& lambda) {
  const int n = lambda.size();
  const auto sources = fixed_point_exponents(lambda);
  std::vector<int> weights;
  std::set<int> earlier;
  for (int a : sources) {
    for (int b = a + 1; b <= 2 * n - 1; ++b)
      if (!earlier.contains(b)) weights.push_back(a - b);
    earlier.insert(a);
  }
  std::sort(weights.begin(), weights.end());
  return weights;
}

LaurentPoly inverse_hook_series(std::span<const int> hooks, int order) {
  LaurentPoly series(1);
  for (int h : hooks) {
    if (h < 1) throw std::invalid_argument("inverse_hook_series: hooks must be positive");
    LaurentPoly geometric;
    for (int e = 0; e <= order; e += h) geometric += LaurentPoly::monomial(e);
    series = (series * geometric).truncated(order);
  }
  return series;
}

bool completion_character_check(std::span<const int> hooks, const Partition& lambda, int order) {
  if (order < 1) throw std::invalid_argument("completion_character_check: order must be positive");
  const LaurentPoly lhs = (inverse_hook_series(hooks, order) * qfactorial_product(lambda.size())).truncated(order);
  return lhs == kostka(lambda).truncated(order);
}

bool completion_character_check(const Partition& lambda, int order) {
  const auto hooks = hook_lengths(lambda);
  return completion_character_check(hooks, lambda, order);
}

}  // namespace kcm
