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

#include "kcm/oracles.hpp"

#include <functional>

namespace kcm::oracle {

mpz_class partition_count(int n) {
  std::vector<mpz_class> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    mpz_class total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p[static_cast<std::size_t>(n)];
}

namespace {

std::vector<std::vector<bool>> grid(const Partition& lambda) {
  const int rows = lambda.length();
  const int cols = rows ? lambda.parts().front() : 0;
  std::vector<std::vector<bool>> g(static_cast<std::size_t>(rows), std::vector<bool>(static_cast<std::size_t>(cols)));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < lambda.parts()[static_cast<std::size_t>(r)]; ++c)
      g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = true;
  return g;
}

}  // namespace

std::vector<int> grid_hook_lengths(const Partition& lambda) {
  const auto g = grid(lambda);
  std::vector<int> hooks;
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      if (!g[r][c]) continue;
      int h = 1;
      for (std::size_t cc = c + 1; cc < g[r].size() && g[r][cc]; ++cc) ++h;
      for (std::size_t rr = r + 1; rr < g.size() && g[rr][c]; ++rr) ++h;
      hooks.push_back(h);
    }
  return hooks;
}

long long grid_weighted_size(const Partition& lambda) {
  const auto g = grid(lambda);
  long long total = 0;
  for (std::size_t r = 0; r < g.size(); ++r)
    for (bool cell : g[r])
      if (cell) total += static_cast<long long>(r);
  return total;
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  const auto& shape = lambda.parts();
  const int n = lambda.size();
  std::vector<Tableau> out;
  Tableau t(shape.size());
  std::function<void(int)> place = [&](int next) {
    if (next > n) {
      out.push_back(t);
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      const std::size_t len = t[r].size();
      if (len == static_cast<std::size_t>(shape[r])) continue;
      if (r > 0 && t[r - 1].size() <= len) continue;  // cell above must be filled
      t[r].push_back(next);
      place(next + 1);
      t[r].pop_back();
    }
  };
  place(1);
  return out;
}

int major_index(const Tableau& t) {
  std::vector<int> row_of;
  for (std::size_t r = 0; r < t.size(); ++r)
    for (int v : t[r]) {
      if (row_of.size() <= static_cast<std::size_t>(v)) row_of.resize(static_cast<std::size_t>(v) + 1, -1);
      row_of[static_cast<std::size_t>(v)] = static_cast<int>(r);
    }
  int maj = 0;
  for (std::size_t i = 1; i + 1 < row_of.size(); ++i)
    if (row_of[i + 1] > row_of[i]) maj += static_cast<int>(i);
  return maj;
}

LaurentPoly maj_generating_polynomial(const Partition& lambda) {
  LaurentPoly out;
  const int shift = static_cast<int>(grid_weighted_size(lambda));
  for (const auto& t : standard_tableaux(lambda)) out += LaurentPoly::monomial(major_index(t) - shift);
  return out;
}

}  // namespace kcm::oracle
