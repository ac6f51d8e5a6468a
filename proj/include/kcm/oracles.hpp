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

// Brute-force cross-checks. Nothing here calls into the hook-formula,
// Kostka or Pieri code paths it is used to check.

#include <vector>

#include <gmpxx.h>

#include "kcm/laurent_poly.hpp"
#include "kcm/partition.hpp"

namespace kcm::oracle {

/// p(n) by Euler's pentagonal-number recurrence.
mpz_class partition_count(int n);

/// Hooks counted cell by cell on an explicit boolean grid of the diagram.
std::vector<int> grid_hook_lengths(const Partition& lambda);

/// sum_i (i - 1) lambda_i counted on the grid (row index of every cell).
long long grid_weighted_size(const Partition& lambda);

/// A standard Young tableau as rows of entries 1..n.
using Tableau = std::vector<std::vector<int>>;

/// Every SYT of shape lambda, built by placing 1, 2, ..., n in turn.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// Sum of the i such that i + 1 sits in a lower row than i.
int major_index(const Tableau& t);

/// q^{-n(lambda)} * sum_T q^{maj(T)}.
LaurentPoly maj_generating_polynomial(const Partition& lambda);

}  // namespace kcm::oracle
