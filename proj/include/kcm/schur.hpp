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

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kcm/partition.hpp"

namespace kcm {

/// Coefficients of p_1^n (N == 1) or (sum_chi p_{1,chi})^n (N > 1) in the
/// Schur basis. Terms are listed in enumerate_gamma_partitions(N, n) order;
/// for N == 1 every label has exactly one component.
struct SchurExpansion {
  struct Term {
    GammaPartition label;
    mpz_class multiplicity;
  };

  int n = 0;
  int N = 1;
  std::vector<Term> terms;

  /// Zero when lambda does not occur.
  mpz_class coefficient(const GammaPartition& Lambda) const;
  mpz_class coefficient(const Partition& lambda) const;
  mpz_class sum_of_squares() const;
};

/// Multiplies by p_1 n times with the Pieri rule, i.e. counts paths from the
/// empty diagram in Young's lattice.
SchurExpansion expand_p1n(int n);

/// Multiplies by (p_{1,0} + ... + p_{1,N-1}) n times; each factor adds one
/// box to one component.
SchurExpansion expand_p1n_wreath(int N, int n);

/// First Lambda in P_Gamma(n) for which n!/prod h is not an integer, or
/// differs from multinomial * prod d, or from kostka_wreath(Lambda)(1).
std::optional<GammaPartition> multiplicity_identity_violation(int N, int n);

inline bool multiplicity_identity_check(int N, int n) { return !multiplicity_identity_violation(N, n); }

}  // namespace kcm
