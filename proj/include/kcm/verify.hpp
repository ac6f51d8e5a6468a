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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace kcm {

/// Size limits for verify_all. Partition-level checks run over all |lambda|
/// <= max_n; the other fields cap the more expensive families.
struct VerifyBounds {
  int max_n = 10;
  int max_N = 4;
  int wreath_max_n = 6;      ///< wreath checks use n <= min(max_n, wreath_max_n)
  int wreath_schur_max_N = 3;
  int wreath_schur_max_n = 5;
  int enumerate_bound = 8;   ///< corner-removal SYT enumeration
  int tangent_max_n = 8;
  int maj_max_n = 7;
  int schur_max_n = 8;
  int profile_max_n = 6;
  int cm_samples = 200;
  int cm_max_n = 12;
  int embed_samples = 40;
  int embed_max_n = 6;
  int poly_samples = 200;
  std::uint64_t seed = 1;
  int threads = 1;
  /// Test hook: perturbs the hook multiset fed to the hook-based identities.
  bool inject_hook_corruption = false;
};

struct CheckResult {
  std::string module;
  std::string name;
  std::size_t items = 0;  ///< work items examined
  bool passed = true;
  std::string detail;     ///< first failure, with both sides
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  std::size_t total_items() const;
};

/// Runs every invariant of every module within the bounds. Entries come out
/// in a fixed order whatever the thread count; randomized checks draw from
/// generators seeded by (seed, check index).
VerifyReport verify_all(const VerifyBounds& bounds);

}  // namespace kcm
