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

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "kcm/errors.hpp"

namespace kcm {

/// A box of a Young diagram, 0-based (row, col).
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// An integer partition stored as weakly decreasing positive parts.
///
/// The empty partition is the unique partition of 0. Ordering is
/// lexicographic on the parts, so sorting a list of partitions of the same
/// size descending gives reverse-lexicographic order.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);

  /// Parses "3,1,1"; "-" or "" is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based), or 0 past the end.
  int part(int i) const noexcept;

  Partition conjugate() const;

  /// Cells in row-major order.
  std::vector<Cell> cells() const;

  int arm(Cell u) const noexcept { return part(u.row) - u.col - 1; }
  int leg(Cell u) const noexcept;
  int hook(Cell u) const noexcept { return arm(u) + leg(u) + 1; }

  /// Corners whose removal leaves a partition (rows with parts[i] > parts[i+1]).
  std::vector<int> removable_rows() const;
  /// Rows where a box may be appended, including the new row at the bottom.
  std::vector<int> addable_rows() const;
  Partition with_box_added(int row) const;
  Partition with_box_removed(int row) const;

  /// Parts in weakly increasing order, left padded with zeros to exactly
  /// `length` entries (l_1 <= ... <= l_length). Throws std::invalid_argument
  /// if the partition has more than `length` parts.
  std::vector<int> padded_increasing(int length) const;

  /// n(lambda) = sum over rows of (row index) * part, rows 0-based.
  long long weighted_size() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// An N-tuple of partitions indexed by Z/NZ; total size is the sum of the
/// component sizes.
class GammaPartition {
 public:
  GammaPartition() = default;
  /// Throws std::invalid_argument when components is empty (N must be >= 1).
  explicit GammaPartition(std::vector<Partition> components);

  /// Parses "2,1;-;1": components separated by ';', "-" for the empty one.
  static GammaPartition parse(std::string_view text);

  int order() const noexcept { return static_cast<int>(components_.size()); }
  int size() const noexcept { return size_; }
  const std::vector<Partition>& components() const noexcept { return components_; }
  const Partition& operator[](int chi) const { return components_.at(static_cast<std::size_t>(chi)); }

  std::vector<int> component_sizes() const;
  /// The tuple with component slot chi moved to slot perm[chi].
  GammaPartition permuted(const std::vector<int>& perm) const;

  std::string to_string() const;

  friend bool operator==(const GammaPartition&, const GammaPartition&) = default;
  friend std::strong_ordering operator<=>(const GammaPartition& a, const GammaPartition& b) {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<Partition> components_;
  int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// All N-tuples of partitions with total size n. Component sizes run over
/// compositions of n in reverse-lexicographic order; within a composition
/// each component runs in reverse-lexicographic order, the first slot
/// varying slowest.
std::vector<GammaPartition> enumerate_gamma_partitions(int N, int n);

/// Hook lengths in row-major cell order.
std::vector<int> hook_lengths(const Partition& lambda);

/// Hook lengths of every component, concatenated in slot order.
std::vector<int> hook_lengths(const GammaPartition& Lambda);

mpz_class factorial(int n);
mpz_class multinomial(int n, const std::vector<int>& parts);

/// Number of standard Young tableaux via the hook length formula.
mpz_class syt_count(const Partition& lambda);

inline constexpr int kDefaultSytEnumerationBound = 10;

/// Standard Young tableaux counted by recursive corner removal. Throws
/// BoundExceeded when |lambda| > bound.
mpz_class syt_enumerate(const Partition& lambda, int bound = kDefaultSytEnumerationBound);

/// multinomial(n; |lambda_chi|) * prod_chi syt_count(lambda_chi).
mpz_class wreath_dimension(const GammaPartition& Lambda);

}  // namespace kcm
