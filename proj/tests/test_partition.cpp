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

#include "kcm/oracles.hpp"
#include "kcm/partition.hpp"

using kcm::GammaPartition;
using kcm::Partition;

namespace {

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// Sum over compositions of n into N parts of prod p(n_chi), by brute force.
mpz_class gamma_count(int N, int n) {
  if (N == 1) return kcm::oracle::partition_count(n);
  mpz_class total = 0;
  for (int k = 0; k <= n; ++k) total += kcm::oracle::partition_count(k) * gamma_count(N - 1, n - k);
  return total;
}

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("enumerate_partitions small cases") {
    const auto zero = kcm::enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());
    CHECK(zero[0].size() == 0);

    const auto three = kcm::enumerate_partitions(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == P({3}));
    CHECK(three[1] == P({2, 1}));
    CHECK(three[2] == P({1, 1, 1}));

    CHECK(kcm::enumerate_partitions(10).size() == 42);
    CHECK_THROWS_AS(kcm::enumerate_partitions(-1), std::invalid_argument);
  }

  TEST_CASE("enumeration counts match the Euler recurrence and are reverse-lex") {
    for (int n = 0; n <= 15; ++n) {
      const auto list = kcm::enumerate_partitions(n);
      CHECK(mpz_class(list.size()) == kcm::oracle::partition_count(n));
      CHECK(std::is_sorted(list.begin(), list.end(), std::greater<>()));
      CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
    }
    // A000041 spot values.
    CHECK(kcm::oracle::partition_count(20) == 627);
    CHECK(kcm::oracle::partition_count(49) == 173525);
  }

  TEST_CASE("hook lengths") {
    CHECK(kcm::hook_lengths(P({1})) == std::vector<int>{1});
    CHECK(sorted_desc(kcm::hook_lengths(P({2, 1}))) == std::vector<int>{3, 1, 1});
    for (int n = 1; n <= 7; ++n) {
      std::vector<int> expected(static_cast<std::size_t>(n));
      std::iota(expected.rbegin(), expected.rend(), 1);
      CHECK(kcm::hook_lengths(Partition({n})) == expected);
    }
    CHECK(kcm::hook_lengths(Partition{}).empty());
  }

  TEST_CASE("hook multiset invariants") {
    for (int n = 0; n <= 10; ++n)
      for (const auto& lambda : kcm::enumerate_partitions(n)) {
        const auto h = kcm::hook_lengths(lambda);
        CHECK(static_cast<int>(h.size()) == n);
        const long long sum = std::accumulate(h.begin(), h.end(), 0LL);
        CHECK(sum == kcm::oracle::grid_weighted_size(lambda) +
                         kcm::oracle::grid_weighted_size(lambda.conjugate()) + n);
        CHECK(sorted_desc(h) == sorted_desc(kcm::hook_lengths(lambda.conjugate())));
        CHECK(sorted_desc(h) == sorted_desc(kcm::oracle::grid_hook_lengths(lambda)));
      }
  }

  TEST_CASE("syt_count by hook formula") {
    CHECK(kcm::syt_count(P({5})) == 1);
    CHECK(kcm::syt_count(P({2, 1})) == 2);
    CHECK(kcm::syt_count(P({3, 2})) == 5);
    CHECK(kcm::syt_count(P({3, 2, 1})) == 16);
    CHECK(kcm::syt_count(Partition{}) == 1);
  }

  TEST_CASE("syt_enumerate by corner removal") {
    CHECK(kcm::syt_enumerate(P({1, 1})) == 1);
    CHECK(kcm::syt_enumerate(P({2, 2})) == 2);
    CHECK(kcm::syt_enumerate(P({2, 1, 1})) == 3);
    CHECK(kcm::syt_enumerate(P({3, 2})) == 5);
    CHECK_THROWS_AS(kcm::syt_enumerate(Partition({11})), kcm::BoundExceeded);
    CHECK_THROWS_AS(kcm::syt_enumerate(P({3, 2}), 4), kcm::BoundExceeded);
    for (int n = 0; n <= 10; ++n)
      for (const auto& lambda : kcm::enumerate_partitions(n))
        CHECK(kcm::syt_enumerate(lambda) == kcm::syt_count(lambda));
  }

  TEST_CASE("sum of squared dimensions is n!") {
    for (int n = 0; n <= 10; ++n) {
      mpz_class total = 0;
      for (const auto& lambda : kcm::enumerate_partitions(n)) total += kcm::syt_count(lambda) * kcm::syt_count(lambda);
      CHECK(total == kcm::factorial(n));
    }
  }

  TEST_CASE("gamma partitions") {
    const auto n1 = kcm::enumerate_gamma_partitions(1, 3);
    REQUIRE(n1.size() == 3);
    CHECK(n1[1][0] == P({2, 1}));

    const auto two_one = kcm::enumerate_gamma_partitions(2, 1);
    REQUIRE(two_one.size() == 2);
    CHECK(two_one[0].to_string() == "1;-");
    CHECK(two_one[1].to_string() == "-;1");

    const auto two_two = kcm::enumerate_gamma_partitions(2, 2);
    std::vector<std::string> labels;
    for (const auto& L : two_two) labels.push_back(L.to_string());
    CHECK(labels == std::vector<std::string>{"2;-", "1,1;-", "1;1", "-;2", "-;1,1"});

    for (int N = 1; N <= 4; ++N)
      for (int n = 0; n <= 6; ++n) {
        const auto list = kcm::enumerate_gamma_partitions(N, n);
        CHECK(mpz_class(list.size()) == gamma_count(N, n));
        for (const auto& L : list) {
          CHECK(L.order() == N);
          CHECK(L.size() == n);
        }
      }
    CHECK_THROWS_AS(kcm::enumerate_gamma_partitions(0, 2), std::invalid_argument);
  }

  TEST_CASE("wreath dimensions square-sum to the group order") {
    for (int N = 1; N <= 4; ++N)
      for (int n = 0; n <= 6; ++n) {
        mpz_class total = 0;
        for (const auto& L : kcm::enumerate_gamma_partitions(N, n)) total += kcm::wreath_dimension(L) * kcm::wreath_dimension(L);
        mpz_class order;
        mpz_ui_pow_ui(order.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(n));
        CHECK(total == order * kcm::factorial(n));
      }
    CHECK(kcm::wreath_dimension(GammaPartition::parse("1;1")) == 2);
    CHECK(kcm::wreath_dimension(GammaPartition::parse("2,1;-;1")) == 8);  // 4 * 2 * 1
  }

  TEST_CASE("text grammar") {
    CHECK(Partition::parse("3,1,1") == P({3, 1, 1}));
    CHECK(Partition::parse(" 2, 1 ") == P({2, 1}));
    CHECK(Partition::parse("-").empty());
    CHECK(P({3, 1, 1}).to_string() == "3,1,1");
    CHECK(Partition{}.to_string() == "-");

    try {
      (void)Partition::parse("2,0");
      FAIL("expected a parse error");
    } catch (const kcm::ParseError& e) {
      CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(Partition::parse("1,2"), kcm::ParseError);
    CHECK_THROWS_AS(Partition::parse("2,,1"), kcm::ParseError);
    CHECK_THROWS_AS(Partition::parse("x"), kcm::ParseError);
    CHECK_THROWS_AS(Partition::parse("-3"), kcm::ParseError);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);

    const auto L = GammaPartition::parse("2,1;-;1");
    CHECK(L.order() == 3);
    CHECK(L.size() == 4);
    CHECK(L[1].empty());
    CHECK(L.to_string() == "2,1;-;1");
    try {
      (void)GammaPartition::parse("2,1;1,0");
      FAIL("expected a parse error");
    } catch (const kcm::ParseError& e) {
      CHECK(e.position() == 6);
    }
    CHECK_THROWS_AS(GammaPartition::parse("2;;1"), kcm::ParseError);
  }

  TEST_CASE("parse inverts to_string on every small partition") {
    for (int n = 0; n <= 8; ++n)
      for (const auto& lambda : kcm::enumerate_partitions(n)) CHECK(Partition::parse(lambda.to_string()) == lambda);
    for (const auto& L : kcm::enumerate_gamma_partitions(3, 4)) CHECK(GammaPartition::parse(L.to_string()) == L);
  }

  TEST_CASE("diagram helpers") {
    const Partition lambda = P({4, 2, 1});
    CHECK(lambda.conjugate() == P({3, 2, 1, 1}));
    CHECK(lambda.conjugate().conjugate() == lambda);
    CHECK(lambda.padded_increasing(7) == std::vector<int>{0, 0, 0, 0, 1, 2, 4});
    CHECK_THROWS_AS(lambda.padded_increasing(2), std::invalid_argument);
    CHECK(lambda.weighted_size() == 0 * 4 + 1 * 2 + 2 * 1);
    CHECK(lambda.removable_rows() == std::vector<int>{0, 1, 2});
    CHECK(lambda.addable_rows() == std::vector<int>{0, 1, 2, 3});
    CHECK(P({2, 2}).addable_rows() == std::vector<int>{0, 2});
    CHECK(lambda.with_box_removed(2) == P({4, 2}));
    CHECK(lambda.with_box_added(3) == P({4, 2, 1, 1}));
    CHECK(lambda.hook({0, 0}) == 6);
    CHECK(lambda.hook({1, 1}) == 1);
  }

  TEST_CASE("multinomial") {
    CHECK(kcm::multinomial(4, {2, 1, 1}) == 12);
    CHECK(kcm::multinomial(0, {0, 0}) == 1);
    CHECK_THROWS_AS(kcm::multinomial(3, {1, 1}), std::invalid_argument);
  }
}
