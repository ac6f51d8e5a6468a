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

#include "kcm/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace kcm {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

// Parses one comma-separated list starting at `offset` within the full input.
Partition parse_parts(std::string_view text, std::size_t offset) {
  std::size_t begin = 0;
  while (begin < text.size() && is_space(text[begin])) ++begin;
  std::size_t end = text.size();
  while (end > begin && is_space(text[end - 1])) --end;
  std::string_view body = text.substr(begin, end - begin);
  if (body.empty() || body == "-") return Partition{};

  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string_view token = body.substr(pos, comma == std::string_view::npos ? body.npos : comma - pos);
    std::size_t at = offset + begin + pos;
    while (!token.empty() && is_space(token.front())) {
      token.remove_prefix(1);
      ++at;
    }
    while (!token.empty() && is_space(token.back())) token.remove_suffix(1);
    if (token.empty()) throw ParseError("empty partition part", at);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("malformed partition part '" + std::string(token) + "'", at);
    if (value < 1)
      throw ParseError("nonpositive partition part " + std::string(token), at);
    if (!parts.empty() && value > parts.back())
      throw ParseError("partition parts must be weakly decreasing", at);
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace

Partition Partition::parse(std::string_view text) { return parse_parts(text, 0); }

int Partition::part(int i) const noexcept {
  return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
}

int Partition::leg(Cell u) const noexcept {
  int count = 0;
  for (int r = u.row + 1; r < length() && parts_[static_cast<std::size_t>(r)] > u.col; ++r) ++count;
  return count;
}

Partition Partition::conjugate() const {
  std::vector<int> conj(static_cast<std::size_t>(part(0)), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++conj[static_cast<std::size_t>(c)];
  return Partition(std::move(conj));
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int r = 0; r < length(); ++r)
    for (int c = 0; c < part(r); ++c) out.push_back({r, c});
  return out;
}

std::vector<int> Partition::removable_rows() const {
  std::vector<int> rows;
  for (int r = 0; r < length(); ++r)
    if (part(r) > part(r + 1)) rows.push_back(r);
  return rows;
}

std::vector<int> Partition::addable_rows() const {
  std::vector<int> rows;
  for (int r = 0; r <= length(); ++r)
    if (r == 0 || part(r) < part(r - 1)) rows.push_back(r);
  return rows;
}

Partition Partition::with_box_added(int row) const {
  std::vector<int> parts = parts_;
  if (row == length()) parts.push_back(1);
  else ++parts.at(static_cast<std::size_t>(row));
  return Partition(std::move(parts));
}

Partition Partition::with_box_removed(int row) const {
  std::vector<int> parts = parts_;
  if (--parts.at(static_cast<std::size_t>(row)) == 0) parts.erase(parts.begin() + row);
  return Partition(std::move(parts));
}

std::vector<int> Partition::padded_increasing(int padded_length) const {
  if (padded_length < length())
    throw std::invalid_argument("partition " + to_string() + " has more than " +
                                std::to_string(padded_length) + " parts");
  std::vector<int> out(static_cast<std::size_t>(padded_length - length()), 0);
  out.insert(out.end(), parts_.rbegin(), parts_.rend());
  return out;
}

long long Partition::weighted_size() const noexcept {
  long long total = 0;
  for (int r = 0; r < length(); ++r) total += static_cast<long long>(r) * part(r);
  return total;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

GammaPartition::GammaPartition(std::vector<Partition> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("a gamma-partition needs at least one component");
  for (const auto& c : components_) size_ += c.size();
}

GammaPartition GammaPartition::parse(std::string_view text) {
  std::vector<Partition> comps;
  std::size_t pos = 0;
  while (true) {
    std::size_t semi = text.find(';', pos);
    std::string_view token = text.substr(pos, semi == std::string_view::npos ? text.npos : semi - pos);
    std::string_view trimmed = token;
    while (!trimmed.empty() && is_space(trimmed.front())) trimmed.remove_prefix(1);
    while (!trimmed.empty() && is_space(trimmed.back())) trimmed.remove_suffix(1);
    // An empty component must be written as "-" so that "2;;1" is rejected.
    if (trimmed.empty()) throw ParseError("empty gamma-partition component (use '-')", pos);
    comps.push_back(parse_parts(token, pos));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return GammaPartition(std::move(comps));
}

std::vector<int> GammaPartition::component_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(components_.size());
  for (const auto& c : components_) sizes.push_back(c.size());
  return sizes;
}

GammaPartition GammaPartition::permuted(const std::vector<int>& perm) const {
  if (perm.size() != components_.size()) throw std::invalid_argument("permutation has wrong length");
  std::vector<Partition> out(components_.size());
  for (std::size_t chi = 0; chi < components_.size(); ++chi)
    out.at(static_cast<std::size_t>(perm[chi])) = components_[chi];
  return GammaPartition(std::move(out));
}

std::string GammaPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ';';
    out += components_[i].to_string();
  }
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest first part first, then recursively the remainder with parts <= cap.
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<GammaPartition> enumerate_gamma_partitions(int N, int n) {
  if (N < 1) throw std::invalid_argument("enumerate_gamma_partitions: N must be positive");
  if (n < 0) throw std::invalid_argument("enumerate_gamma_partitions: n must be nonnegative");

  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) by_size[static_cast<std::size_t>(k)] = enumerate_partitions(k);

  std::vector<GammaPartition> out;
  std::vector<int> sizes(static_cast<std::size_t>(N), 0);
  std::vector<Partition> slots(static_cast<std::size_t>(N));

  std::function<void(int)> fill = [&](int chi) {
    if (chi == N) {
      out.emplace_back(slots);
      return;
    }
    for (const auto& p : by_size[static_cast<std::size_t>(sizes[static_cast<std::size_t>(chi)])]) {
      slots[static_cast<std::size_t>(chi)] = p;
      fill(chi + 1);
    }
  };
  std::function<void(int, int)> compose = [&](int chi, int remaining) {
    if (chi == N - 1) {
      sizes[static_cast<std::size_t>(chi)] = remaining;
      fill(0);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      sizes[static_cast<std::size_t>(chi)] = k;
      compose(chi + 1, remaining - k);
    }
  };
  compose(0, n);
  return out;
}

std::vector<int> hook_lengths(const Partition& lambda) {
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  for (const Cell& u : lambda.cells()) hooks.push_back(lambda.hook(u));
  return hooks;
}

std::vector<int> hook_lengths(const GammaPartition& Lambda) {
  std::vector<int> hooks;
  for (const auto& c : Lambda.components()) {
    auto h = hook_lengths(c);
    hooks.insert(hooks.end(), h.begin(), h.end());
  }
  return hooks;
}

mpz_class factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class multinomial(int n, const std::vector<int>& parts) {
  int total = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    total += p;
  }
  if (total != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  mpz_class out = factorial(n);
  for (int p : parts) out /= factorial(p);
  return out;
}

mpz_class syt_count(const Partition& lambda) {
  mpz_class denom = 1;
  for (int h : hook_lengths(lambda)) denom *= h;
  return factorial(lambda.size()) / denom;
}

namespace {

mpz_class count_by_corner_removal(const Partition& lambda) {
  if (lambda.size() <= 1) return 1;
  mpz_class total = 0;
  for (int r : lambda.removable_rows()) total += count_by_corner_removal(lambda.with_box_removed(r));
  return total;
}

}  // namespace

mpz_class syt_enumerate(const Partition& lambda, int bound) {
  if (lambda.size() > bound)
    throw BoundExceeded("syt_enumerate: |lambda| = " + std::to_string(lambda.size()) +
                        " exceeds the enumeration bound " + std::to_string(bound));
  return count_by_corner_removal(lambda);
}

mpz_class wreath_dimension(const GammaPartition& Lambda) {
  mpz_class d = multinomial(Lambda.size(), Lambda.component_sizes());
  for (const auto& c : Lambda.components()) d *= syt_count(c);
  return d;
}

}  // namespace kcm
