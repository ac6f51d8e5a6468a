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

#include "kcm/laurent_poly.hpp"

#include <sstream>

namespace kcm {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, mpz_class(constant));
}

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) { prune(); }

LaurentPoly LaurentPoly::monomial(int exponent, const mpz_class& coefficient) {
  return LaurentPoly(Terms{{exponent, coefficient}});
}

LaurentPoly LaurentPoly::one_minus_q_pow(int k) {
  return LaurentPoly(1) - monomial(k);
}

void LaurentPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (sgn(it->second) == 0) it = terms_.erase(it);
    else ++it;
  }
}

mpz_class LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no minimal exponent");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no maximal exponent");
  return terms_.rbegin()->first;
}

bool LaurentPoly::is_palindromic() const { return *this == substitute_inverse(*this); }

bool LaurentPoly::has_nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (sgn(c) < 0) return false;
  return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.terms_[ea + eb] += ca * cb;
  out.prune();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace_hint(out.end(), e + shift, c);
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::truncated(int max_exp) const {
  Terms out;
  for (const auto& [e, c] : terms_) {
    if (e > max_exp) break;
    out.emplace_hint(out.end(), e, c);
  }
  return LaurentPoly(std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

std::string describe_division(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& r) {
  return "(" + a.to_string() + ") is not divisible by (" + b.to_string() + "); remainder " + r.to_string();
}

}  // namespace

NonExactDivision::NonExactDivision(LaurentPoly dividend, LaurentPoly divisor, LaurentPoly remainder)
    : std::runtime_error(describe_division(dividend, divisor, remainder)),
      dividend_(std::move(dividend)),
      divisor_(std::move(divisor)),
      remainder_(std::move(remainder)) {}

LaurentPoly qfactorial_product(int n) {
  if (n < 0) throw std::invalid_argument("qfactorial_product: n must be nonnegative");
  LaurentPoly out(1);
  for (int i = 1; i <= n; ++i) out *= LaurentPoly::one_minus_q_pow(i);
  return out;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by the zero polynomial");
  if (a.is_zero()) return {};

  const int a_shift = a.min_exponent();
  const int b_shift = b.min_exponent();
  LaurentPoly remainder = a.shifted(-a_shift);
  const LaurentPoly divisor = b.shifted(-b_shift);
  const int divisor_degree = divisor.max_exponent();
  const mpz_class& lead = divisor.terms().rbegin()->second;

  LaurentPoly quotient;
  while (!remainder.is_zero() && remainder.max_exponent() >= divisor_degree) {
    const int e = remainder.max_exponent();
    const mpz_class& top = remainder.terms().rbegin()->second;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) break;
    LaurentPoly step = LaurentPoly::monomial(e - divisor_degree, top / lead);
    remainder -= step * divisor;
    quotient += step;
  }
  if (!remainder.is_zero()) throw NonExactDivision(a, b, remainder.shifted(a_shift));
  return quotient.shifted(a_shift - b_shift);
}

LaurentPoly substitute_inverse(const LaurentPoly& a) {
  LaurentPoly::Terms out;
  for (const auto& [e, c] : a.terms()) out.emplace(-e, c);
  return LaurentPoly(std::move(out));
}

mpz_class evaluate_at_one(const LaurentPoly& a) {
  mpz_class total = 0;
  for (const auto& [e, c] : a.terms()) total += c;
  return total;
}

LaurentPoly q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  // row[j] = [m choose j]_q, built up one m at a time.
  std::vector<LaurentPoly> row{LaurentPoly(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<LaurentPoly> next(static_cast<std::size_t>(m + 1));
    next[0] = LaurentPoly(1);
    next[static_cast<std::size_t>(m)] = LaurentPoly(1);
    for (int j = 1; j < m; ++j)
      next[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(j);
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

LaurentPoly q_multinomial(int n, const std::vector<int>& parts) {
  int remaining = n;
  LaurentPoly out(1);
  for (int k : parts) {
    if (k < 0) throw std::invalid_argument("q_multinomial: negative part");
    out *= q_binomial(remaining, k);
    remaining -= k;
  }
  if (remaining != 0) throw std::invalid_argument("q_multinomial: parts do not sum to n");
  return out;
}

}  // namespace kcm
