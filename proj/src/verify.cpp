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

#include "kcm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "kcm/calogero_moser.hpp"
#include "kcm/characters.hpp"
#include "kcm/laurent_poly.hpp"
#include "kcm/oracles.hpp"
#include "kcm/partition.hpp"
#include "kcm/schur.hpp"

namespace kcm {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t VerifyReport::total_items() const {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.items;
  return total;
}

namespace {

using Rng = std::mt19937_64;

// Collects items for one check and keeps the first failure.
class Tally {
 public:
  void pass() { ++items_; }
  void fail(const std::string& detail) {
    ++items_;
    if (passed_) {
      passed_ = false;
      detail_ = detail;
    }
  }
  void expect(bool ok, const std::function<std::string()>& detail) {
    if (ok) pass();
    else fail(detail());
  }
  CheckResult result(std::string module, std::string name) const {
    return {std::move(module), std::move(name), items_, passed_, detail_};
  }

 private:
  std::size_t items_ = 0;
  bool passed_ = true;
  std::string detail_;
};

std::string join(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Partition> partitions_up_to(int max_n) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_n; ++n) {
    auto level = enumerate_partitions(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

struct Context {
  VerifyBounds bounds;
  std::vector<int> hooks_under_test(const Partition& lambda) const {
    auto h = hook_lengths(lambda);
    if (bounds.inject_hook_corruption && !h.empty()) h.front() += 1;
    return h;
  }
};

LaurentPoly random_laurent(Rng& rng) {
  std::uniform_int_distribution<int> count(0, 5), exponent(-6, 6), coef(-9, 9);
  LaurentPoly p;
  for (int t = count(rng); t > 0; --t) {
    const int e = exponent(rng);
    p += LaurentPoly::monomial(e, coef(rng));
  }
  return p;
}

using Check = std::function<CheckResult(const Context&, Rng&)>;

// ---- partitions ----------------------------------------------------------

CheckResult check_partition_count(const Context& ctx, Rng&) {
  Tally t;
  for (int n = 0; n <= ctx.bounds.max_n; ++n) {
    const auto list = enumerate_partitions(n);
    const std::set<Partition> unique(list.begin(), list.end());
    const bool ordered = std::is_sorted(list.begin(), list.end(), std::greater<>());
    bool sizes_ok = std::all_of(list.begin(), list.end(), [n](const Partition& p) { return p.size() == n; });
    t.expect(mpz_class(list.size()) == oracle::partition_count(n) && unique.size() == list.size() && ordered &&
                 sizes_ok,
             [&] {
               return "n=" + std::to_string(n) + ": enumerated " + std::to_string(list.size()) +
                      ", Euler recurrence " + oracle::partition_count(n).get_str();
             });
  }
  return t.result("partitions", "partition-count-matches-euler-recurrence");
}

CheckResult check_hook_sum(const Context& ctx, Rng&) {
  Tally t;
  for (const auto& lambda : partitions_up_to(ctx.bounds.max_n)) {
    const auto h = ctx.hooks_under_test(lambda);
    const long long lhs = std::accumulate(h.begin(), h.end(), 0LL);
    const long long rhs =
        oracle::grid_weighted_size(lambda) + oracle::grid_weighted_size(lambda.conjugate()) + lambda.size();
    t.expect(static_cast<int>(h.size()) == lambda.size() && lhs == rhs, [&] {
      return "lambda=" + lambda.to_string() + ": sum of hooks " + std::to_string(lhs) +
             ", n(lambda)+n(lambda')+n = " + std::to_string(rhs);
    });
  }
  return t.result("partitions", "hook-sum-equals-n-lambda-plus-n-conjugate-plus-n");
}

CheckResult check_hook_conjugate(const Context& ctx, Rng&) {
  Tally t;
  for (const auto& lambda : partitions_up_to(ctx.bounds.max_n)) {
    const auto a = sorted(hook_lengths(lambda));
    const auto b = sorted(hook_lengths(lambda.conjugate()));
    const auto grid = sorted(oracle::grid_hook_lengths(lambda));
    t.expect(a == b && a == grid, [&] {
      return "lambda=" + lambda.to_string() + ": hooks " + join(a) + ", conjugate hooks " + join(b) +
             ", grid hooks " + join(grid);
    });
  }
  return t.result("partitions", "hook-multiset-conjugation-invariant");
}

CheckResult check_syt_enumeration(const Context& ctx, Rng&) {
  Tally t;
  const int bound = std::min(ctx.bounds.max_n, ctx.bounds.enumerate_bound);
  for (const auto& lambda : partitions_up_to(bound)) {
    const mpz_class hook = syt_count(lambda);
    const mpz_class walk = syt_enumerate(lambda, ctx.bounds.enumerate_bound);
    t.expect(hook == walk, [&] {
      return "lambda=" + lambda.to_string() + ": hook formula " + hook.get_str() + ", corner removal " +
             walk.get_str();
    });
  }
  return t.result("partitions", "syt-hook-formula-matches-enumeration");
}

CheckResult check_syt_square_sum(const Context& ctx, Rng&) {
  Tally t;
  for (int n = 0; n <= ctx.bounds.max_n; ++n) {
    mpz_class total = 0;
    for (const auto& lambda : enumerate_partitions(n)) total += syt_count(lambda) * syt_count(lambda);
    t.expect(total == factorial(n), [&] {
      return "n=" + std::to_string(n) + ": sum d^2 = " + total.get_str() + ", n! = " + factorial(n).get_str();
    });
  }
  return t.result("partitions", "sum-of-squared-dimensions-equals-n-factorial");
}

CheckResult check_wreath_square_sum(const Context& ctx, Rng&) {
  Tally t;
  const int max_n = std::min(ctx.bounds.max_n, ctx.bounds.wreath_max_n);
  for (int N = 1; N <= ctx.bounds.max_N; ++N)
    for (int n = 0; n <= max_n; ++n) {
      mpz_class total = 0;
      for (const auto& L : enumerate_gamma_partitions(N, n)) {
        const mpz_class d = wreath_dimension(L);
        total += d * d;
      }
      mpz_class order;
      mpz_ui_pow_ui(order.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(n));
      order *= factorial(n);
      t.expect(total == order, [&] {
        return "N=" + std::to_string(N) + ", n=" + std::to_string(n) + ": sum d^2 = " + total.get_str() +
               ", N^n n! = " + order.get_str();
      });
    }
  return t.result("partitions", "wreath-sum-of-squared-dimensions-equals-group-order");
}

// ---- qpoly ---------------------------------------------------------------

CheckResult check_exact_divide_roundtrip(const Context& ctx, Rng& rng) {
  Tally t;
  for (int s = 0; s < ctx.bounds.poly_samples; ++s) {
    const LaurentPoly a = random_laurent(rng);
    LaurentPoly b = random_laurent(rng);
    if (b.is_zero()) b = LaurentPoly::one_minus_q_pow(1 + s % 4);
    const LaurentPoly prod = a * b;
    bool ok = false;
    std::string got;
    try {
      const LaurentPoly c = exact_divide(prod, b);
      ok = c == a;
      got = c.to_string();
    } catch (const NonExactDivision& e) {
      got = e.what();
    }
    t.expect(ok, [&] { return "(" + prod.to_string() + ") / (" + b.to_string() + ") gave " + got + ", expected " + a.to_string(); });
  }
  return t.result("qpoly", "exact-divide-inverts-multiplication");
}

CheckResult check_substitute_inverse(const Context& ctx, Rng& rng) {
  Tally t;
  for (int s = 0; s < ctx.bounds.poly_samples; ++s) {
    const LaurentPoly a = random_laurent(rng), b = random_laurent(rng);
    const bool involutive = substitute_inverse(substitute_inverse(a)) == a;
    const bool additive = substitute_inverse(a + b) == substitute_inverse(a) + substitute_inverse(b);
    const bool multiplicative = substitute_inverse(a * b) == substitute_inverse(a) * substitute_inverse(b);
    t.expect(involutive && additive && multiplicative,
             [&] { return "a=" + a.to_string() + ", b=" + b.to_string(); });
  }
  return t.result("qpoly", "substitute-inverse-is-involutive-ring-homomorphism");
}

CheckResult check_eval_multiplicative(const Context& ctx, Rng& rng) {
  Tally t;
  for (int s = 0; s < ctx.bounds.poly_samples; ++s) {
    const LaurentPoly a = random_laurent(rng), b = random_laurent(rng);
    const mpz_class lhs = evaluate_at_one(a * b);
    const mpz_class rhs = evaluate_at_one(a) * evaluate_at_one(b);
    t.expect(lhs == rhs, [&] { return "a=" + a.to_string() + ", b=" + b.to_string() + ": " + lhs.get_str() + " vs " + rhs.get_str(); });
  }
  return t.result("qpoly", "evaluation-at-one-is-multiplicative");
}

// ---- characters ----------------------------------------------------------

CheckResult check_tangent_hooks(const Context& ctx, Rng&) {
  Tally t;
  for (const auto& lambda : partitions_up_to(std::min(ctx.bounds.max_n, ctx.bounds.tangent_max_n))) {
    const auto weights = tangent_weights(lambda);
    std::vector<int> expected;
    for (int h : ctx.hooks_under_test(lambda)) expected.push_back(-h);
    expected = sorted(expected);
    t.expect(weights == expected, [&] {
      return "lambda=" + lambda.to_string() + ": tangent weights " + join(weights) + ", negated hooks " +
             join(expected);
    });
  }
  return t.result("characters", "tangent-weights-equal-negated-hooks");
}

CheckResult check_kostka_shape(const Context& ctx, Rng&) {
  Tally t;
  for (const auto& lambda : partitions_up_to(ctx.bounds.max_n)) {
    std::string why;
    try {
      const LaurentPoly k = kostka(lambda);
      if (k.is_zero() || k.min_exponent() != 0 || k.coefficient(0) != 1) why = "constant term is not 1";
      else if (!k.has_nonnegative_coefficients()) why = "negative coefficient";
      if (!why.empty()) why += " in K=" + k.to_string();
    } catch (const NonExactDivision& e) {
      why = e.what();
    }
    t.expect(why.empty(), [&] { return "lambda=" + lambda.to_string() + ": " + why; });
  }
  return t.result("characters", "kostka-exact-constant-term-one-nonnegative");
}

CheckResult check_kostka_at_one(const Context& ctx, Rng&) {
  Tally t;
  for (const auto& lambda : partitions_up_to(ctx.bounds.max_n)) {
    const mpz_class k1 = evaluate_at_one(kostka(lambda));
    const mpz_class d = syt_count(lambda);
    t.expect(k1 == d, [&] { return "lambda=" + lambda.to_string() + ": K(1)=" + k1.get_str() + ", d=" + d.get_str(); });
  }
  return t.result("characters", "kostka-at-one-equals-syt-count");
}

CheckResult check_kostka_maj(const Context& ctx, Rng&) {
  Tally t;
  for (const auto& lambda : partitions_up_to(std::min(ctx.bounds.max_n, ctx.bounds.maj_max_n))) {
    const LaurentPoly k = kostka(lambda);
    const LaurentPoly maj = oracle::maj_generating_polynomial(lambda);
    t.expect(k == maj, [&] {
      return "lambda=" + lambda.to_string() + ": K=" + k.to_string() + ", maj polynomial " + maj.to_string();
    });
  }
  return t.result("characters", "kostka-equals-shifted-major-index-polynomial");
}

CheckResult check_kostka_conjugate(const Context& ctx, Rng&) {
  Tally t;
  for (const auto& lambda : partitions_up_to(ctx.bounds.max_n)) {
    const LaurentPoly a = kostka(lambda), b = kostka(lambda.conjugate());
    t.expect(a == b, [&] { return "lambda=" + lambda.to_string() + ": " + a.to_string() + " vs " + b.to_string(); });
  }
  return t.result("characters", "kostka-conjugation-invariant");
}

CheckResult check_wreath_factorization(const Context& ctx, Rng&) {
  Tally t;
  const int max_n = std::min(ctx.bounds.max_n, ctx.bounds.wreath_max_n);
  for (int N = 1; N <= std::min(ctx.bounds.max_N, 3); ++N)
    for (int n = 0; n <= max_n; ++n)
      for (const auto& L : enumerate_gamma_partitions(N, n)) {
        const LaurentPoly direct = kostka_wreath(L);
        const LaurentPoly factored = kostka_wreath_factorized(L);
        t.expect(direct == factored, [&] {
          return "Lambda=" + L.to_string() + ": " + direct.to_string() + " vs " + factored.to_string();
        });
      }
  return t.result("characters", "kostka-wreath-equals-q-multinomial-times-components");
}

std::string report_problem(const CharacterReport& r, const mpz_class& d) {
  if (r.character != r.kostka * substitute_inverse(r.kostka)) return "character != K(q) K(1/q)";
  if (!r.character.is_palindromic()) return "character " + r.character.to_string() + " is not palindromic";
  if (evaluate_at_one(r.character) != d * d)
    return "character(1)=" + evaluate_at_one(r.character).get_str() + ", d^2=" + mpz_class(d * d).get_str();
  if (r.dimension != d) return "dimension " + r.dimension.get_str() + ", expected " + d.get_str();
  return {};
}

CheckResult check_character(const Context& ctx, Rng&) {
  Tally t;
  for (const auto& lambda : partitions_up_to(ctx.bounds.max_n)) {
    const std::string why = report_problem(character(lambda), syt_count(lambda));
    t.expect(why.empty(), [&] { return "lambda=" + lambda.to_string() + ": " + why; });
  }
  const int max_n = std::min(ctx.bounds.max_n, ctx.bounds.wreath_max_n);
  for (int N = 2; N <= ctx.bounds.max_N; ++N)
    for (int n = 0; n <= max_n; ++n)
      for (const auto& L : enumerate_gamma_partitions(N, n)) {
        const std::string why = report_problem(character(L), wreath_dimension(L));
        t.expect(why.empty(), [&] { return "Lambda=" + L.to_string() + ": " + why; });
      }
  return t.result("characters", "character-palindromic-with-value-d-squared");
}

CheckResult check_transversality(const Context& ctx, Rng&) {
  Tally t;
  for (const auto& lambda : partitions_up_to(std::min(ctx.bounds.max_n, ctx.bounds.tangent_max_n))) {
    const auto second = tangent_weights(lambda);
    std::set<int> first;
    for (int w : second) first.insert(-w);  // the p_1 side, via the involution
    const bool negative = std::all_of(second.begin(), second.end(), [](int w) { return w < 0; });
    const bool positive = std::all_of(first.begin(), first.end(), [](int w) { return w > 0; });
    bool disjoint = true;
    for (int w : second) disjoint = disjoint && !first.contains(w);
    t.expect(negative && positive && disjoint, [&] { return "lambda=" + lambda.to_string() + ": weights " + join(second); });
  }
  return t.result("characters", "tangent-weight-sets-of-both-projections-meet-trivially");
}

CheckResult check_completion(const Context& ctx, Rng&) {
  Tally t;
  for (const auto& lambda : partitions_up_to(ctx.bounds.max_n)) {
    const int order = std::max(20, lambda.size() * (lambda.size() + 1) / 2 + 1);
    const auto hooks = ctx.hooks_under_test(lambda);
    const bool ok = lambda.empty() || completion_character_check(hooks, lambda, order);
    t.expect(ok, [&] {
      return "lambda=" + lambda.to_string() + ": prod(1-q^h)^-1 * prod(1-q^i) differs from K through q^" +
             std::to_string(order) + " (hooks " + join(hooks) + ")";
    });
  }
  return t.result("characters", "completion-series-identity");
}

// ---- schur ----------------------------------------------------------------

CheckResult check_p1n_coefficients(const Context& ctx, Rng&) {
  Tally t;
  for (int n = 1; n <= std::min(ctx.bounds.max_n, ctx.bounds.schur_max_n); ++n) {
    const SchurExpansion e = expand_p1n(n);
    const auto parts = enumerate_partitions(n);
    t.expect(e.terms.size() == parts.size(), [&] { return "n=" + std::to_string(n) + ": wrong number of terms"; });
    for (const auto& lambda : parts) {
      const mpz_class m = e.coefficient(lambda), d = syt_count(lambda);
      t.expect(m == d, [&] { return "lambda=" + lambda.to_string() + ": m=" + m.get_str() + ", d=" + d.get_str(); });
    }
    t.expect(e.sum_of_squares() == factorial(n),
             [&] { return "n=" + std::to_string(n) + ": sum m^2 = " + e.sum_of_squares().get_str(); });
  }
  return t.result("schur", "p1n-coefficients-equal-syt-count-and-square-sum");
}

CheckResult check_p1n_wreath(const Context& ctx, Rng&) {
  Tally t;
  for (int N = 1; N <= std::min(ctx.bounds.max_N, ctx.bounds.wreath_schur_max_N); ++N)
    for (int n = 1; n <= std::min(ctx.bounds.max_n, ctx.bounds.wreath_schur_max_n); ++n) {
      const SchurExpansion e = expand_p1n_wreath(N, n);
      for (const auto& term : e.terms) {
        const mpz_class d = wreath_dimension(term.label);
        t.expect(term.multiplicity == d, [&] {
          return "Lambda=" + term.label.to_string() + ": m=" + term.multiplicity.get_str() + ", multinomial*prod d=" +
                 d.get_str();
        });
      }
      mpz_class order;
      mpz_ui_pow_ui(order.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(n));
      order *= factorial(n);
      t.expect(e.sum_of_squares() == order && e.terms.size() == enumerate_gamma_partitions(N, n).size(), [&] {
        return "N=" + std::to_string(N) + ", n=" + std::to_string(n) + ": sum m^2 = " + e.sum_of_squares().get_str();
      });
      // Relabeling the N slots by any permutation permutes the expansion.
      std::vector<int> perm(static_cast<std::size_t>(N));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool same = true;
        for (const auto& term : e.terms) same = same && e.coefficient(term.label.permuted(perm)) == term.multiplicity;
        t.expect(same, [&] { return "N=" + std::to_string(N) + ", n=" + std::to_string(n) + ": not slot-symmetric"; });
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  return t.result("schur", "wreath-p1n-multinomial-square-sum-and-slot-symmetry");
}

CheckResult check_multiplicity_identity(const Context& ctx, Rng&) {
  Tally t;
  for (int N = 1; N <= ctx.bounds.max_N; ++N)
    for (int n = 1; n <= std::min(ctx.bounds.max_n, ctx.bounds.wreath_max_n); ++n) {
      const auto bad = multiplicity_identity_violation(N, n);
      t.expect(!bad, [&] { return "N=" + std::to_string(N) + ", n=" + std::to_string(n) + ": fails at " + bad->to_string(); });
    }
  return t.result("schur", "wreath-multiplicity-identity");
}

// ---- cm -------------------------------------------------------------------

std::size_t random_size(Rng& rng, int max_n) {
  return std::uniform_int_distribution<std::size_t>(1, static_cast<std::size_t>(max_n))(rng);
}

CheckResult check_cm_rank_one(const Context& ctx, Rng& rng) {
  Tally t;
  std::uniform_int_distribution<int> c_num(1, 7), c_den(1, 5), sign(0, 1);
  for (int s = 0; s < ctx.bounds.cm_samples; ++s) {
    const auto p = random_regular_point(random_size(rng, ctx.bounds.cm_max_n), rng);
    const auto [X, Y] = wilson_representative(p);
    const int cn = c_num(rng);
    Rational c(sign(rng) ? cn : -cn, c_den(rng));
    c.canonicalize();
    const auto scaled = cstar_act(c, X, Y);
    const auto flipped = involution(X, Y);
    const bool base = verify_cm(X, Y).is_rank_one;
    const bool by_scaling = verify_cm(scaled.X, scaled.Y).is_rank_one;
    const bool by_involution = verify_cm(flipped.X, flipped.Y).is_rank_one;
    t.expect(base && by_scaling && by_involution, [&] {
      return "sample " + std::to_string(s) + " (n=" + std::to_string(p.size()) + "): base " + std::to_string(base) +
             ", scaled " + std::to_string(by_scaling) + ", involution " + std::to_string(by_involution);
    });
  }
  return t.result("cm", "wilson-representative-rank-one-preserved-by-scaling-and-involution");
}

CheckResult check_cm_projections(const Context& ctx, Rng& rng) {
  Tally t;
  for (int s = 0; s < ctx.bounds.cm_samples; ++s) {
    const auto p = random_regular_point(random_size(rng, ctx.bounds.cm_max_n), rng);
    const auto [X, Y] = wilson_representative(p);
    const auto [char_x, char_y] = projections(X, Y);
    Rational alpha_sum = 0;
    for (const auto& a : p.alpha()) alpha_sum += a;
    const auto n = static_cast<int>(p.size());
    const bool y_ok = char_y == RationalPoly::from_roots(p.y());
    const bool x_ok = char_x.is_monic() && char_x.degree() == n && char_x.coefficient(p.size() - 1) == -alpha_sum;
    t.expect(y_ok && x_ok, [&] {
      return "sample " + std::to_string(s) + ": charY=" + char_y.to_string() + ", charX=" + char_x.to_string();
    });
  }
  return t.result("cm", "projections-char-y-is-prod-z-minus-y");
}

CheckResult check_profile_roundtrip(const Context& ctx, Rng& rng) {
  Tally t;
  for (const auto& lambda : partitions_up_to(std::min(ctx.bounds.max_n, ctx.bounds.profile_max_n))) {
    const Partition fixed = schubert_profile(fixed_point_subspace(lambda));
    const Partition generic = schubert_profile(random_schubert_cell_point(lambda, rng));
    t.expect(fixed == lambda && generic == lambda, [&] {
      return "lambda=" + lambda.to_string() + ": fixed point profile " + fixed.to_string() + ", cell point profile " +
             generic.to_string();
    });
  }
  return t.result("cm", "schubert-profile-inverts-fixed-point-exponents");
}

CheckResult check_embedding_lines(const Context& ctx, Rng& rng) {
  Tally t;
  for (int s = 0; s < ctx.bounds.embed_samples; ++s) {
    const auto p = random_regular_point(random_size(rng, ctx.bounds.embed_max_n), rng);
    const auto e = wilson_embed(p);
    std::string why;
    if (e.subspace.rank() != p.size()) why = "subspace rank " + std::to_string(e.subspace.rank());
    if (e.ideal != RationalPoly::from_roots(p.y())) why = "ideal " + e.ideal.to_string();
    for (std::size_t i = 0; i < p.size() && why.empty(); ++i) {
      const auto line = component_line(e, p.y()[i]);
      if (!line || (*line)[0] != 1 || (*line)[1] != -p.alpha()[i])
        why = "component line at y=" + to_string(p.y()[i]) + " is not <1 - alpha (z - y)>";
    }
    t.expect(why.empty(), [&] { return "sample " + std::to_string(s) + ": " + why; });
  }
  return t.result("cm", "wilson-embedding-rank-and-component-lines");
}

CheckResult check_embedding_factorization(const Context& ctx, Rng& rng) {
  Tally t;
  const int half = std::max(1, ctx.bounds.embed_max_n / 2);
  for (int s = 0; s < ctx.bounds.embed_samples; ++s) {
    const auto a = random_regular_point(random_size(rng, half), rng);
    auto b = random_regular_point(random_size(rng, half), rng);
    // Shift b's support past a's so the two never collide.
    Rational top = *std::max_element(a.y().begin(), a.y().end());
    Rational bottom = *std::min_element(b.y().begin(), b.y().end());
    std::vector<Rational> shifted;
    for (const auto& y : b.y()) shifted.push_back(y - bottom + top + 1);
    b = CMPointRegular(shifted, b.alpha());

    const auto whole = wilson_embed(CMPointRegular::concatenate(a, b));
    const auto ea = wilson_embed(a), eb = wilson_embed(b);
    const bool ideal_ok = whole.ideal == ea.ideal * eb.ideal;
    const bool a_ok = restrict_to_factor(whole, ea.ideal) == ea.subspace.column_space();
    const bool b_ok = restrict_to_factor(whole, eb.ideal) == eb.subspace.column_space();
    bool lines_ok = true;
    for (const auto& y : a.y()) lines_ok = lines_ok && component_line(whole, y) == component_line(ea, y);
    for (const auto& y : b.y()) lines_ok = lines_ok && component_line(whole, y) == component_line(eb, y);
    t.expect(ideal_ok && a_ok && b_ok && lines_ok, [&] {
      return "sample " + std::to_string(s) + " (sizes " + std::to_string(a.size()) + "+" + std::to_string(b.size()) +
             "): ideal " + std::to_string(ideal_ok) + ", first block " + std::to_string(a_ok) + ", second block " +
             std::to_string(b_ok) + ", lines " + std::to_string(lines_ok);
    });
  }
  return t.result("cm", "wilson-embedding-block-factorizes-over-disjoint-supports");
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      check_partition_count,     check_hook_sum,          check_hook_conjugate,
      check_syt_enumeration,     check_syt_square_sum,    check_wreath_square_sum,
      check_exact_divide_roundtrip, check_substitute_inverse, check_eval_multiplicative,
      check_tangent_hooks,       check_kostka_shape,      check_kostka_at_one,
      check_kostka_maj,          check_kostka_conjugate,  check_wreath_factorization,
      check_character,           check_transversality,    check_completion,
      check_p1n_coefficients,    check_p1n_wreath,        check_multiplicity_identity,
      check_cm_rank_one,         check_cm_projections,    check_profile_roundtrip,
      check_embedding_lines,     check_embedding_factorization,
  };
  return checks;
}

}  // namespace

VerifyReport verify_all(const VerifyBounds& bounds) {
  if (bounds.max_n < 0 || bounds.max_N < 1 || bounds.threads < 1)
    throw std::invalid_argument("verify_all: bounds must be positive");
  const Context ctx{bounds};
  const auto& checks = all_checks();
  std::vector<CheckResult> results(checks.size());

  auto run = [&](std::size_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(bounds.seed), static_cast<std::uint32_t>(bounds.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    Rng rng(seq);
    try {
      results[i] = checks[i](ctx, rng);
    } catch (const std::exception& e) {
      results[i] = {"", "check #" + std::to_string(i), 0, false, std::string("exception: ") + e.what()};
    }
  };

  if (bounds.threads == 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < bounds.threads; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) run(i);
      });
    for (auto& th : pool) th.join();
  }
  return {std::move(results)};
}

}  // namespace kcm
