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

// kcm: command-line front end.
//
// Exit status: 0 on success, 1 when an identity is falsified, 2 on usage or
// parse errors.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "kcm/calogero_moser.hpp"
#include "kcm/characters.hpp"
#include "kcm/json_io.hpp"
#include "kcm/schur.hpp"
#include "kcm/verify.hpp"

using namespace kcm;

namespace {

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kUsage = 2;

// Enumeration cutoffs for the commands that list whole families.
constexpr int kMaxSchurN = 30;
constexpr int kMaxWreathN = 10;
constexpr int kMaxWreathOrder = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string partition;
  std::string gamma_partition;
  int n = -1;
  int N = -1;
  bool json = false;
  std::string y;
  std::string alpha;
  std::uint64_t seed = 1;
  int samples = -1;
  int cm_n = -1;
  int threads = 1;
  bool inject_hook_corruption = false;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

// Exactly one of --partition / --gamma-partition.
std::variant<Partition, GammaPartition> shape_argument(const Options& o) {
  const bool has_p = !o.partition.empty(), has_g = !o.gamma_partition.empty();
  if (has_p == has_g) throw UsageError("give exactly one of --partition or --gamma-partition");
  if (has_p) return Partition::parse(o.partition);
  return GammaPartition::parse(o.gamma_partition);
}

void require_range(const char* flag, int value, int lo, int hi) {
  if (value < lo || value > hi)
    throw UsageError(std::string(flag) + " = " + std::to_string(value) + " is outside the supported range [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

int cmd_kostka(const Options& o) {
  const auto shape = shape_argument(o);
  std::string label;
  LaurentPoly K;
  if (const auto* p = std::get_if<Partition>(&shape)) {
    label = p->to_string();
    K = kostka(*p);
  } else {
    const auto& L = std::get<GammaPartition>(shape);
    label = L.to_string();
    K = kostka_wreath(L);
    const LaurentPoly F = kostka_wreath_factorized(L);
    if (K != F) {
      std::cerr << "falsified: Lambda=" << label << ": hook quotient " << K.to_string()
                << " != q-multinomial product " << F.to_string() << "\n";
      return kFalsified;
    }
  }
  if (o.json) emit(Json{{"lambda", label}, {"kostka", to_json(K)}});
  else std::cout << "K[" << label << "] = " << K.to_string() << "\n";
  return kOk;
}

int cmd_character(const Options& o) {
  const auto shape = shape_argument(o);
  CharacterReport r;
  if (const auto* p = std::get_if<Partition>(&shape)) r = character(*p);
  else r = character(std::get<GammaPartition>(shape));

  if (o.json) emit(to_json(r));
  else
    std::cout << "lambda:    " << r.lambda << "\n"
              << "kostka:    " << r.kostka.to_string() << "\n"
              << "character: " << r.character.to_string() << "\n"
              << "dimension: " << r.dimension.get_str() << "\n";

  const mpz_class at_one = evaluate_at_one(r.character), d2 = r.dimension * r.dimension;
  if (at_one != d2 || !r.character.is_palindromic()) {
    std::cerr << "falsified: lambda=" << r.lambda << ": ch(1) = " << at_one.get_str() << ", d^2 = " << d2.get_str()
              << (r.character.is_palindromic() ? "" : ", character not palindromic") << "\n";
    return kFalsified;
  }
  return kOk;
}

int cmd_tangent(const Options& o) {
  if (o.partition.empty() || !o.gamma_partition.empty()) throw UsageError("tangent takes --partition");
  const Partition lambda = Partition::parse(o.partition);
  const auto weights = tangent_weights(lambda);
  auto hooks = hook_lengths(lambda);
  std::vector<int> negated;
  for (int h : hooks) negated.push_back(-h);
  std::sort(negated.begin(), negated.end());
  const bool match = negated == weights;

  if (o.json) {
    emit(Json{{"lambda", lambda.to_string()},
              {"fixed_point_exponents", fixed_point_exponents(lambda)},
              {"weights", weights},
              {"hooks", hooks},
              {"match", match}});
  } else {
    std::cout << "lambda:    " << lambda.to_string() << "\n"
              << "exponents: " << join(fixed_point_exponents(lambda)) << "\n"
              << "weights:   " << join(weights) << "\n"
              << "hooks:     " << join(hooks) << "\n";
  }
  if (!match) {
    std::cerr << "falsified: lambda=" << lambda.to_string() << ": weights {" << join(weights, ", ")
              << "} != negated hooks {" << join(negated, ", ") << "}\n";
    return kFalsified;
  }
  return kOk;
}

int cmd_schur(const Options& o) {
  if (o.n < 0) throw UsageError("schur-p1n needs --n");
  require_range("--n", o.n, 1, kMaxSchurN);
  const int N = o.N < 0 ? 1 : o.N;
  require_range("--N", N, 1, kMaxWreathOrder);
  const SchurExpansion e = N == 1 ? expand_p1n(o.n) : expand_p1n_wreath(N, o.n);

  if (o.json) {
    emit(to_json(e));
  } else {
    for (const auto& t : e.terms)
      std::cout << t.multiplicity.get_str() << " s[" << (N == 1 ? t.label[0].to_string() : t.label.to_string())
                << "]\n";
  }

  mpz_class order;
  mpz_ui_pow_ui(order.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(o.n));
  order *= factorial(o.n);
  for (const auto& t : e.terms) {
    const mpz_class d = wreath_dimension(t.label);
    if (t.multiplicity != d) {
      std::cerr << "falsified: lambda=" << t.label.to_string() << ": m = " << t.multiplicity.get_str()
                << ", d = " << d.get_str() << "\n";
      return kFalsified;
    }
  }
  if (e.sum_of_squares() != order) {
    std::cerr << "falsified: sum m^2 = " << e.sum_of_squares().get_str() << ", group order " << order.get_str()
              << "\n";
    return kFalsified;
  }
  return kOk;
}

int cmd_wreath(const Options& o) {
  if (o.n < 0 || o.N < 0) throw UsageError("wreath needs --N and --n");
  require_range("--N", o.N, 1, kMaxWreathOrder);
  require_range("--n", o.n, 0, kMaxWreathN);

  Json entries = Json::array();
  mpz_class square_sum = 0;
  std::optional<std::string> failure;
  for (const auto& L : enumerate_gamma_partitions(o.N, o.n)) {
    const mpz_class d = wreath_dimension(L);
    const LaurentPoly K = kostka_wreath(L);
    const mpz_class k1 = evaluate_at_one(K);
    if (!failure && k1 != d)
      failure = "Lambda=" + L.to_string() + ": K(1) = " + k1.get_str() + ", d = " + d.get_str();
    square_sum += d * d;
    if (o.json) entries.push_back(Json{{"lambda", L.to_string()}, {"dimension", d.get_str()}, {"kostka", to_json(K)}});
    else std::cout << L.to_string() << "\td=" << d.get_str() << "\tK=" << K.to_string() << "\n";
  }
  if (const auto bad = multiplicity_identity_violation(o.N, o.n); bad && !failure)
    failure = "Lambda=" + bad->to_string() + ": n!/prod h, multinomial product and K(1) disagree";

  mpz_class order;
  mpz_ui_pow_ui(order.get_mpz_t(), static_cast<unsigned long>(o.N), static_cast<unsigned long>(o.n));
  order *= factorial(o.n);
  if (!failure && square_sum != order)
    failure = "sum d^2 = " + square_sum.get_str() + ", group order " + order.get_str();

  if (o.json)
    emit(Json{{"N", o.N},
              {"n", o.n},
              {"entries", entries},
              {"sum_of_squares", square_sum.get_str()},
              {"group_order", order.get_str()},
              {"passed", !failure}});
  else
    std::cout << "sum d^2 = " << square_sum.get_str() << ", N^n n! = " << order.get_str() << "\n";

  if (failure) {
    std::cerr << "falsified: " << *failure << "\n";
    return kFalsified;
  }
  return kOk;
}

CMPointRegular point_argument(const Options& o) {
  if (o.y.empty() || o.alpha.empty()) throw UsageError("cm commands need --y and --alpha");
  return CMPointRegular(parse_rational_list(o.y), parse_rational_list(o.alpha));
}

void print_matrix(const char* name, const RationalMatrix& m) {
  std::cout << name << " =\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::cout << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) std::cout << (c ? ", " : "") << m(r, c).get_str();
    std::cout << "]\n";
  }
}

int cmd_cm_verify(const Options& o) {
  const auto p = point_argument(o);
  const auto [X, Y] = wilson_representative(p);
  const auto v = verify_cm(X, Y);
  const auto [char_x, char_y] = projections(X, Y);
  if (o.json) {
    Json j{{"X", to_json(X)}, {"Y", to_json(Y)}};
    const Json report = to_json(v);
    for (const auto& [k, val] : report.items()) j[k] = val;
    j["charX"] = to_json(char_x);
    j["charY"] = to_json(char_y);
    emit(j);
  } else {
    print_matrix("X", X);
    print_matrix("Y", Y);
    print_matrix("XY - YX + Id", v.commutator_plus_identity);
    std::cout << "rank: " << v.rank << "\n"
              << "rank one: " << (v.is_rank_one ? "yes" : "no") << "\n"
              << "char X: " << char_x.to_string() << "\n"
              << "char Y: " << char_y.to_string() << "\n";
  }
  if (!v.is_rank_one) {
    std::cerr << "falsified: rank(XY - YX + Id) = " << v.rank << ", expected 1\n";
    return kFalsified;
  }
  return kOk;
}

int cmd_cm_embed(const Options& o) {
  const auto p = point_argument(o);
  const auto e = wilson_embed(p);
  if (o.json) {
    emit(to_json(e, p.y()));
  } else {
    std::cout << "I = " << e.ideal.to_string() << "\n";
    const auto basis = e.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) std::cout << "w" << i + 1 << " = " << basis[i].to_string() << "\n";
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto line = component_line(e, p.y()[i]);
    if (!line || (*line)[0] != 1 || (*line)[1] != -p.alpha()[i]) {
      std::cerr << "falsified: component line at y=" << p.y()[i].get_str() << " is not <1 - alpha (z - y)>\n";
      return kFalsified;
    }
  }
  return kOk;
}

int cmd_verify_all(const Options& o) {
  VerifyBounds b;
  if (o.n >= 0) {
    require_range("--n", o.n, 0, 14);
    b.max_n = o.n;
  }
  if (o.N >= 0) {
    require_range("--N", o.N, 1, kMaxWreathOrder);
    b.max_N = o.N;
  }
  if (o.samples >= 0) {
    require_range("--samples", o.samples, 0, 100000);
    b.cm_samples = o.samples;
    b.embed_samples = std::min(o.samples, b.embed_samples);
    b.poly_samples = o.samples;
  }
  if (o.cm_n >= 0) {
    require_range("--cm-n", o.cm_n, 1, 40);
    b.cm_max_n = o.cm_n;
    b.embed_max_n = std::min(o.cm_n, b.embed_max_n);
  }
  require_range("--threads", o.threads, 1, 256);
  b.seed = o.seed;
  b.threads = o.threads;
  b.inject_hook_corruption = o.inject_hook_corruption;

  const VerifyReport report = verify_all(b);
  if (o.json) {
    emit(to_json(report));
  } else {
    for (const auto& c : report.checks) {
      std::cout << (c.passed ? "ok   " : "FAIL ") << c.module << "/" << c.name << " (" << c.items << ")\n";
      if (!c.passed) std::cout << "     " << c.detail << "\n";
    }
    std::cout << (report.all_passed() ? "all checks passed" : "some checks failed") << ", " << report.total_items()
              << " items\n";
  }
  return report.all_passed() ? kOk : kFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kostka polynomials, zero-fiber characters and exact Calogero-Moser checks"};
  app.require_subcommand(1);
  Options o;

  auto shape_flags = [&](CLI::App* sub) {
    sub->add_option("--partition", o.partition, "partition, e.g. 3,1,1");
    sub->add_option("--gamma-partition", o.gamma_partition, "tuple of partitions, e.g. 2,1;-;1");
  };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "JSON output"); };
  auto point_flags = [&](CLI::App* sub) {
    sub->add_option("--y", o.y, "distinct eigenvalues of Y, e.g. 0,1,2")->required();
    sub->add_option("--alpha", o.alpha, "diagonal of X, e.g. 1/2,0,3")->required();
    json_flag(sub);
  };

  auto* kostka_cmd = app.add_subcommand("kostka", "Kostka polynomial K(q)");
  shape_flags(kostka_cmd);
  json_flag(kostka_cmd);

  auto* character_cmd = app.add_subcommand("character", "character K(q) K(1/q) and dimension");
  shape_flags(character_cmd);
  json_flag(character_cmd);

  auto* tangent_cmd = app.add_subcommand("tangent", "tangent weights at a fixed point against hook lengths");
  tangent_cmd->add_option("--partition", o.partition, "partition, e.g. 3,1,1")->required();
  json_flag(tangent_cmd);

  auto* schur_cmd = app.add_subcommand("schur-p1n", "Schur expansion of p_1^n");
  schur_cmd->add_option("--n", o.n, "degree")->required();
  schur_cmd->add_option("--N", o.N, "number of colours (wreath case)");
  json_flag(schur_cmd);

  auto* wreath_cmd = app.add_subcommand("wreath", "dimensions and Kostka polynomials of all N-tuples of size n");
  wreath_cmd->add_option("--N", o.N, "number of components")->required();
  wreath_cmd->add_option("--n", o.n, "total size")->required();
  json_flag(wreath_cmd);

  auto* cm_cmd = app.add_subcommand("cm", "exact Calogero-Moser matrices");
  cm_cmd->require_subcommand(1);
  auto* cm_verify_cmd = cm_cmd->add_subcommand("verify", "rank-one check for the Wilson representative");
  auto* cm_embed_cmd = cm_cmd->add_subcommand("embed", "Wilson embedding (I, W)");
  auto* cm_verify_alias = app.add_subcommand("cm-verify", "same as 'cm verify'");
  auto* cm_embed_alias = app.add_subcommand("cm-embed", "same as 'cm embed'");
  for (auto* sub : {cm_verify_cmd, cm_embed_cmd, cm_verify_alias, cm_embed_alias}) point_flags(sub);

  auto* verify_cmd = app.add_subcommand("verify-all", "run every invariant within bounds");
  verify_cmd->add_option("--n", o.n, "partition size bound");
  verify_cmd->add_option("--N", o.N, "wreath order bound");
  verify_cmd->add_option("--seed", o.seed, "seed for randomized checks");
  verify_cmd->add_option("--samples", o.samples, "random samples per matrix check");
  verify_cmd->add_option("--cm-n", o.cm_n, "matrix size bound for random points");
  verify_cmd->add_option("--threads", o.threads, "worker threads");
  verify_cmd->add_flag("--inject-hook-corruption", o.inject_hook_corruption, "test hook: perturb hook lengths");
  json_flag(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (kostka_cmd->parsed()) return cmd_kostka(o);
    if (character_cmd->parsed()) return cmd_character(o);
    if (tangent_cmd->parsed()) return cmd_tangent(o);
    if (schur_cmd->parsed()) return cmd_schur(o);
    if (wreath_cmd->parsed()) return cmd_wreath(o);
    if (cm_verify_cmd->parsed() || cm_verify_alias->parsed()) return cmd_cm_verify(o);
    if (cm_embed_cmd->parsed() || cm_embed_alias->parsed()) return cmd_cm_embed(o);
    if (verify_cmd->parsed()) return cmd_verify_all(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // DimensionMismatch and DuplicateEigenvalue land here: bad input, not bad maths.
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "falsified: " << e.what() << "\n";
    return kFalsified;
  }
  return kUsage;
}
