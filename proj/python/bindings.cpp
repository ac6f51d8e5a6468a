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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "kcm/calogero_moser.hpp"
#include "kcm/characters.hpp"
#include "kcm/schur.hpp"
#include "kcm/verify.hpp"

namespace py = pybind11;
using namespace kcm;

namespace {

py::int_ to_py(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(r.get_num()), to_py(r.get_den()));
}

py::dict to_py(const LaurentPoly& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
  return d;
}

py::list to_py(const RationalPoly& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_py(c));
  return out;
}

py::list to_py(const RationalMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(to_py(m(r, c)));
    rows.append(row);
  }
  return rows;
}

// A partition is given either in the text grammar ("3,1,1") or as a list of parts.
Partition partition_arg(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return Partition::parse(obj.cast<std::string>());
  return Partition(obj.cast<std::vector<int>>());
}

GammaPartition gamma_arg(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return GammaPartition::parse(obj.cast<std::string>());
  std::vector<Partition> components;
  for (const auto& c : obj) components.push_back(partition_arg(py::reinterpret_borrow<py::object>(c)));
  return GammaPartition(std::move(components));
}

// Accepts int, str ("p/q") or fractions.Fraction.
std::vector<Rational> rationals_arg(const py::iterable& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(parse_rational(py::str(v).cast<std::string>()));
  return out;
}

py::dict report_to_py(const CharacterReport& r) {
  py::dict d;
  d["lambda"] = r.lambda;
  d["kostka"] = to_py(r.kostka);
  d["character"] = to_py(r.character);
  d["dimension"] = to_py(r.dimension);
  return d;
}

}  // namespace

PYBIND11_MODULE(_kcm, m) {
  m.doc() = "Kostka polynomials, zero-fiber characters and exact Calogero-Moser checks";

  m.def("enumerate_partitions", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(p.parts());
    return out;
  }, py::arg("n"));
  m.def("hook_lengths", [](const py::object& lambda) { return hook_lengths(partition_arg(lambda)); }, py::arg("partition"));
  m.def("syt_count", [](const py::object& lambda) { return to_py(syt_count(partition_arg(lambda))); }, py::arg("partition"));

  m.def("kostka", [](const py::object& lambda) { return to_py(kostka(partition_arg(lambda))); }, py::arg("partition"),
        "Kostka polynomial as {exponent: coefficient}.");
  m.def("kostka_wreath", [](const py::object& Lambda) { return to_py(kostka_wreath(gamma_arg(Lambda))); },
        py::arg("gamma_partition"));
  m.def("character", [](const py::object& lambda) { return report_to_py(character(partition_arg(lambda))); },
        py::arg("partition"));
  m.def("character_wreath", [](const py::object& Lambda) { return report_to_py(character(gamma_arg(Lambda))); },
        py::arg("gamma_partition"));
  m.def("tangent_weights", [](const py::object& lambda) { return tangent_weights(partition_arg(lambda)); },
        py::arg("partition"));
  m.def("fixed_point_exponents", [](const py::object& lambda) { return fixed_point_exponents(partition_arg(lambda)); },
        py::arg("partition"));

  m.def("schur_p1n", [](int n, int N) {
    const SchurExpansion e = N == 1 ? expand_p1n(n) : expand_p1n_wreath(N, n);
    py::list out;
    for (const auto& t : e.terms)
      out.append(py::make_tuple(N == 1 ? t.label[0].to_string() : t.label.to_string(), to_py(t.multiplicity)));
    return out;
  }, py::arg("n"), py::arg("N") = 1, "Schur expansion of p_1^n as [(label, multiplicity)].");

  m.def("verify_cm", [](const py::iterable& y, const py::iterable& alpha) {
    const CMPointRegular p(rationals_arg(y), rationals_arg(alpha));
    const auto [X, Y] = wilson_representative(p);
    const auto v = verify_cm(X, Y);
    const auto [char_x, char_y] = projections(X, Y);
    py::dict d;
    d["X"] = to_py(X);
    d["Y"] = to_py(Y);
    d["M"] = to_py(v.commutator_plus_identity);
    d["rank"] = v.rank;
    d["rank_one"] = v.is_rank_one;
    d["charX"] = to_py(char_x);
    d["charY"] = to_py(char_y);
    return d;
  }, py::arg("y"), py::arg("alpha"), "Wilson representative of (y, alpha) and its rank-one check.");

  m.def("wilson_embed", [](const py::iterable& y, const py::iterable& alpha) {
    const CMPointRegular p(rationals_arg(y), rationals_arg(alpha));
    const auto e = wilson_embed(p);
    py::list basis;
    for (const auto& w : e.basis()) basis.append(to_py(w));
    py::dict d;
    d["ideal"] = to_py(e.ideal);
    d["basis"] = basis;
    return d;
  }, py::arg("y"), py::arg("alpha"), "(I, W) with polynomials as coefficient lists, low to high.");

  m.def("verify_all", [](int max_n, int max_N, std::uint64_t seed, int cm_samples, int threads, bool inject_hook_corruption) {
    VerifyBounds b;
    b.max_n = max_n;
    b.max_N = max_N;
    b.seed = seed;
    b.cm_samples = cm_samples;
    b.embed_samples = std::min(cm_samples, b.embed_samples);
    b.threads = threads;
    b.inject_hook_corruption = inject_hook_corruption;
    VerifyReport report;
    {
      py::gil_scoped_release release;
      report = verify_all(b);
    }
    py::list checks;
    for (const auto& c : report.checks) {
      py::dict d;
      d["module"] = c.module;
      d["name"] = c.name;
      d["items"] = c.items;
      d["passed"] = c.passed;
      d["detail"] = c.detail;
      checks.append(d);
    }
    py::dict out;
    out["passed"] = report.all_passed();
    out["total_items"] = report.total_items();
    out["checks"] = checks;
    return out;
  }, py::arg("max_n") = 10, py::arg("max_N") = 4, py::arg("seed") = 1, py::arg("cm_samples") = 200,
     py::arg("threads") = 1, py::arg("inject_hook_corruption") = false);
}
