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

#include "kcm/json_io.hpp"

#include <charconv>

namespace kcm {

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
  LaurentPoly::Terms terms;
  for (const auto& [key, value] : j.items()) {
    int e = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), e);
    if (ec != std::errc{} || ptr != key.data() + key.size())
      throw std::invalid_argument("bad exponent key '" + key + "'");
    if (!value.is_string()) throw std::invalid_argument("coefficients must be decimal strings");
    mpz_class c;
    if (c.set_str(value.get<std::string>(), 10) != 0)
      throw std::invalid_argument("bad coefficient '" + value.get<std::string>() + "'");
    terms[e] += c;
  }
  return LaurentPoly(std::move(terms));
}

Json to_json(const CharacterReport& r) {
  return Json{{"lambda", r.lambda},
              {"kostka", to_json(r.kostka)},
              {"character", to_json(r.character)},
              {"dimension", r.dimension.get_str()}};
}

Json to_json(const SchurExpansion& e) {
  Json out = Json::array();
  for (const auto& t : e.terms) {
    const std::string label = e.N == 1 ? t.label[0].to_string() : t.label.to_string();
    out.push_back(Json{{"lambda", label}, {"m", t.multiplicity.get_str()}});
  }
  return out;
}

Json to_json(const Rational& r) { return r.get_str(); }

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RationalPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

namespace {

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rationals must be strings");
  return parse_rational(j.get<std::string>());
}

}  // namespace

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw DimensionMismatch("ragged matrix JSON");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

RationalPoly rational_poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be a coefficient array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return RationalPoly(std::move(coeffs));
}

Json to_json(const CMVerification& v) {
  Json out{{"M", to_json(v.commutator_plus_identity)},
           {"rank", v.rank},
           {"rank_one", v.is_rank_one}};
  if (v.witness) {
    Json column = Json::array(), row = Json::array();
    for (const auto& x : v.witness->first) column.push_back(x.get_str());
    for (const auto& x : v.witness->second) row.push_back(x.get_str());
    out["witness"] = Json{{"column", column}, {"row", row}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const EmbeddedPoint& e, const std::vector<Rational>& y) {
  Json basis = Json::array();
  for (const auto& w : e.basis()) basis.push_back(to_json(w));
  Json lines = Json::array();
  for (const auto& point : y) {
    const auto line = component_line(e, point);
    Json entry{{"y", point.get_str()}};
    if (line) entry["line"] = Json::array({(*line)[0].get_str(), (*line)[1].get_str()});
    else entry["line"] = nullptr;
    lines.push_back(std::move(entry));
  }
  return Json{{"ideal", to_json(e.ideal)}, {"basis", basis}, {"component_lines", lines}};
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry{{"module", c.module}, {"name", c.name}, {"items", c.items}, {"passed", c.passed}};
    if (!c.passed) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return Json{{"passed", r.all_passed()}, {"total_items", r.total_items()}, {"checks", checks}};
}

}  // namespace kcm
