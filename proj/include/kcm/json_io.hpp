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

// JSON renderings used by the CLI and the Python module. Every integer that
// can outgrow 64 bits (coefficients, dimensions, multiplicities) is a
// decimal string; rationals are "p/q" strings.

#include <json.hpp>

#include "kcm/calogero_moser.hpp"
#include "kcm/characters.hpp"
#include "kcm/laurent_poly.hpp"
#include "kcm/schur.hpp"
#include "kcm/verify.hpp"

namespace kcm {

using Json = nlohmann::ordered_json;

/// {"<exponent>": "<coefficient>"}, increasing exponents.
Json to_json(const LaurentPoly& p);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
LaurentPoly laurent_from_json(const Json& j);

/// {"lambda", "kostka", "character", "dimension"}
Json to_json(const CharacterReport& r);

/// [{"lambda", "m"}, ...]; labels of an ordinary expansion use the
/// partition grammar, wreath labels the gamma-partition grammar.
Json to_json(const SchurExpansion& e);

Json to_json(const Rational& r);
/// Row-major array of rows of rational strings.
Json to_json(const RationalMatrix& m);
/// Coefficient array, low to high.
Json to_json(const RationalPoly& p);
RationalMatrix matrix_from_json(const Json& j);
RationalPoly rational_poly_from_json(const Json& j);

Json to_json(const CMVerification& v);
/// {"ideal": [...], "basis": [[...], ...], "component_lines": [...]}, each
/// basis element a polynomial of degree < 2n; `y` gives the points at which
/// to report component lines.
Json to_json(const EmbeddedPoint& e, const std::vector<Rational>& y);

Json to_json(const VerifyReport& r);

}  // namespace kcm
