// Copyright 2026 The quasik Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON input documents, Laurent polynomials and fixed-point tuples.
//
// Polynomials are lists of {"coeff": c, "exps": [e_1, ...]} terms; large
// coefficients may be given as decimal strings. Tuples are arrays with one
// term list per vertex, in input vertex order.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "quasik/gkm.hpp"
#include "quasik/laurent.hpp"
#include "quasik/polytope.hpp"

namespace quasik {

using Json = nlohmann::ordered_json;

struct InputDocument {
  std::string name;
  SimplePolytope polytope;
  CharacteristicMatrix lambda;
  std::optional<std::vector<std::size_t>> vertex_order;  // 0-based
  std::optional<std::vector<std::vector<Rational>>> vertex_coords;
  std::optional<std::vector<Rational>> height_vector;
  bool use_bott = false;

  bool has_order() const { return vertex_order.has_value() || height_vector.has_value(); }
};

/// Throws InputError with "line L, column C" for syntax errors and the field
/// path (for example "vertices[2][0]") for schema errors.
InputDocument parse_input(std::string_view text);
InputDocument load_input(const std::filesystem::path& path);

/// The order given by the document. With `validate` the order must pass
/// validate_order (InvalidOrder); without it a vertex_order is taken as is.
/// Throws InputError when the document carries no order.
VertexOrder resolve_order(const InputDocument& doc, bool validate = true);

Rational parse_rational(const Json& value, const std::string& path);
Integer parse_integer(const Json& value, const std::string& path);
/// Integers that fit in 53 bits stay numbers, larger ones become strings.
Json integer_to_json(const Integer& value);

Json to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const Json& value, Profile profile, const std::string& path = "poly");

Json to_json(const FixedPointTuple& tuple);
/// Accepts a bare array or {"entries": [...]}.
FixedPointTuple tuple_from_json(const Json& value, Profile profile, std::size_t vertices);
FixedPointTuple load_tuple(const std::filesystem::path& path, Profile profile, std::size_t vertices);

/// Throws InputError with a line and column for syntax errors.
Json parse_json_text(std::string_view text);
std::string read_file(const std::filesystem::path& path);

}  // namespace quasik
