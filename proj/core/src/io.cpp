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

#include "quasik/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "quasik/errors.hpp"

namespace quasik {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw InputError("field " + path + ": " + what);
}

bool is_decimal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

const Json& require(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(key, "missing");
  return *it;
}

std::size_t parse_size(const Json& value, const std::string& path) {
  if (!value.is_number_integer() || value.get<long long>() < 0)
    schema_error(path, "expected a non-negative integer");
  return value.get<std::size_t>();
}

const Json& require_array(const Json& value, const std::string& path) {
  if (!value.is_array()) schema_error(path, "expected an array");
  return value;
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::vector<Integer> parse_integer_array(const Json& value, const std::string& path) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < require_array(value, path).size(); ++i)
    out.push_back(parse_integer(value[i], index_path(path, i)));
  return out;
}

std::vector<Rational> parse_rational_array(const Json& value, const std::string& path) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < require_array(value, path).size(); ++i)
    out.push_back(parse_rational(value[i], index_path(path, i)));
  return out;
}

}  // namespace

Integer parse_integer(const Json& value, const std::string& path) {
  if (value.is_number_unsigned()) return Integer(value.get<unsigned long long>());
  if (value.is_number_integer()) return Integer(value.get<long long>());
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (is_decimal(s)) return Integer(s);
  }
  schema_error(path, "expected an integer");
}

Rational parse_rational(const Json& value, const std::string& path) {
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
      if (is_decimal(s)) return Rational(Integer(s));
    } else {
      const std::string num = s.substr(0, slash);
      const std::string den = s.substr(slash + 1);
      if (is_decimal(num) && is_decimal(den) && den.front() != '-') {
        Integer d(den);
        if (d == 0) schema_error(path, "zero denominator");
        return Rational(Integer(num), d);
      }
    }
    schema_error(path, "expected an integer or a \"p/q\" string");
  }
  return Rational(parse_integer(value, path));
}

Json integer_to_json(const Integer& value) {
  static const Integer limit = Integer(1) << 53;
  if (abs(value) < limit) return Json(value.convert_to<long long>());
  return Json(value.str());
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

InputDocument parse_input(std::string_view text) {
  const Json root = parse_json_text(text);
  if (!root.is_object()) throw InputError("field <root>: expected an object");

  InputDocument doc;
  if (auto it = root.find("name"); it != root.end()) {
    if (!it->is_string()) schema_error("name", "expected a string");
    doc.name = it->get<std::string>();
  }
  doc.polytope.dim = parse_size(require(root, "dim"), "dim");
  doc.polytope.facet_count = parse_size(require(root, "facets"), "facets");

  const Json& vertices = require_array(require(root, "vertices"), "vertices");
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const std::string path = index_path("vertices", v);
    std::vector<int> ids;
    for (std::size_t k = 0; k < require_array(vertices[v], path).size(); ++k) {
      const Json& f = vertices[v][k];
      if (!f.is_number_integer()) schema_error(index_path(path, k), "expected a facet index");
      ids.push_back(f.get<int>());
    }
    if (FacetSet(ids).size() != ids.size()) schema_error(path, "repeated facet index");
    doc.polytope.vertices.emplace_back(std::move(ids));
  }

  doc.lambda.dim = doc.polytope.dim;
  const Json& lambda = require_array(require(root, "lambda"), "lambda");
  for (std::size_t i = 0; i < lambda.size(); ++i)
    doc.lambda.rows.emplace_back(parse_integer_array(lambda[i], index_path("lambda", i)));

  if (auto it = root.find("vertex_order"); it != root.end()) {
    std::vector<std::size_t> seq;
    for (std::size_t k = 0; k < require_array(*it, "vertex_order").size(); ++k) {
      const std::string path = index_path("vertex_order", k);
      const std::size_t v = parse_size((*it)[k], path);
      if (v < 1 || v > doc.polytope.vertices.size()) schema_error(path, "vertex index out of range");
      seq.push_back(v - 1);
    }
    auto sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != doc.polytope.vertices.size() ||
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      schema_error("vertex_order", "expected a permutation of 1.." +
                                       std::to_string(doc.polytope.vertices.size()));
    doc.vertex_order = std::move(seq);
  }

  const bool has_coords = root.contains("vertex_coords");
  const bool has_height = root.contains("height_vector");
  if (has_coords != has_height)
    schema_error(has_coords ? "height_vector" : "vertex_coords",
                 "vertex_coords and height_vector must be given together");
  if (has_coords) {
    std::vector<std::vector<Rational>> coords;
    const Json& c = require_array(root["vertex_coords"], "vertex_coords");
    if (c.size() != doc.polytope.vertices.size())
      schema_error("vertex_coords", "expected one point per vertex");
    for (std::size_t v = 0; v < c.size(); ++v) {
      coords.push_back(parse_rational_array(c[v], index_path("vertex_coords", v)));
      if (coords.back().size() != doc.polytope.dim)
        schema_error(index_path("vertex_coords", v), "expected " + std::to_string(doc.polytope.dim) +
                                                         " coordinates");
    }
    auto w = parse_rational_array(root["height_vector"], "height_vector");
    if (w.size() != doc.polytope.dim)
      schema_error("height_vector", "expected " + std::to_string(doc.polytope.dim) + " entries");
    doc.vertex_coords = std::move(coords);
    doc.height_vector = std::move(w);
  }
  if (doc.vertex_order && doc.height_vector)
    schema_error("vertex_order", "give either vertex_order or vertex_coords + height_vector, not both");

  if (auto it = root.find("use_bott"); it != root.end()) {
    if (!it->is_boolean()) schema_error("use_bott", "expected a boolean");
    doc.use_bott = it->get<bool>();
  }
  return doc;
}

InputDocument load_input(const std::filesystem::path& path) { return parse_input(read_file(path)); }

VertexOrder resolve_order(const InputDocument& doc, bool validate) {
  if (doc.vertex_order)
    return validate ? validate_order(doc.polytope, *doc.vertex_order)
                    : order_from_sequence(doc.polytope, *doc.vertex_order);
  if (doc.height_vector) return vertex_order_from_heights(doc.polytope, *doc.vertex_coords, *doc.height_vector);
  throw InputError("the input has neither vertex_order nor vertex_coords + height_vector");
}

Json to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& [exps, c] : f.terms()) {
    Json e = Json::array();
    for (const auto& x : exps) e.push_back(integer_to_json(x));
    terms.push_back(Json{{"coeff", integer_to_json(c)}, {"exps", std::move(e)}});
  }
  return terms;
}

LaurentPoly poly_from_json(const Json& value, Profile profile, const std::string& path) {
  LaurentPoly f(profile);
  if (value.is_number() || value.is_string()) return LaurentPoly::constant(profile, parse_integer(value, path));
  for (std::size_t k = 0; k < require_array(value, path).size(); ++k) {
    const std::string tp = index_path(path, k);
    const Json& term = value[k];
    if (!term.is_object()) schema_error(tp, "expected {\"coeff\", \"exps\"}");
    auto c = term.find("coeff");
    auto e = term.find("exps");
    if (c == term.end()) schema_error(tp + ".coeff", "missing");
    if (e == term.end()) schema_error(tp + ".exps", "missing");
    Exponent exps = parse_integer_array(*e, tp + ".exps");
    if (exps.size() != profile.var_count())
      schema_error(tp + ".exps", "expected " + std::to_string(profile.var_count()) + " exponents");
    f.add_term(exps, parse_integer(*c, tp + ".coeff"));
  }
  return f;
}

Json to_json(const FixedPointTuple& tuple) {
  Json out = Json::array();
  for (const auto& e : tuple.entries()) out.push_back(to_json(e));
  return out;
}

FixedPointTuple tuple_from_json(const Json& value, Profile profile, std::size_t vertices) {
  const Json* entries = &value;
  std::string path = "tuple";
  if (value.is_object()) {
    auto it = value.find("entries");
    if (it == value.end()) schema_error("entries", "missing");
    entries = &*it;
    path = "entries";
  }
  require_array(*entries, path);
  if (entries->size() != vertices)
    schema_error(path, "expected " + std::to_string(vertices) + " entries, one per vertex, got " +
                           std::to_string(entries->size()));
  std::vector<LaurentPoly> out;
  for (std::size_t v = 0; v < entries->size(); ++v)
    out.push_back(poly_from_json((*entries)[v], profile, index_path(path, v)));
  if (out.empty()) return FixedPointTuple{};
  return FixedPointTuple(std::move(out));
}

FixedPointTuple load_tuple(const std::filesystem::path& path, Profile profile, std::size_t vertices) {
  return tuple_from_json(parse_json_text(read_file(path)), profile, vertices);
}

}  // namespace quasik
