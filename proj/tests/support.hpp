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

#include <string>
#include <utility>
#include <vector>

#include "quasik/facering.hpp"
#include "quasik/io.hpp"

namespace quasik::testing {

inline std::string data_path(const std::string& name) { return std::string(QUASIK_DATA_DIR) + "/" + name; }

inline InputDocument load(const std::string& name) { return load_input(data_path(name + ".json")); }

inline FaceRing ring(const std::string& name) {
  auto doc = load(name);
  return FaceRing(doc.polytope, doc.lambda, doc.use_bott);
}

inline const std::vector<std::string>& bundled() {
  static const std::vector<std::string> names = {"cp1",       "cp2",       "cp3",       "square_h0",
                                                 "square_h1", "square_h2", "square_h3", "cube"};
  return names;
}

using Term = std::pair<long, std::vector<long>>;

inline LaurentPoly poly(Profile profile, const std::vector<Term>& terms) {
  LaurentPoly f(profile);
  for (const auto& [c, e] : terms) f.add_term(Exponent(e.begin(), e.end()), c);
  return f;
}

inline LaurentPoly tpoly(std::size_t n, const std::vector<Term>& terms) {
  return poly(Profile::character(n), terms);
}

inline LaurentPoly ypoly(std::size_t d, const std::vector<Term>& terms) {
  return poly(Profile::face_ring(d), terms);
}

inline Character chr(std::vector<long> v) { return Character(std::vector<Integer>(v.begin(), v.end())); }
inline Cocharacter cochr(std::vector<long> v) { return Cocharacter(std::vector<Integer>(v.begin(), v.end())); }

inline SimplePolytope triangle() { return {2, 3, {{1, 2}, {2, 3}, {1, 3}}}; }
inline SimplePolytope square() { return {2, 4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}}; }

inline CharacteristicMatrix lambda_of(std::size_t n, std::vector<std::vector<long>> rows) {
  CharacteristicMatrix m{n, {}};
  for (auto& r : rows) m.rows.push_back(cochr(r));
  return m;
}

}  // namespace quasik::testing
