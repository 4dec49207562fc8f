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

// Sparse multivariate Laurent polynomials over Z.
//
// A polynomial carries a variable profile: either character coordinates
// t_1..t_n (the representation ring Z[M]) or face-ring generators y_1..y_d,
// optionally followed by the Bott variable z. Arithmetic between different
// profiles throws ProfileMismatch.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "quasik/lattice.hpp"

namespace quasik {

enum class VariableKind { Character, FaceRing };

struct Profile {
  VariableKind kind = VariableKind::Character;
  std::size_t count = 0;  // t's or y's, excluding z
  bool bott = false;

  static Profile character(std::size_t n, bool bott = false) {
    return {VariableKind::Character, n, bott};
  }
  static Profile face_ring(std::size_t d, bool bott = false) {
    return {VariableKind::FaceRing, d, bott};
  }

  std::size_t var_count() const { return count + (bott ? 1 : 0); }
  /// "t1".."tn", "y1".."yd", or "z" for the trailing Bott slot.
  std::string variable_name(std::size_t i) const;

  bool operator==(const Profile&) const = default;
};

using Exponent = std::vector<Integer>;

class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(Profile profile) : profile_(profile) {}

  static LaurentPoly constant(Profile profile, const Integer& c);
  static LaurentPoly monomial(Profile profile, Exponent exps, const Integer& coeff = 1);
  /// x_i^power for the i-th variable of the profile (0-based, z included).
  static LaurentPoly variable(Profile profile, std::size_t i, long power = 1);

  const Profile& profile() const { return profile_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Integer coefficient(const Exponent& e) const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Integer& k) const;
  LaurentPoly pow(unsigned k) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& rhs) const;

  /// Sum of coefficients: the augmentation e^u -> 1.
  Integer eval_all_ones() const;

  std::string to_string() const;

 private:
  void require_same_profile(const LaurentPoly& rhs, const char* op) const;

  Profile profile_;
  TermMap terms_;
};

/// e^u in a character profile (u has profile.count coordinates).
LaurentPoly exp_character(Profile profile, const Character& u);

/// 1 - e^u.
LaurentPoly one_minus_exp(Profile profile, const Character& u);

/// Monomial substitution x^e -> x^{A e} on the t/y block; the Bott exponent
/// is carried through. A must have f.profile().count columns and
/// target.count rows.
LaurentPoly substitute_monomial_map(const LaurentPoly& f, const IntMatrix& a, Profile target);

/// Same as above with a character-profile target of A.rows() variables.
LaurentPoly substitute_monomial_map(const LaurentPoly& f, const IntMatrix& a);

/// Whether (1 - e^{-u}) divides f in the Laurent ring; u primitive, nonzero.
bool divides_one_minus(const LaurentPoly& f, const Character& u);

/// The exact quotient g with f = (1 - e^{-u}) * g; throws NotDivisible.
LaurentPoly quotient_one_minus(const LaurentPoly& f, const Character& u);

}  // namespace quasik
