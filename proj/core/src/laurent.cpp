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

#include "quasik/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "quasik/errors.hpp"

namespace quasik {

std::string Profile::variable_name(std::size_t i) const {
  if (i >= var_count()) throw DimensionMismatch("variable index out of range");
  if (i == count) return "z";
  return (kind == VariableKind::Character ? "t" : "y") + std::to_string(i + 1);
}

LaurentPoly LaurentPoly::constant(Profile profile, const Integer& c) {
  LaurentPoly p(profile);
  p.add_term(Exponent(profile.var_count()), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Profile profile, Exponent exps, const Integer& coeff) {
  if (exps.size() != profile.var_count())
    throw DimensionMismatch("monomial exponent has " + std::to_string(exps.size()) +
                            " entries, profile needs " + std::to_string(profile.var_count()));
  LaurentPoly p(profile);
  p.add_term(exps, coeff);
  return p;
}

LaurentPoly LaurentPoly::variable(Profile profile, std::size_t i, long power) {
  if (i >= profile.var_count()) throw DimensionMismatch("variable index out of range");
  Exponent e(profile.var_count());
  e[i] = power;
  return monomial(profile, std::move(e));
}

Integer LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  if (e.size() != profile_.var_count())
    throw DimensionMismatch("term exponent length does not match the profile");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void LaurentPoly::require_same_profile(const LaurentPoly& rhs, const char* op) const {
  if (!(profile_ == rhs.profile_))
    throw ProfileMismatch(std::string("operands of ") + op + " have different variable profiles");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  require_same_profile(rhs, "+");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  require_same_profile(rhs, "-");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same_profile(b, "*");
  LaurentPoly out(a.profile_);
  Exponent e(a.profile_.var_count());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::scaled(const Integer& k) const {
  LaurentPoly out(profile_);
  if (k == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(profile_, 1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
  return profile_ == rhs.profile_ && terms_ == rhs.terms_;
}

Integer LaurentPoly::eval_all_ones() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += profile_.variable_name(i);
      if (e[i] != 1) mono += "^" + e[i].str();
    }
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << mono;
    }
  }
  return os.str();
}

LaurentPoly exp_character(Profile profile, const Character& u) {
  if (u.size() != profile.count) throw DimensionMismatch("character length does not match profile");
  Exponent e(profile.var_count());
  for (std::size_t i = 0; i < u.size(); ++i) e[i] = u[i];
  return LaurentPoly::monomial(profile, std::move(e));
}

LaurentPoly one_minus_exp(Profile profile, const Character& u) {
  return LaurentPoly::constant(profile, 1) - exp_character(profile, u);
}

LaurentPoly substitute_monomial_map(const LaurentPoly& f, const IntMatrix& a, Profile target) {
  const Profile& src = f.profile();
  if (a.cols() != src.count)
    throw DimensionMismatch("monomial map has " + std::to_string(a.cols()) +
                            " columns, polynomial has " + std::to_string(src.count) +
                            " variables");
  if (a.rows() != target.count)
    throw DimensionMismatch("monomial map row count does not match the target profile");
  if (src.bott != target.bott) throw ProfileMismatch("Bott variable present on one side only");
  LaurentPoly out(target);
  Exponent e(target.var_count());
  for (const auto& [exps, c] : f.terms()) {
    for (std::size_t r = 0; r < target.count; ++r) {
      e[r] = 0;
      for (std::size_t k = 0; k < src.count; ++k)
        if (exps[k] != 0 && a(r, k) != 0) e[r] += a(r, k) * exps[k];
    }
    if (src.bott) e[target.count] = exps[src.count];
    out.add_term(e, c);
  }
  return out;
}

LaurentPoly substitute_monomial_map(const LaurentPoly& f, const IntMatrix& a) {
  return substitute_monomial_map(f, a, Profile{f.profile().kind, a.rows(), f.profile().bott});
}

namespace {

struct UnimodularChange {
  IntMatrix forward;   // v -> coordinates where u is the first basis vector
  IntMatrix backward;  // inverse of forward
};

UnimodularChange change_for(const LaurentPoly& f, const Character& u) {
  if (f.profile().kind != VariableKind::Character)
    throw ProfileMismatch("divisibility by 1 - e^{-u} needs a character profile");
  if (u.size() != f.profile().count)
    throw DimensionMismatch("character length does not match the polynomial");
  if (u.is_zero()) throw ZeroCharacter("character is zero");
  if (!u.is_primitive()) throw NotPrimitive("character " + u.to_string() + " is not primitive");
  // Rows of U form a basis with u first; writing v = c * U gives c = v * U^{-1},
  // i.e. the column map c = (U^{-1})^T v, under which e^u becomes the first variable.
  IntMatrix basis = complete_to_unimodular(u);
  return {inverse_unimodular(basis).transpose(), basis.transpose()};
}

// Groups terms by all coordinates except the first; each group is a
// univariate Laurent polynomial in the first variable.
std::map<Exponent, std::map<Integer, Integer>> split_first(const LaurentPoly& g) {
  std::map<Exponent, std::map<Integer, Integer>> groups;
  for (const auto& [e, c] : g.terms()) {
    Exponent rest(e.begin() + 1, e.end());
    groups[rest][e[0]] += c;
  }
  return groups;
}

}  // namespace

bool divides_one_minus(const LaurentPoly& f, const Character& u) {
  auto change = change_for(f, u);
  LaurentPoly g = substitute_monomial_map(f, change.forward, f.profile());
  for (const auto& [rest, uni] : split_first(g)) {
    Integer s = 0;
    for (const auto& [k, c] : uni) s += c;
    if (s != 0) return false;
  }
  return true;
}

LaurentPoly quotient_one_minus(const LaurentPoly& f, const Character& u) {
  auto change = change_for(f, u);
  LaurentPoly g = substitute_monomial_map(f, change.forward, f.profile());
  LaurentPoly q(f.profile());
  Exponent e(f.profile().var_count());
  for (const auto& [rest, uni] : split_first(g)) {
    std::copy(rest.begin(), rest.end(), e.begin() + 1);
    // (1 - s^{-1}) * sum_k g_k s^k = f  gives  g_k = sum_{j >= k} f_j.
    std::vector<std::pair<Integer, Integer>> coeffs(uni.begin(), uni.end());
    Integer suffix = 0;
    for (std::size_t j = coeffs.size(); j-- > 1;) {
      suffix += coeffs[j].second;
      if (suffix == 0) continue;
      for (Integer k = coeffs[j - 1].first + 1; k <= coeffs[j].first; ++k) {
        e[0] = k;
        q.add_term(e, suffix);
      }
    }
    if (suffix + coeffs.front().second != 0)
      throw NotDivisible("1 - e^{-" + u.to_string() + "} does not divide " + f.to_string());
  }
  LaurentPoly result = substitute_monomial_map(q, change.backward, f.profile());
  if (!(one_minus_exp(f.profile(), -u) * result == f))
    throw std::logic_error("quotient_one_minus: multiplication check failed");
  return result;
}

}  // namespace quasik
