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

// Exact integer linear algebra on the character lattice M = Z^n and the
// cocharacter lattice Hom(S^1, T) = Z^n.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quasik {

using Integer = boost::multiprecision::cpp_int;

Integer gcd_of(std::span<const Integer> values);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                             std::size_t cols_if_empty = 0);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;
  std::vector<Integer> col(std::size_t c) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Integer> apply(std::span<const Integer> v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  bool is_identity() const;
  bool operator==(const IntMatrix& rhs) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

Integer determinant(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);

namespace detail {

template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : coords_(n) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords) : coords_(coords.begin(), coords.end()) {}

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }
  Integer content() const { return gcd_of(coords_); }
  bool is_primitive() const { return content() == 1; }

  LatticeVector operator-() const {
    LatticeVector out(*this);
    for (auto& c : out.coords_) c = -c;
    return out;
  }
  LatticeVector operator+(const LatticeVector& o) const {
    LatticeVector out(*this);
    for (std::size_t i = 0; i < size(); ++i) out.coords_[i] += o.coords_[i];
    return out;
  }
  LatticeVector operator-(const LatticeVector& o) const { return *this + (-o); }
  LatticeVector scaled(const Integer& k) const {
    LatticeVector out(*this);
    for (auto& c : out.coords_) c *= k;
    return out;
  }

  auto operator<=>(const LatticeVector&) const = default;
  bool operator==(const LatticeVector&) const = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += coords_[i].str();
    }
    return s + ")";
  }

 private:
  std::vector<Integer> coords_;
};

struct CharacterTag {};
struct CocharacterTag {};

}  // namespace detail

/// Element u of the character lattice M = Hom(T, C^*).
using Character = detail::LatticeVector<detail::CharacterTag>;
/// Element of Hom(S^1, T); facet normals lambda_i live here.
using Cocharacter = detail::LatticeVector<detail::CocharacterTag>;

Integer pairing(const Character& u, const Cocharacter& lambda);

/// U * A * V = D with U, V unimodular and D in Smith normal form.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  std::vector<Integer> invariant_factors() const;
};

SnfDecomposition snf(const IntMatrix& a);

/// Inverse of a unimodular matrix; throws NotUnimodular otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// Saturated basis of { u : u * A = 0 }, u a row vector of length A.rows().
std::vector<Character> left_kernel(const IntMatrix& a);

/// The primitive generator of the left kernel of an n x (n-1) matrix of rank
/// n-1, with its first nonzero coordinate positive.
Character primitive_kernel_vector(const IntMatrix& b);

/// A unimodular n x n matrix whose first row is u.
IntMatrix complete_to_unimodular(const Character& u);

/// Rows of (V^T)^{-1}: the basis mu_k with <mu_k, row_l(V)> = delta_{k,l}.
std::vector<Character> dual_basis(const IntMatrix& v);

/// Integer matrix P : Z^n -> Z^q, surjective, whose kernel is exactly the
/// span of `basis`. The span must be saturated (throws NotSaturated).
IntMatrix quotient_projection(std::size_t ambient_dim, std::span<const Character> basis);

}  // namespace quasik
