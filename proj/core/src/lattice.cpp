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

#include "quasik/lattice.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "quasik/errors.hpp"

namespace quasik {

namespace mp = boost::multiprecision;

Integer gcd_of(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) {
    g = mp::gcd(g, v);
    if (g == 1) break;
  }
  return mp::abs(g);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows,
                               std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> tmp;
  for (const auto& r : rows) tmp.emplace_back(r.begin(), r.end());
  return from_rows(tmp);
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Integer> IntMatrix::col(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector product: length mismatch");
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (v[c] != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(src, c) != 0) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, src) != 0) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ",";
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ",";
      os << (*this)(r, c);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

// Bareiss fraction-free elimination; returns the rank and, for square input,
// leaves the signed determinant in `det`.
static std::size_t bareiss(IntMatrix m, Integer* det) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      m.swap_rows(pivot, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  if (det) *det = (rows == cols && r == rows) ? Integer(sign) * prev : Integer(0);
  return r;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  Integer det;
  bareiss(a, &det);
  return det;
}

std::size_t rank(const IntMatrix& a) { return bareiss(a, nullptr); }

Integer pairing(const Character& u, const Cocharacter& lambda) {
  if (u.size() != lambda.size()) throw DimensionMismatch("pairing: lattice ranks differ");
  Integer s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * lambda[i];
  return s;
}

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  while (r < std::min(D.rows(), D.cols()) && D(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SnfDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(D(i, i));
  return out;
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& d,
                                                                  std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = mp::abs(d(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace

SnfDecomposition snf(const IntMatrix& a) {
  SnfDecomposition out{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  IntMatrix& U = out.U;
  IntMatrix& D = out.D;
  IntMatrix& V = out.V;
  const std::size_t diag = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      auto pivot = smallest_entry(D, t);
      if (!pivot) return out;
      D.swap_rows(t, pivot->first);
      U.swap_rows(t, pivot->first);
      D.swap_cols(t, pivot->second);
      V.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        D.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        D.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block for the chain d_t | d_{t+1}.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < D.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < D.cols(); ++j)
          if (D(i, j) % D(t, t) != 0) {
            D.add_row_multiple(t, i, 1);
            U.add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return out;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw NotUnimodular("inverse of a non-square matrix");
  SnfDecomposition s = snf(a);
  if (!s.D.is_identity()) throw NotUnimodular("matrix is not unimodular: " + a.to_string());
  return s.V * s.U;
}

std::vector<Character> left_kernel(const IntMatrix& a) {
  SnfDecomposition s = snf(a);
  std::vector<Character> out;
  for (std::size_t i = s.rank(); i < a.rows(); ++i) out.emplace_back(s.U.row(i));
  return out;
}

Character primitive_kernel_vector(const IntMatrix& b) {
  if (b.cols() + 1 != b.rows())
    throw DimensionMismatch("primitive_kernel_vector expects an n x (n-1) matrix, got " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  auto kernel = left_kernel(b);
  if (kernel.size() != 1)
    throw RankError("matrix has rank " + std::to_string(b.rows() - kernel.size()) +
                    " < " + std::to_string(b.cols()));
  Character u = std::move(kernel.front());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (u[i] < 0) u = -u;
    break;
  }
  return u;
}

IntMatrix complete_to_unimodular(const Character& u) {
  if (u.size() == 0) throw DimensionMismatch("cannot complete an empty vector");
  if (!u.is_primitive()) throw NotPrimitive("vector " + u.to_string() + " is not primitive");
  IntMatrix row(1, u.size());
  for (std::size_t i = 0; i < u.size(); ++i) row(0, i) = u[i];
  // U * u * V = e_1 with U = [+-1], so u = U(0,0) * (first row of V^{-1}).
  SnfDecomposition s = snf(row);
  IntMatrix out = inverse_unimodular(s.V);
  if (s.U(0, 0) < 0) out.negate_row(0);
  return out;
}

std::vector<Character> dual_basis(const IntMatrix& v) {
  const Integer det = determinant(v);
  if (mp::abs(det) != 1)
    throw NotUnimodular("vertex matrix " + v.to_string() + " has determinant " + det.str());
  IntMatrix mu = inverse_unimodular(v).transpose();
  std::vector<Character> out;
  for (std::size_t k = 0; k < mu.rows(); ++k) out.emplace_back(mu.row(k));
  return out;
}

IntMatrix quotient_projection(std::size_t ambient_dim, std::span<const Character> basis) {
  IntMatrix b(basis.size(), ambient_dim);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (basis[r].size() != ambient_dim)
      throw DimensionMismatch("sublattice generator has wrong length");
    for (std::size_t c = 0; c < ambient_dim; ++c) b(r, c) = basis[r][c];
  }
  SnfDecomposition s = snf(b);
  const std::size_t r = s.rank();
  for (std::size_t i = 0; i < r; ++i)
    if (s.D(i, i) != 1) throw NotSaturated("sublattice is not saturated");
  // rowspace(B) = span of the first r rows of V^{-1}; coordinates x -> x * V.
  IntMatrix p(ambient_dim - r, ambient_dim);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) p(i, j) = s.V(j, r + i);
  return p;
}

}  // namespace quasik
