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

// Fixed-point data of the torus action: edge characters, dual bases at the
// vertices, restriction to faces, and the two descriptions of the
// equivariant K-ring as a subring of R^m.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quasik/laurent.hpp"
#include "quasik/lattice.hpp"
#include "quasik/polytope.hpp"

namespace quasik {

struct GkmEdge {
  std::size_t v = 0;
  std::size_t w = 0;
  FacetSet facets;
  Character u;  // primitive, orthogonal to lambda_k for k in facets
};

struct GkmGraph {
  std::size_t dim = 0;
  std::size_t facet_count = 0;
  std::vector<FacetSet> vertex_facets;
  std::vector<GkmEdge> edges;
  /// mu[j][i]: the character dual to lambda_i at vertex j, for i through v_j.
  std::vector<std::map<int, Character>> mu;

  std::size_t vertex_count() const { return vertex_facets.size(); }
  /// mu^j_i, or zero when v_j is not on facet i.
  Character mu_of(std::size_t vertex, int facet) const;
  /// The n x d matrix whose column i is mu^j_i.
  IntMatrix weight_matrix(std::size_t vertex) const;
};

/// Element of R^m: one Laurent polynomial in the character variables per
/// fixed point.
class FixedPointTuple {
 public:
  FixedPointTuple() = default;
  explicit FixedPointTuple(std::vector<LaurentPoly> entries);

  /// The diagonal image (a, ..., a).
  static FixedPointTuple diagonal(std::size_t m, const LaurentPoly& a);
  static FixedPointTuple zero(std::size_t m, Profile profile);

  std::size_t size() const { return entries_.size(); }
  const LaurentPoly& operator[](std::size_t i) const { return entries_[i]; }
  LaurentPoly& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<LaurentPoly>& entries() const { return entries_; }
  bool is_zero() const;

  FixedPointTuple& operator+=(const FixedPointTuple& rhs);
  FixedPointTuple& operator-=(const FixedPointTuple& rhs);
  friend FixedPointTuple operator+(FixedPointTuple a, const FixedPointTuple& b) { return a += b; }
  friend FixedPointTuple operator-(FixedPointTuple a, const FixedPointTuple& b) { return a -= b; }
  friend FixedPointTuple operator*(const FixedPointTuple& a, const FixedPointTuple& b);
  bool operator==(const FixedPointTuple&) const = default;

 private:
  std::vector<LaurentPoly> entries_;
};

struct MembershipWitness {
  enum class Kind { Edge, Pair };
  Kind kind = Kind::Edge;
  std::size_t i = 0;
  std::size_t l = 0;
  Character u;             // Edge: the edge character
  FacetSet face;           // Pair: facets of v_i \/ v_l (empty means Q)
  LaurentPoly difference;  // Edge: a_i - a_l; Pair: difference of the restrictions

  std::string describe() const;
};

struct MembershipReport {
  bool member = true;
  std::optional<MembershipWitness> witness;
};

GkmGraph build_gkm(const SimplePolytope& p, const CharacteristicMatrix& lambda);

/// Nonzero edge characters, and pairwise independence at every vertex.
ValidationReport euler_coprimality_check(const GkmGraph& g);

/// Matrix of the projection M -> M / <lambda_k : k in F>^perp.
IntMatrix face_projection(const Face& face, const CharacteristicMatrix& lambda);

/// Image of a in R_F; for F = Q this is the augmentation.
LaurentPoly restrict_to_face(const LaurentPoly& a, const Face& face, const CharacteristicMatrix& lambda);

/// Edge divisibility: (1 - e^{-u}) | a_i - a_l for every edge.
MembershipReport in_gamma(const GkmGraph& g, const FixedPointTuple& tuple);

/// Joins v_i \/ v_l and their restriction maps for every vertex pair.
class JoinTable {
 public:
  JoinTable(const SimplePolytope& p, const CharacteristicMatrix& lambda);

  std::size_t vertex_count() const { return m_; }
  const Face& face(std::size_t i, std::size_t l) const;
  const IntMatrix& projection(std::size_t i, std::size_t l) const;
  LaurentPoly restrict(const LaurentPoly& a, std::size_t i, std::size_t l) const;

 private:
  std::size_t slot(std::size_t i, std::size_t l) const;

  std::size_t m_ = 0;
  std::vector<Face> faces_;
  std::vector<IntMatrix> projections_;
};

/// Face agreement: f_{v_i,F}(a_i) = f_{v_l,F}(a_l) for all pairs, F = v_i \/ v_l.
MembershipReport in_w(const JoinTable& joins, const FixedPointTuple& tuple);
MembershipReport in_w(const GkmGraph& g, const SimplePolytope& p,
                      const CharacteristicMatrix& lambda, const FixedPointTuple& tuple);

/// Undirected graph, vertices v<k> (order position when an order is given),
/// edges labelled by their characters.
std::string to_dot(const GkmGraph& g, const VertexOrder* order = nullptr);

}  // namespace quasik
