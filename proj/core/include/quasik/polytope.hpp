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

// Combinatorial simple polytopes given by vertex-facet incidence.
//
// Facets are numbered 1..d everywhere. Vertices are numbered by their
// position in the input list (0-based in the API, 1-based in messages).

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quasik/lattice.hpp"

namespace quasik {

using Rational = boost::multiprecision::cpp_rational;

/// Sorted set of 1-based facet indices.
class FacetSet {
 public:
  FacetSet() = default;
  explicit FacetSet(std::vector<int> ids);
  FacetSet(std::initializer_list<int> ids) : FacetSet(std::vector<int>(ids)) {}

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<int>& ids() const { return ids_; }

  bool contains(int facet) const;
  bool includes(const FacetSet& sub) const;
  FacetSet intersect(const FacetSet& other) const;
  FacetSet minus(const FacetSet& other) const;
  FacetSet without(int facet) const;

  auto operator<=>(const FacetSet&) const = default;
  bool operator==(const FacetSet&) const = default;

  /// "{1,3}"
  std::string to_string() const;

 private:
  std::vector<int> ids_;
};

struct SimplePolytope {
  std::size_t dim = 0;
  std::size_t facet_count = 0;
  std::vector<FacetSet> vertices;

  std::size_t vertex_count() const { return vertices.size(); }
};

/// Rows lambda_1..lambda_d; lambda(i) takes a 1-based facet index.
struct CharacteristicMatrix {
  std::size_t dim = 0;
  std::vector<Cocharacter> rows;

  const Cocharacter& lambda(int facet) const { return rows.at(static_cast<std::size_t>(facet - 1)); }
  /// The |S| x n matrix whose rows are lambda_i for i in S.
  IntMatrix rows_of(const FacetSet& facets) const;
  /// The n x |S| matrix whose columns are lambda_i for i in S.
  IntMatrix columns_of(const FacetSet& facets) const;
};

struct Issue {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool ok() const { return issues.empty(); }
  void fail(std::string code, std::string message) {
    issues.push_back({std::move(code), std::move(message)});
  }
};

struct Edge {
  std::size_t v = 0;  // v < w
  std::size_t w = 0;
  FacetSet facets;    // the n-1 facets containing the edge
};

/// A face given by the full set of facets containing it. An empty facet set
/// is the whole polytope.
struct Face {
  FacetSet facets;
  std::vector<std::size_t> vertices;

  bool is_whole() const { return facets.empty(); }
};

struct VertexOrder {
  std::vector<std::size_t> sequence;  // position -> vertex
  std::vector<std::size_t> position;  // vertex -> position
  std::vector<std::size_t> index;     // vertex -> ind(v), number of incoming edges
  std::vector<std::vector<std::size_t>> incoming;  // vertex -> edge ids, earlier neighbour
  std::vector<std::vector<std::size_t>> outgoing;  // vertex -> edge ids, later neighbour
};

ValidationReport validate_simple(const SimplePolytope& p);

bool is_face(const SimplePolytope& p, const FacetSet& s);
/// Throws NotAFace when no vertex contains s.
Face face_of(const SimplePolytope& p, const FacetSet& s);

/// Inclusion-minimal empty intersections, by size then lexicographically.
/// Throws TooManyFacets for d > 24.
std::vector<FacetSet> minimal_nonfaces(const SimplePolytope& p);

/// Vertex pairs sharing exactly n-1 facets that no third vertex contains,
/// sorted by (v, w).
std::vector<Edge> edges(const SimplePolytope& p);

/// v \/ w, the smallest face containing both vertices.
Face join(const SimplePolytope& p, std::size_t v, std::size_t w);

ValidationReport validate_characteristic(const SimplePolytope& p, const CharacteristicMatrix& lambda);

/// Orientation and indices induced by a vertex sequence, without checking
/// that the order comes from a height function.
VertexOrder order_from_sequence(const SimplePolytope& p, const std::vector<std::size_t>& sequence);

/// First face (vertices, edges, joins, then Q) that has no unique lowest
/// vertex along its own edges, if any.
std::optional<Face> order_violation(const SimplePolytope& p, const VertexOrder& order);

/// order_from_sequence plus the face check; throws InvalidOrder.
VertexOrder validate_order(const SimplePolytope& p, const std::vector<std::size_t>& sequence);

/// Sorts vertices by <x, w>; ties are broken by vertex number and are only
/// rejected along an edge (NonGenericHeight).
VertexOrder vertex_order_from_heights(const SimplePolytope& p,
                                      const std::vector<std::vector<Rational>>& coords,
                                      const std::vector<Rational>& w);

}  // namespace quasik
