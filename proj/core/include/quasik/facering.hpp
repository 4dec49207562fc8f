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

// The K-theoretic face ring Z[z^{+-1}][y_1^{+-1},...,y_d^{+-1}] / J and the
// fixed-point map phi onto the GKM subring of R^m.

#include <cstddef>
#include <string>
#include <vector>

#include "quasik/gkm.hpp"
#include "quasik/laurent.hpp"
#include "quasik/polytope.hpp"

namespace quasik {

/// Generators and relations of the face ring. `lattice_relations` is empty
/// for the equivariant ring and holds prod_i y_i^{<e_k, lambda_i>} - 1 for
/// the ordinary ring.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<FacetSet> nonfaces;
  std::vector<LaurentPoly> j_generators;
  std::vector<LaurentPoly> lattice_relations;

  std::string to_string() const;
};

struct InterpolationStep {
  std::size_t position = 0;  // t, 0-based
  std::size_t vertex = 0;
  LaurentPoly piece;         // p_t, in the y_i with i through v_t
};

struct InterpolationResult {
  LaurentPoly poly;
  std::vector<InterpolationStep> steps;
  bool residual_check = false;

  std::string trace() const;
};

struct CertificateEntry {
  std::size_t position = 0;
  std::size_t vertex = 0;
  FacetSet support;    // S_t
  LaurentPoly omega;   // prod_{i in S_t} (1 - y_i)
};

struct BasisCertificate {
  std::vector<CertificateEntry> entries;
  ValidationReport report;

  /// Throws CertificateFailure carrying the first issue.
  void require_ok() const;
};

/// Truncated model of the ordinary K-ring: the variables y_b for b through
/// the first vertex are eliminated with the lattice relations, the rest are
/// written y_i = 1 + x_i, and everything lives in Z[x]/(x)^{degree+1}.
class OrdinaryKRing {
 public:
  std::size_t degree() const { return degree_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool torsion_free() const { return torsion_.empty(); }
  const std::vector<int>& free_facets() const { return free_facets_; }

  /// Whether a face-ring element vanishes in the quotient.
  bool is_zero(const LaurentPoly& element) const;

 private:
  friend class FaceRing;

  std::vector<Integer> expand(const LaurentPoly& element) const;

  std::size_t degree_ = 0;
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
  std::vector<int> free_facets_;
  std::size_t facet_count_ = 0;
  std::vector<std::vector<int>> monomials_;         // exponent vectors of degree <= degree_
  std::vector<std::vector<Integer>> y_series_;      // y_i, indexed by facet - 1
  std::vector<std::vector<Integer>> y_inv_series_;  // y_i^{-1}
  SnfDecomposition relations_;
};

struct OrdinaryRank {
  std::size_t rank = 0;
  bool torsion_free = true;
  std::vector<Integer> torsion;
  std::size_t degree = 0;
};

/// Face ring and fixed-point data of a validated (Q, Lambda).
class FaceRing {
 public:
  /// Throws InputError unless both validations pass.
  FaceRing(SimplePolytope polytope, CharacteristicMatrix lambda, bool bott = false);

  const SimplePolytope& polytope() const { return polytope_; }
  const CharacteristicMatrix& lambda() const { return lambda_; }
  const GkmGraph& gkm() const { return gkm_; }
  const JoinTable& joins() const { return joins_; }
  std::size_t vertex_count() const { return polytope_.vertex_count(); }

  Profile character_profile() const { return Profile::character(polytope_.dim, bott_); }
  Profile face_ring_profile() const { return Profile::face_ring(polytope_.facet_count, bott_); }

  /// e^u -> prod_i y_i^{<u, lambda_i>}.
  LaurentPoly theta(const Character& u) const;
  /// (r_i)_j = e^{mu^j_i}, which is 1 off facet i.
  FixedPointTuple r_vector(int facet) const;
  /// y_i -> r_i.
  FixedPointTuple phi(const LaurentPoly& element) const;
  /// The j-th component of phi.
  LaurentPoly phi_at(const LaurentPoly& element, std::size_t vertex) const;

  /// Inverts phi on W_X vertex by vertex along the order. Throws NotInW or
  /// ResidualNonzero.
  InterpolationResult interpolate(const FixedPointTuple& tuple, const VertexOrder& order) const;

  /// prod_{k in S} (1 - y_k) over the minimal non-faces S.
  std::vector<LaurentPoly> kernel_generators() const;

  /// Triangular family omega_t = prod_{i in S_t} (1 - y_i) with S_t the
  /// facets through v_t that do not contain its incoming edges.
  BasisCertificate basis_certificate(const VertexOrder& order) const;

  Presentation equivariant_presentation() const;
  Presentation ordinary_presentation() const;

  /// Truncates at increasing degree until rank and torsion repeat; throws
  /// TruncationUnstable at degree n(d-n)+n+1.
  OrdinaryKRing ordinary_ring() const;
  OrdinaryRank ordinary_rank() const;
  /// The model at one fixed truncation degree.
  OrdinaryKRing ordinary_ring_at(std::size_t degree) const;

 private:
  SimplePolytope polytope_;
  CharacteristicMatrix lambda_;
  bool bott_ = false;
  GkmGraph gkm_;
  JoinTable joins_;
  std::vector<IntMatrix> weights_;       // per vertex: n x d, columns mu^j_i
  std::vector<IntMatrix> rewrites_;      // per vertex: d x n, rows lambda_i through v_j
};

}  // namespace quasik
