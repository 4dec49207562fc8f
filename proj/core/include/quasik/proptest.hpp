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

// Seeded randomized checks of the structural identities: Gamma_X = W_X,
// phi is a ring map into Gamma_X, interpolation inverts phi, the kernel
// generators vanish, and the triangular basis certificate.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quasik/facering.hpp"
#include "quasik/io.hpp"

namespace quasik {

/// Per-case seed: splitmix64 of the run seed mixed with suite and case.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t suite, std::uint64_t index);

/// Random draws with a fixed, platform-independent mapping from the engine
/// output to values.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  long nonzero(long bound);
  std::vector<std::size_t> permutation(std::size_t m);

  Character character(std::size_t n, long bound);
  /// Sum of 1..max_terms monomials in the y_i with exponents in [-bound, bound].
  LaurentPoly face_ring_element(const FaceRing& ring, std::size_t max_terms, long bound);

  /// sum_k c_k * Delta(e^{u_k}) * prod_i r_i^{a_ik}: in Gamma_X by construction.
  FixedPointTuple member_tuple(const FaceRing& ring);
  /// One entry changed by a random monomial, or by c * e^w * (1 - e^{-u}) for
  /// an edge u at that vertex.
  FixedPointTuple perturbed(const FaceRing& ring, FixedPointTuple tuple);

  /// A vertex order that passes validate_order: random generic heights when
  /// coordinates are known, otherwise rejection over permutations.
  std::optional<VertexOrder> valid_order(const SimplePolytope& p,
                                         const std::optional<std::vector<std::vector<Rational>>>& coords,
                                         std::size_t attempts = 2000);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::optional<std::string> failure;  // first failing case

  bool ok() const { return passed == cases; }
};

struct ProptestReport {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<SuiteResult> suites;

  bool ok() const;
  std::string to_string() const;
  Json to_json() const;
};

struct ProptestOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  /// Random valid orders tried by the certificate suite, besides the input order.
  std::size_t certificate_orders = 8;
};

/// `order` is used as given (it may fail validate_order); coordinates, when
/// present, seed the random valid orders.
ProptestReport run_proptests(const FaceRing& ring, const VertexOrder& order,
                             const std::optional<std::vector<std::vector<Rational>>>& coords,
                             const ProptestOptions& options);

}  // namespace quasik
