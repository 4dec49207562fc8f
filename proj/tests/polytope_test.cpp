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

#include "quasik/polytope.hpp"

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quasik/errors.hpp"
#include "support.hpp"

namespace quasik {
namespace {

using testing::lambda_of;
using testing::load;
using testing::square;
using testing::triangle;

bool has_code(const ValidationReport& r, const std::string& code) {
  return std::any_of(r.issues.begin(), r.issues.end(), [&](const Issue& i) { return i.code == code; });
}

TEST(ValidateSimple, Examples) {
  EXPECT_TRUE(validate_simple(triangle()).ok());
  EXPECT_TRUE(validate_simple(square()).ok());
  const SimplePolytope broken{2, 4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}}};
  const auto r = validate_simple(broken);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_code(r, "missing-neighbour")) << r.issues.front().message;
}

TEST(ValidateSimple, ShapeErrors) {
  EXPECT_TRUE(has_code(validate_simple({2, 3, {{1, 2}, {2, 3}, {1}}}), "vertex-size"));
  EXPECT_TRUE(has_code(validate_simple({2, 3, {{1, 2}, {2, 4}, {1, 3}}}), "facet-range"));
  EXPECT_TRUE(has_code(validate_simple({2, 3, {{1, 2}, {1, 2}, {2, 3}, {1, 3}}}), "duplicate-vertex"));
  EXPECT_FALSE(validate_simple({2, 3, {}}).ok());
  // Two disjoint triangles on separate facet sets.
  const SimplePolytope two{2, 6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}};
  EXPECT_TRUE(has_code(validate_simple(two), "disconnected"));
}

TEST(ValidateSimple, BundledInputs) {
  for (const auto& name : testing::bundled()) EXPECT_TRUE(validate_simple(load(name).polytope).ok()) << name;
}

TEST(Faces, Examples) {
  EXPECT_TRUE(is_face(triangle(), {1, 2}));
  EXPECT_FALSE(is_face(triangle(), {1, 2, 3}));
  EXPECT_FALSE(is_face(square(), {1, 3}));
  EXPECT_THROW(face_of(square(), {1, 3}), NotAFace);
  const auto edge = face_of(triangle(), {1});
  EXPECT_EQ(edge.vertices, (std::vector<std::size_t>{0, 2}));
  EXPECT_TRUE(face_of(triangle(), {}).is_whole());
}

TEST(MinimalNonfaces, Examples) {
  EXPECT_EQ(minimal_nonfaces(triangle()), (std::vector<FacetSet>{{1, 2, 3}}));
  EXPECT_EQ(minimal_nonfaces(square()), (std::vector<FacetSet>{{1, 3}, {2, 4}}));
  EXPECT_EQ(minimal_nonfaces(load("cp3").polytope), (std::vector<FacetSet>{{1, 2, 3, 4}}));
}

TEST(MinimalNonfaces, AgreeWithSubsetEnumeration) {
  for (const auto& name : testing::bundled()) {
    const auto p = load(name).polytope;
    EXPECT_EQ(minimal_nonfaces(p), oracle::brute_minimal_nonfaces(p)) << name;
  }
}

TEST(MinimalNonfaces, PrismAndPentagon) {
  // Triangular prism: triangle x interval.
  const SimplePolytope prism{3, 5, {{1, 2, 4}, {2, 3, 4}, {1, 3, 4}, {1, 2, 5}, {2, 3, 5}, {1, 3, 5}}};
  ASSERT_TRUE(validate_simple(prism).ok());
  EXPECT_EQ(minimal_nonfaces(prism), oracle::brute_minimal_nonfaces(prism));
  const SimplePolytope pentagon{2, 5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}};
  ASSERT_TRUE(validate_simple(pentagon).ok());
  EXPECT_EQ(minimal_nonfaces(pentagon), oracle::brute_minimal_nonfaces(pentagon));
  EXPECT_EQ(minimal_nonfaces(pentagon).size(), 5u);
}

TEST(Edges, Counts) {
  const auto t = edges(triangle());
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].v, 0u);
  EXPECT_EQ(t[0].w, 1u);
  EXPECT_EQ(t[0].facets, (FacetSet{2}));
  EXPECT_EQ(edges(triangle())[1].facets, (FacetSet{1}));
  EXPECT_EQ(edges(square()).size(), 4u);
  EXPECT_EQ(edges(load("cube").polytope).size(), 12u);
  EXPECT_EQ(edges(load("cp3").polytope).size(), 6u);
  const auto interval = edges(load("cp1").polytope);
  ASSERT_EQ(interval.size(), 1u);
  EXPECT_TRUE(interval[0].facets.empty());
}

TEST(Join, Examples) {
  EXPECT_EQ(join(triangle(), 0, 2).facets, (FacetSet{1}));
  EXPECT_TRUE(join(square(), 0, 2).is_whole());
  const auto cube = load("cube").polytope;
  // (0,0,0) and (1,1,0) share only z = 0.
  EXPECT_EQ(join(cube, 0, 3).facets, (FacetSet{3}));
  EXPECT_EQ(join(cube, 0, 3).vertices.size(), 4u);
}

TEST(Join, IsTheSmallestFaceContainingBoth) {
  for (const auto& name : testing::bundled()) {
    const auto p = load(name).polytope;
    const std::size_t d = p.facet_count;
    for (std::size_t v = 0; v < p.vertex_count(); ++v)
      for (std::size_t w = v + 1; w < p.vertex_count(); ++w) {
        std::size_t best = p.vertex_count();
        for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
          std::vector<int> ids;
          for (std::size_t i = 0; i < d; ++i)
            if ((mask >> i) & 1u) ids.push_back(static_cast<int>(i + 1));
          const FacetSet s(ids);
          if (!p.vertices[v].includes(s) || !p.vertices[w].includes(s)) continue;
          std::size_t count = 0;
          for (const auto& x : p.vertices) count += x.includes(s) ? 1 : 0;
          best = std::min(best, count);
        }
        EXPECT_EQ(join(p, v, w).vertices.size(), best) << name;
      }
  }
}

TEST(ValidateCharacteristic, Examples) {
  EXPECT_TRUE(validate_characteristic(triangle(), lambda_of(2, {{1, 0}, {0, 1}, {-1, -1}})).ok());
  const auto bad = validate_characteristic(triangle(), lambda_of(2, {{1, 0}, {0, 1}, {-2, -1}}));
  ASSERT_EQ(bad.issues.size(), 1u);
  EXPECT_EQ(bad.issues[0].code, "not-unimodular");
  EXPECT_EQ(bad.issues[0].message, "vertex {2,3}: det = 2");
  for (long k = -3; k <= 3; ++k)
    EXPECT_TRUE(validate_characteristic(square(), lambda_of(2, {{1, 0}, {0, 1}, {-1, k}, {0, -1}})).ok()) << k;
}

TEST(ValidateCharacteristic, ShapeAndPrimitivity) {
  EXPECT_TRUE(has_code(validate_characteristic(triangle(), lambda_of(2, {{1, 0}, {0, 1}})), "lambda-rows"));
  EXPECT_TRUE(has_code(validate_characteristic(triangle(), lambda_of(2, {{1, 0}, {0, 1}, {-1}})), "lambda-length"));
  EXPECT_TRUE(has_code(validate_characteristic(triangle(), lambda_of(2, {{2, 0}, {0, 1}, {-1, -1}})), "not-primitive"));
}

TEST(Heights, TriangleAndSquare) {
  const std::vector<std::vector<Rational>> tri{{0, 0}, {1, 0}, {0, 1}};
  const auto o = vertex_order_from_heights(triangle(), tri, {1, 2});
  EXPECT_EQ(o.sequence, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(o.index, (std::vector<std::size_t>{0, 1, 2}));

  const std::vector<std::vector<Rational>> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto s = vertex_order_from_heights(square(), sq, {1, 1});
  EXPECT_EQ(s.sequence.front(), 0u);
  EXPECT_EQ(s.sequence.back(), 2u);
  std::vector<std::size_t> ind;
  for (auto v : s.sequence) ind.push_back(s.index[v]);
  EXPECT_EQ(ind, (std::vector<std::size_t>{0, 1, 1, 2}));

  EXPECT_THROW(vertex_order_from_heights(square(), sq, {1, 0}), NonGenericHeight);
}

TEST(Heights, RationalInputs) {
  const std::vector<std::vector<Rational>> tri{{0, 0}, {Rational(1, 2), 0}, {0, Rational(1, 3)}};
  const auto o = vertex_order_from_heights(triangle(), tri, {Rational(-1), Rational(5, 7)});
  EXPECT_EQ(o.sequence, (std::vector<std::size_t>{1, 0, 2}));
}

TEST(ValidateOrder, EveryTriangleOrderIsValid) {
  std::vector<std::size_t> seq{0, 1, 2};
  do {
    const auto o = validate_order(triangle(), seq);
    std::vector<std::size_t> ind;
    for (auto v : o.sequence) ind.push_back(o.index[v]);
    EXPECT_EQ(ind, (std::vector<std::size_t>{0, 1, 2}));
  } while (std::next_permutation(seq.begin(), seq.end()));
}

TEST(ValidateOrder, SquareWithTwoSources) {
  // (0,0) < (1,1) < (1,0) < (0,1)
  try {
    validate_order(square(), {0, 2, 1, 3});
    FAIL() << "expected InvalidOrder";
  } catch (const InvalidOrder& e) {
    EXPECT_NE(std::string(e.what()).find("no unique lowest vertex"), std::string::npos) << e.what();
  }
  const auto o = order_from_sequence(square(), {0, 2, 1, 3});
  const auto bad = order_violation(square(), o);
  ASSERT_TRUE(bad.has_value());
  EXPECT_TRUE(bad->is_whole());
}

TEST(ValidateOrder, RejectsNonPermutations) {
  EXPECT_THROW(validate_order(square(), {0, 1, 2}), InvalidOrder);
  EXPECT_THROW(validate_order(square(), {0, 1, 2, 2}), InvalidOrder);
}

TEST(ValidateOrder, HeightOrdersOfBundledInputsAreValid) {
  for (const auto& name : testing::bundled()) {
    const auto doc = load(name);
    const auto o = vertex_order_from_heights(doc.polytope, *doc.vertex_coords, *doc.height_vector);
    EXPECT_EQ(o.index[o.sequence.front()], 0u) << name;
    EXPECT_EQ(o.index[o.sequence.back()], doc.polytope.dim) << name;
    std::size_t total = 0;
    for (auto i : o.index) total += i;
    EXPECT_EQ(total, edges(doc.polytope).size()) << name;
  }
}

TEST(ValidateOrder, CountOfValidCubeOrders) {
  // Every height order passes; random permutations mostly fail.
  const auto p = load("cube").polytope;
  std::vector<std::size_t> seq(8);
  std::iota(seq.begin(), seq.end(), std::size_t{0});
  std::size_t valid = 0;
  do {
    if (!order_violation(p, order_from_sequence(p, seq))) ++valid;
  } while (std::next_permutation(seq.begin(), seq.end()));
  EXPECT_GT(valid, 0u);
  EXPECT_LT(valid, 40320u);
}

TEST(MinimalNonfaces, TooManyFacets) {
  SimplePolytope p{1, 25, {}};
  EXPECT_THROW(minimal_nonfaces(p), TooManyFacets);
}

}  // namespace
}  // namespace quasik
