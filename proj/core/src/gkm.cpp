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

#include "quasik/gkm.hpp"

#include <sstream>

#include "quasik/errors.hpp"

namespace quasik {

Character GkmGraph::mu_of(std::size_t vertex, int facet) const {
  const auto& at = mu.at(vertex);
  auto it = at.find(facet);
  return it == at.end() ? Character(dim) : it->second;
}

IntMatrix GkmGraph::weight_matrix(std::size_t vertex) const {
  IntMatrix w(dim, facet_count);
  for (const auto& [facet, m] : mu.at(vertex))
    for (std::size_t r = 0; r < dim; ++r) w(r, static_cast<std::size_t>(facet - 1)) = m[r];
  return w;
}

FixedPointTuple::FixedPointTuple(std::vector<LaurentPoly> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if (!(e.profile() == entries_.front().profile()))
      throw ProfileMismatch("tuple entries have different variable profiles");
}

FixedPointTuple FixedPointTuple::diagonal(std::size_t m, const LaurentPoly& a) {
  return FixedPointTuple(std::vector<LaurentPoly>(m, a));
}

FixedPointTuple FixedPointTuple::zero(std::size_t m, Profile profile) {
  return FixedPointTuple(std::vector<LaurentPoly>(m, LaurentPoly(profile)));
}

bool FixedPointTuple::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

FixedPointTuple& FixedPointTuple::operator+=(const FixedPointTuple& rhs) {
  if (size() != rhs.size()) throw DimensionMismatch("tuples have different lengths");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

FixedPointTuple& FixedPointTuple::operator-=(const FixedPointTuple& rhs) {
  if (size() != rhs.size()) throw DimensionMismatch("tuples have different lengths");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

FixedPointTuple operator*(const FixedPointTuple& a, const FixedPointTuple& b) {
  if (a.size() != b.size()) throw DimensionMismatch("tuples have different lengths");
  std::vector<LaurentPoly> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return FixedPointTuple(std::move(out));
}

std::string MembershipWitness::describe() const {
  std::ostringstream os;
  if (kind == Kind::Edge) {
    os << "edge v" << i + 1 << "-v" << l + 1 << " with u = " << u.to_string()
       << ": 1 - e^{-u} does not divide a_" << i + 1 << " - a_" << l + 1 << " = "
       << difference.to_string();
  } else {
    os << "pair v" << i + 1 << ", v" << l + 1 << " with join "
       << (face.empty() ? std::string("Q") : face.to_string())
       << ": restrictions differ by " << difference.to_string();
  }
  return os.str();
}

GkmGraph build_gkm(const SimplePolytope& p, const CharacteristicMatrix& lambda) {
  GkmGraph g;
  g.dim = p.dim;
  g.facet_count = p.facet_count;
  g.vertex_facets = p.vertices;
  for (const auto& e : edges(p))
    g.edges.push_back({e.v, e.w, e.facets, primitive_kernel_vector(lambda.columns_of(e.facets))});
  g.mu.resize(p.vertex_count());
  for (std::size_t j = 0; j < p.vertex_count(); ++j) {
    const auto& fs = p.vertices[j];
    auto basis = dual_basis(lambda.rows_of(fs));
    std::size_t k = 0;
    for (int facet : fs) g.mu[j].emplace(facet, std::move(basis[k++]));
  }
  return g;
}

ValidationReport euler_coprimality_check(const GkmGraph& g) {
  ValidationReport report;
  std::vector<std::vector<const GkmEdge*>> incident(g.vertex_count());
  for (const auto& e : g.edges) {
    if (e.u.is_zero())
      report.fail("zero-character", "edge v" + std::to_string(e.v + 1) + "-v" +
                                        std::to_string(e.w + 1) + " has zero character");
    incident.at(e.v).push_back(&e);
    incident.at(e.w).push_back(&e);
  }
  for (std::size_t j = 0; j < incident.size(); ++j) {
    const auto& es = incident[j];
    for (std::size_t a = 0; a < es.size(); ++a)
      for (std::size_t b = a + 1; b < es.size(); ++b) {
        const auto& u = es[a]->u;
        const auto& w = es[b]->u;
        bool independent = false;
        for (std::size_t r = 0; r < g.dim && !independent; ++r)
          for (std::size_t c = r + 1; c < g.dim && !independent; ++c)
            independent = u[r] * w[c] - u[c] * w[r] != 0;
        if (!independent)
          report.fail("dependent-characters", "vertex v" + std::to_string(j + 1) +
                                                  ": edge characters " + u.to_string() +
                                                  " and " + w.to_string() +
                                                  " are linearly dependent");
      }
  }
  return report;
}

IntMatrix face_projection(const Face& face, const CharacteristicMatrix& lambda) {
  // M''_F = { u : <u, lambda_k> = 0 for k in F }.
  auto orthogonal = left_kernel(lambda.columns_of(face.facets));
  return quotient_projection(lambda.dim, orthogonal);
}

LaurentPoly restrict_to_face(const LaurentPoly& a, const Face& face, const CharacteristicMatrix& lambda) {
  return substitute_monomial_map(a, face_projection(face, lambda));
}

MembershipReport in_gamma(const GkmGraph& g, const FixedPointTuple& tuple) {
  if (tuple.size() != g.vertex_count())
    throw DimensionMismatch("tuple has " + std::to_string(tuple.size()) + " entries, graph has " +
                            std::to_string(g.vertex_count()) + " vertices");
  for (const auto& e : g.edges) {
    LaurentPoly diff = tuple[e.v] - tuple[e.w];
    if (diff.is_zero() || divides_one_minus(diff, e.u)) continue;
    MembershipWitness w;
    w.kind = MembershipWitness::Kind::Edge;
    w.i = e.v;
    w.l = e.w;
    w.u = e.u;
    w.difference = std::move(diff);
    return {false, std::move(w)};
  }
  return {};
}

JoinTable::JoinTable(const SimplePolytope& p, const CharacteristicMatrix& lambda)
    : m_(p.vertex_count()) {
  std::map<FacetSet, IntMatrix> by_facets;
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t l = i + 1; l < m_; ++l) {
      Face f = join(p, i, l);
      auto it = by_facets.find(f.facets);
      if (it == by_facets.end()) it = by_facets.emplace(f.facets, face_projection(f, lambda)).first;
      projections_.push_back(it->second);
      faces_.push_back(std::move(f));
    }
}

std::size_t JoinTable::slot(std::size_t i, std::size_t l) const {
  if (i == l || i >= m_ || l >= m_) throw DimensionMismatch("join needs two distinct vertices");
  if (i > l) std::swap(i, l);
  // Pairs (i, l), i < l, in row-major order.
  return i * m_ - i * (i + 1) / 2 + (l - i - 1);
}

const Face& JoinTable::face(std::size_t i, std::size_t l) const { return faces_[slot(i, l)]; }

const IntMatrix& JoinTable::projection(std::size_t i, std::size_t l) const {
  return projections_[slot(i, l)];
}

LaurentPoly JoinTable::restrict(const LaurentPoly& a, std::size_t i, std::size_t l) const {
  return substitute_monomial_map(a, projection(i, l));
}

MembershipReport in_w(const JoinTable& joins, const FixedPointTuple& tuple) {
  const std::size_t m = joins.vertex_count();
  if (tuple.size() != m)
    throw DimensionMismatch("tuple has " + std::to_string(tuple.size()) + " entries, polytope has " +
                            std::to_string(m) + " vertices");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = i + 1; l < m; ++l) {
      LaurentPoly diff = joins.restrict(tuple[i], i, l) - joins.restrict(tuple[l], i, l);
      if (diff.is_zero()) continue;
      MembershipWitness w;
      w.kind = MembershipWitness::Kind::Pair;
      w.i = i;
      w.l = l;
      w.face = joins.face(i, l).facets;
      w.difference = std::move(diff);
      return {false, std::move(w)};
    }
  return {};
}

MembershipReport in_w(const GkmGraph& g, const SimplePolytope& p,
                      const CharacteristicMatrix& lambda, const FixedPointTuple& tuple) {
  if (tuple.size() != g.vertex_count()) throw DimensionMismatch("tuple length does not match the graph");
  return in_w(JoinTable(p, lambda), tuple);
}

std::string to_dot(const GkmGraph& g, const VertexOrder* order) {
  const auto label = [&](std::size_t v) {
    return "v" + std::to_string((order ? order->position.at(v) : v) + 1);
  };
  std::ostringstream os;
  os << "graph gkm {\n";
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    const std::size_t v = order ? order->sequence.at(k) : k;
    os << "  " << label(v) << " [label=\"" << label(v) << "\", tooltip=\""
       << g.vertex_facets[v].to_string() << "\"];\n";
  }
  for (const auto& e : g.edges)
    os << "  " << label(e.v) << " -- " << label(e.w) << " [label=\"" << e.u.to_string() << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace quasik
