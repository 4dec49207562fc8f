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
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>
#include <unordered_set>

#include "quasik/errors.hpp"

namespace quasik {

namespace mp = boost::multiprecision;

FacetSet::FacetSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool FacetSet::contains(int facet) const {
  return std::binary_search(ids_.begin(), ids_.end(), facet);
}

bool FacetSet::includes(const FacetSet& sub) const {
  return std::includes(ids_.begin(), ids_.end(), sub.ids_.begin(), sub.ids_.end());
}

FacetSet FacetSet::intersect(const FacetSet& other) const {
  std::vector<int> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
  return FacetSet(std::move(out));
}

FacetSet FacetSet::minus(const FacetSet& other) const {
  std::vector<int> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out));
  return FacetSet(std::move(out));
}

FacetSet FacetSet::without(int facet) const { return minus(FacetSet{facet}); }

std::string FacetSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ids_[i]);
  }
  return s + "}";
}

IntMatrix CharacteristicMatrix::rows_of(const FacetSet& facets) const {
  IntMatrix m(facets.size(), dim);
  std::size_t r = 0;
  for (int f : facets) {
    const auto& l = lambda(f);
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = l[c];
    ++r;
  }
  return m;
}

IntMatrix CharacteristicMatrix::columns_of(const FacetSet& facets) const {
  return rows_of(facets).transpose();
}

namespace {

std::string vertex_name(std::size_t v) { return "v" + std::to_string(v + 1); }

// (n-1)-subset of facets -> vertices containing it.
std::map<FacetSet, std::vector<std::size_t>> ridge_owners(const SimplePolytope& p) {
  std::map<FacetSet, std::vector<std::size_t>> owners;
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    const auto& fs = p.vertices[v];
    for (int f : fs) owners[fs.without(f)].push_back(v);
  }
  return owners;
}

}  // namespace

ValidationReport validate_simple(const SimplePolytope& p) {
  ValidationReport report;
  const std::size_t n = p.dim;
  const std::size_t d = p.facet_count;
  if (n == 0) report.fail("dimension", "dimension must be at least 1");
  if (p.vertices.empty()) report.fail("vertices", "polytope has no vertices");

  std::vector<bool> seen(d + 1, false);
  bool shapes_ok = true;
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    const auto& fs = p.vertices[v];
    if (fs.size() != n) {
      report.fail("vertex-size", vertex_name(v) + " " + fs.to_string() + " has " +
                                     std::to_string(fs.size()) + " facets, expected " +
                                     std::to_string(n));
      shapes_ok = false;
    }
    for (int f : fs) {
      if (f < 1 || static_cast<std::size_t>(f) > d) {
        report.fail("facet-range", vertex_name(v) + " mentions facet " + std::to_string(f) +
                                       " outside 1.." + std::to_string(d));
        shapes_ok = false;
      } else {
        seen[static_cast<std::size_t>(f)] = true;
      }
    }
  }
  for (std::size_t f = 1; f <= d; ++f)
    if (!seen[f]) report.fail("unused-facet", "facet " + std::to_string(f) + " contains no vertex");

  std::map<FacetSet, std::size_t> first_seen;
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    auto [it, inserted] = first_seen.emplace(p.vertices[v], v);
    if (!inserted)
      report.fail("duplicate-vertex", vertex_name(v) + " repeats " + vertex_name(it->second) +
                                          " " + p.vertices[v].to_string());
  }
  if (!shapes_ok || n == 0 || p.vertices.empty()) return report;

  auto owners = ridge_owners(p);
  for (const auto& [ridge, vs] : owners)
    if (vs.size() > 2)
      report.fail("ridge-overfull", "facet set " + ridge.to_string() + " lies in " +
                                        std::to_string(vs.size()) + " vertices");
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    const auto& fs = p.vertices[v];
    for (int f : fs) {
      const auto& vs = owners[fs.without(f)];
      if (vs.size() == 1)
        report.fail("missing-neighbour", vertex_name(v) + " " + fs.to_string() + ": subset " +
                                             fs.without(f).to_string() +
                                             " is shared with no other vertex");
    }
  }

  // Connectivity of the edge graph.
  std::vector<std::vector<std::size_t>> adj(p.vertices.size());
  for (const auto& e : edges(p)) {
    adj[e.v].push_back(e.w);
    adj[e.w].push_back(e.v);
  }
  std::vector<bool> reached(p.vertices.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  reached[0] = true;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : adj[v])
      if (!reached[w]) {
        reached[w] = true;
        q.push(w);
      }
  }
  for (std::size_t v = 0; v < reached.size(); ++v)
    if (!reached[v]) {
      report.fail("disconnected", vertex_name(v) + " is not connected to v1 by edges");
      break;
    }
  return report;
}

bool is_face(const SimplePolytope& p, const FacetSet& s) {
  return std::any_of(p.vertices.begin(), p.vertices.end(),
                     [&](const FacetSet& v) { return v.includes(s); });
}

Face face_of(const SimplePolytope& p, const FacetSet& s) {
  Face face;
  std::optional<FacetSet> common;
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    if (!p.vertices[v].includes(s)) continue;
    face.vertices.push_back(v);
    common = common ? common->intersect(p.vertices[v]) : p.vertices[v];
  }
  if (!common) throw NotAFace("facets " + s.to_string() + " have empty intersection");
  face.facets = *common;
  return face;
}

std::vector<FacetSet> minimal_nonfaces(const SimplePolytope& p) {
  constexpr std::size_t kMaxFacets = 24;
  if (p.facet_count > kMaxFacets)
    throw TooManyFacets("minimal non-face enumeration supports at most " +
                        std::to_string(kMaxFacets) + " facets, got " +
                        std::to_string(p.facet_count));
  using Mask = std::uint32_t;
  const auto bit = [](int f) { return Mask{1} << (f - 1); };
  std::vector<Mask> vertex_masks;
  for (const auto& fs : p.vertices) {
    Mask m = 0;
    for (int f : fs) m |= bit(f);
    vertex_masks.push_back(m);
  }
  const auto mask_is_face = [&](Mask s) {
    return std::any_of(vertex_masks.begin(), vertex_masks.end(),
                       [s](Mask v) { return (v & s) == s; });
  };
  const auto to_set = [&](Mask s) {
    std::vector<int> ids;
    for (int f = 1; f <= static_cast<int>(p.facet_count); ++f)
      if (s & bit(f)) ids.push_back(f);
    return FacetSet(std::move(ids));
  };

  std::vector<FacetSet> out;
  std::vector<Mask> faces;  // faces of the current size
  for (int f = 1; f <= static_cast<int>(p.facet_count); ++f) {
    if (mask_is_face(bit(f)))
      faces.push_back(bit(f));
    else
      out.push_back(FacetSet{f});
  }
  while (!faces.empty()) {
    std::unordered_set<Mask> known(faces.begin(), faces.end());
    std::vector<Mask> next;
    std::vector<FacetSet> nonfaces;
    for (Mask s : faces) {
      const int top = 32 - __builtin_clz(s);
      for (int f = top + 1; f <= static_cast<int>(p.facet_count); ++f) {
        const Mask c = s | bit(f);
        bool all_faces = true;
        for (Mask rest = c; rest && all_faces; rest &= rest - 1) {
          const Mask drop = rest & (~rest + 1);
          if (!known.count(c & ~drop)) all_faces = false;
        }
        if (!all_faces) continue;
        if (mask_is_face(c))
          next.push_back(c);
        else
          nonfaces.push_back(to_set(c));
      }
    }
    std::sort(nonfaces.begin(), nonfaces.end());
    out.insert(out.end(), nonfaces.begin(), nonfaces.end());
    faces = std::move(next);
  }
  return out;
}

std::vector<Edge> edges(const SimplePolytope& p) {
  std::vector<Edge> out;
  if (p.dim == 0) return out;
  for (const auto& [ridge, vs] : ridge_owners(p)) {
    if (vs.size() != 2) continue;
    out.push_back({std::min(vs[0], vs[1]), std::max(vs[0], vs[1]), ridge});
  }
  std::sort(out.begin(), out.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.v, a.w) < std::tie(b.v, b.w); });
  return out;
}

Face join(const SimplePolytope& p, std::size_t v, std::size_t w) {
  FacetSet common = p.vertices.at(v).intersect(p.vertices.at(w));
  if (common.empty()) {
    Face whole;
    whole.vertices.resize(p.vertices.size());
    std::iota(whole.vertices.begin(), whole.vertices.end(), std::size_t{0});
    return whole;
  }
  return face_of(p, common);
}

ValidationReport validate_characteristic(const SimplePolytope& p, const CharacteristicMatrix& lambda) {
  ValidationReport report;
  if (lambda.rows.size() != p.facet_count) {
    report.fail("lambda-rows", "characteristic matrix has " + std::to_string(lambda.rows.size()) +
                                   " rows, polytope has " + std::to_string(p.facet_count) +
                                   " facets");
    return report;
  }
  bool shapes_ok = true;
  for (std::size_t i = 0; i < lambda.rows.size(); ++i) {
    const auto& l = lambda.rows[i];
    if (l.size() != p.dim) {
      report.fail("lambda-length", "lambda_" + std::to_string(i + 1) + " has length " +
                                       std::to_string(l.size()) + ", expected " +
                                       std::to_string(p.dim));
      shapes_ok = false;
    } else if (!l.is_primitive()) {
      report.fail("not-primitive", "lambda_" + std::to_string(i + 1) + " = " + l.to_string() +
                                       " is not primitive");
    }
  }
  if (!shapes_ok) return report;
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    const auto& fs = p.vertices[v];
    if (fs.size() != p.dim) continue;
    Integer det = determinant(lambda.rows_of(fs));
    if (mp::abs(det) != 1)
      report.fail("not-unimodular", "vertex " + fs.to_string() + ": det = " + Integer(mp::abs(det)).str());
  }
  return report;
}

VertexOrder order_from_sequence(const SimplePolytope& p, const std::vector<std::size_t>& sequence) {
  const std::size_t m = p.vertices.size();
  VertexOrder order;
  order.sequence = sequence;
  order.position.assign(m, m);
  if (sequence.size() != m) throw InvalidOrder("order must list each of the " + std::to_string(m) + " vertices once");
  for (std::size_t pos = 0; pos < m; ++pos) {
    const auto v = sequence[pos];
    if (v >= m || order.position[v] != m)
      throw InvalidOrder("order is not a permutation of the vertices");
    order.position[v] = pos;
  }
  order.index.assign(m, 0);
  order.incoming.assign(m, {});
  order.outgoing.assign(m, {});
  const auto es = edges(p);
  for (std::size_t id = 0; id < es.size(); ++id) {
    auto lo = es[id].v;
    auto hi = es[id].w;
    if (order.position[lo] > order.position[hi]) std::swap(lo, hi);
    order.outgoing[lo].push_back(id);
    order.incoming[hi].push_back(id);
    ++order.index[hi];
  }
  return order;
}

std::optional<Face> order_violation(const SimplePolytope& p, const VertexOrder& order) {
  const std::size_t m = p.vertices.size();
  std::set<FacetSet> seen;
  std::vector<Face> faces;
  const auto consider = [&](Face f) {
    if (seen.insert(f.facets).second) faces.push_back(std::move(f));
  };
  consider(face_of(p, FacetSet{}));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) consider(join(p, i, j));
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.facets.size() != b.facets.size() ? a.facets.size() > b.facets.size()
                                              : a.facets < b.facets;
  });

  const auto es = edges(p);
  for (const auto& face : faces) {
    std::set<std::size_t> members(face.vertices.begin(), face.vertices.end());
    std::size_t minima = 0;
    std::size_t maxima = 0;
    for (auto v : face.vertices) {
      bool lower = false, higher = false;
      for (const auto& e : es) {
        if (e.v != v && e.w != v) continue;
        const auto other = e.v == v ? e.w : e.v;
        if (!members.count(other)) continue;
        (order.position[other] < order.position[v] ? lower : higher) = true;
      }
      if (!lower) ++minima;
      if (!higher) ++maxima;
    }
    if (minima != 1 || (face.is_whole() && maxima != 1)) return face;
  }
  return std::nullopt;
}

VertexOrder validate_order(const SimplePolytope& p, const std::vector<std::size_t>& sequence) {
  VertexOrder order = order_from_sequence(p, sequence);
  if (auto bad = order_violation(p, order)) {
    std::string vs;
    for (auto v : bad->vertices) vs += (vs.empty() ? "" : ",") + vertex_name(v);
    throw InvalidOrder("face " + (bad->is_whole() ? std::string("Q") : bad->facets.to_string()) +
                       " (vertices " + vs + ") has no unique lowest vertex");
  }
  return order;
}

VertexOrder vertex_order_from_heights(const SimplePolytope& p,
                                      const std::vector<std::vector<Rational>>& coords,
                                      const std::vector<Rational>& w) {
  const std::size_t m = p.vertices.size();
  if (coords.size() != m) throw InputError("need one coordinate vector per vertex");
  std::vector<Rational> h(m);
  for (std::size_t v = 0; v < m; ++v) {
    if (coords[v].size() != w.size())
      throw InputError("coordinates of " + vertex_name(v) + " do not match the height vector");
    for (std::size_t k = 0; k < w.size(); ++k) h[v] += coords[v][k] * w[k];
  }
  for (const auto& e : edges(p))
    if (h[e.v] == h[e.w])
      throw NonGenericHeight("height is constant on the edge " + vertex_name(e.v) + "-" +
                             vertex_name(e.w));
  std::vector<std::size_t> seq(m);
  std::iota(seq.begin(), seq.end(), std::size_t{0});
  std::stable_sort(seq.begin(), seq.end(), [&](std::size_t a, std::size_t b) { return h[a] < h[b]; });
  return validate_order(p, seq);
}

}  // namespace quasik
