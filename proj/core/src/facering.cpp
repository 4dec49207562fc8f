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

#include "quasik/facering.hpp"

#include <map>
#include <sstream>

#include "quasik/errors.hpp"

namespace quasik {

namespace {

std::string join_issues(const ValidationReport& report) {
  std::string s;
  for (const auto& issue : report.issues) s += (s.empty() ? "" : "; ") + issue.message;
  return s;
}

const SimplePolytope& checked(const SimplePolytope& p, const CharacteristicMatrix& lambda) {
  auto shape = validate_simple(p);
  if (!shape.ok()) throw InputError("polytope is not simple: " + join_issues(shape));
  auto chars = validate_characteristic(p, lambda);
  if (!chars.ok()) throw InputError("characteristic matrix is invalid: " + join_issues(chars));
  return p;
}

LaurentPoly product_one_minus(Profile profile, const FacetSet& facets) {
  LaurentPoly out = LaurentPoly::constant(profile, 1);
  const LaurentPoly one = LaurentPoly::constant(profile, 1);
  for (int f : facets)
    out *= one - LaurentPoly::variable(profile, static_cast<std::size_t>(f - 1));
  return out;
}

}  // namespace

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "generators:";
  for (const auto& g : generators) os << " " << g;
  os << "\nideal J (minimal non-faces):\n";
  for (std::size_t i = 0; i < j_generators.size(); ++i)
    os << "  " << nonfaces[i].to_string() << ": " << j_generators[i].to_string() << "\n";
  if (!lattice_relations.empty()) {
    os << "lattice relations:\n";
    for (const auto& r : lattice_relations) os << "  " << r.to_string() << "\n";
  }
  return os.str();
}

std::string InterpolationResult::trace() const {
  std::ostringstream os;
  for (const auto& s : steps)
    os << "step " << s.position + 1 << " (v" << s.vertex + 1 << "): p = " << s.piece.to_string() << "\n";
  os << "P = " << poly.to_string() << "\n";
  return os.str();
}

void BasisCertificate::require_ok() const {
  if (!report.ok()) throw CertificateFailure(report.issues.front().message);
}

FaceRing::FaceRing(SimplePolytope polytope, CharacteristicMatrix lambda, bool bott)
    : polytope_(std::move(polytope)),
      lambda_(std::move(lambda)),
      bott_(bott),
      gkm_(build_gkm(checked(polytope_, lambda_), lambda_)),
      joins_(polytope_, lambda_) {
  const std::size_t n = polytope_.dim;
  const std::size_t d = polytope_.facet_count;
  for (std::size_t j = 0; j < vertex_count(); ++j) {
    weights_.push_back(gkm_.weight_matrix(j));
    IntMatrix rewrite(d, n);
    for (int f : polytope_.vertices[j])
      for (std::size_t c = 0; c < n; ++c)
        rewrite(static_cast<std::size_t>(f - 1), c) = lambda_.lambda(f)[c];
    rewrites_.push_back(std::move(rewrite));
  }
}

LaurentPoly FaceRing::theta(const Character& u) const {
  if (u.size() != polytope_.dim) throw DimensionMismatch("character has the wrong length");
  Exponent e(face_ring_profile().var_count());
  for (std::size_t i = 0; i < polytope_.facet_count; ++i) e[i] = pairing(u, lambda_.rows[i]);
  return LaurentPoly::monomial(face_ring_profile(), std::move(e));
}

FixedPointTuple FaceRing::r_vector(int facet) const {
  std::vector<LaurentPoly> entries;
  for (std::size_t j = 0; j < vertex_count(); ++j)
    entries.push_back(exp_character(character_profile(), gkm_.mu_of(j, facet)));
  return FixedPointTuple(std::move(entries));
}

LaurentPoly FaceRing::phi_at(const LaurentPoly& element, std::size_t vertex) const {
  if (!(element.profile() == face_ring_profile()))
    throw ProfileMismatch("phi expects a face-ring element in y_1..y_d");
  return substitute_monomial_map(element, weights_.at(vertex), character_profile());
}

FixedPointTuple FaceRing::phi(const LaurentPoly& element) const {
  std::vector<LaurentPoly> entries;
  entries.reserve(vertex_count());
  for (std::size_t j = 0; j < vertex_count(); ++j) entries.push_back(phi_at(element, j));
  return FixedPointTuple(std::move(entries));
}

InterpolationResult FaceRing::interpolate(const FixedPointTuple& tuple, const VertexOrder& order) const {
  if (tuple.size() != vertex_count())
    throw DimensionMismatch("tuple has " + std::to_string(tuple.size()) + " entries, expected " +
                            std::to_string(vertex_count()));
  for (const auto& e : tuple.entries())
    if (!(e.profile() == character_profile()))
      throw ProfileMismatch("tuple entries must use the character variables");
  if (auto w = in_w(joins_, tuple); !w.member)
    throw NotInW("tuple is not in W_X: " + w.witness->describe());

  InterpolationResult result;
  result.poly = LaurentPoly(face_ring_profile());
  FixedPointTuple residual = tuple;
  for (std::size_t t = 0; t < order.sequence.size(); ++t) {
    const std::size_t v = order.sequence[t];
    // e^u = prod_k e^{<u, lambda_k> mu^v_k} over the facets through v.
    LaurentPoly piece = substitute_monomial_map(residual[v], rewrites_[v], face_ring_profile());
    residual -= phi(piece);
    for (std::size_t s = 0; s <= t; ++s) {
      const std::size_t w = order.sequence[s];
      if (!residual[w].is_zero())
        throw ResidualNonzero("step " + std::to_string(t + 1) + ": residual at v" +
                              std::to_string(w + 1) + " (position " + std::to_string(s + 1) +
                              ") is " + residual[w].to_string());
    }
    result.poly += piece;
    result.steps.push_back({t, v, std::move(piece)});
  }
  result.residual_check = phi(result.poly) == tuple;
  if (!result.residual_check) throw ResidualNonzero("phi(P) does not reproduce the input tuple");
  return result;
}

std::vector<LaurentPoly> FaceRing::kernel_generators() const {
  std::vector<LaurentPoly> out;
  for (const auto& s : minimal_nonfaces(polytope_)) out.push_back(product_one_minus(face_ring_profile(), s));
  return out;
}

BasisCertificate FaceRing::basis_certificate(const VertexOrder& order) const {
  BasisCertificate cert;
  const auto& es = gkm_.edges;
  std::vector<FixedPointTuple> images;
  for (std::size_t t = 0; t < order.sequence.size(); ++t) {
    const std::size_t v = order.sequence[t];
    const FacetSet& facets = polytope_.vertices[v];
    FacetSet spanned = facets;
    for (auto id : order.incoming[v]) spanned = spanned.intersect(es[id].facets);
    CertificateEntry entry{t, v, facets.minus(spanned), {}};
    entry.omega = product_one_minus(face_ring_profile(), entry.support);
    if (entry.support.size() != order.index[v])
      cert.report.fail("support-size", "position " + std::to_string(t + 1) + ": |S| = " +
                                           std::to_string(entry.support.size()) + " but ind = " +
                                           std::to_string(order.index[v]));
    FixedPointTuple image = phi(entry.omega);
    for (std::size_t s = 0; s < t; ++s) {
      const auto& value = image[order.sequence[s]];
      if (!value.is_zero())
        cert.report.fail("not-triangular", "(t, s) = (" + std::to_string(t + 1) + ", " +
                                               std::to_string(s + 1) + "): omega_t restricts to " +
                                               value.to_string() + " at v" +
                                               std::to_string(order.sequence[s] + 1));
    }
    LaurentPoly diagonal = LaurentPoly::constant(character_profile(), 1);
    const LaurentPoly one = diagonal;
    for (int i : entry.support) diagonal *= one - exp_character(character_profile(), gkm_.mu_of(v, i));
    if (diagonal.is_zero() || !(image[v] == diagonal))
      cert.report.fail("bad-diagonal", "(t, t) = (" + std::to_string(t + 1) + ", " +
                                           std::to_string(t + 1) + "): omega_t restricts to " +
                                           image[v].to_string());
    cert.entries.push_back(std::move(entry));
  }
  return cert;
}

Presentation FaceRing::equivariant_presentation() const {
  Presentation p;
  for (std::size_t i = 0; i < polytope_.facet_count; ++i) p.generators.push_back("y" + std::to_string(i + 1));
  p.nonfaces = minimal_nonfaces(polytope_);
  for (const auto& s : p.nonfaces) p.j_generators.push_back(product_one_minus(face_ring_profile(), s));
  return p;
}

Presentation FaceRing::ordinary_presentation() const {
  Presentation p = equivariant_presentation();
  for (std::size_t k = 0; k < polytope_.dim; ++k) {
    Character e(polytope_.dim);
    e[k] = 1;
    p.lattice_relations.push_back(theta(e) - LaurentPoly::constant(face_ring_profile(), 1));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Truncated power series model of the ordinary K-ring.

namespace {

class Truncation {
 public:
  Truncation(std::size_t vars, std::size_t degree) : vars_(vars), degree_(degree) {
    std::vector<int> e(vars, 0);
    for (std::size_t total = 0; total <= degree; ++total) enumerate(e, 0, static_cast<int>(total));
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  std::size_t size() const { return monomials_.size(); }
  const std::vector<std::vector<int>>& monomials() const { return monomials_; }

  using Series = std::vector<Integer>;

  Series constant(const Integer& c) const {
    Series s(size());
    s[0] = c;
    return s;
  }
  Series one_plus_x(std::size_t var) const {
    Series s = constant(1);
    if (degree_ >= 1) {
      std::vector<int> e(vars_, 0);
      e[var] = 1;
      s[index_.at(e)] = 1;
    }
    return s;
  }
  // (1 + x)^{-1} = sum_k (-x)^k
  Series inverse_one_plus_x(std::size_t var) const {
    Series s(size());
    std::vector<int> e(vars_, 0);
    for (std::size_t k = 0; k <= degree_; ++k) {
      e[var] = static_cast<int>(k);
      s[index_.at(e)] = (k % 2 == 0) ? 1 : -1;
    }
    return s;
  }

  Series mul(const Series& a, const Series& b) const {
    Series out(size());
    std::vector<int> e(vars_);
    for (std::size_t i = 0; i < size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < size(); ++j) {
        if (b[j] == 0) continue;
        if (degree_of(i) + degree_of(j) > degree_) continue;
        for (std::size_t k = 0; k < vars_; ++k) e[k] = monomials_[i][k] + monomials_[j][k];
        out[index_.at(e)] += a[i] * b[j];
      }
    }
    return out;
  }

  Series pow(const Series& base, const Series& inverse, long k) const {
    const Series& b = k < 0 ? inverse : base;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    Series result = constant(1);
    Series sq = b;
    while (e) {
      if (e & 1ul) result = mul(result, sq);
      e >>= 1ul;
      if (e) sq = mul(sq, sq);
    }
    return result;
  }

  // x^alpha * s, truncated.
  Series shift(const Series& s, std::size_t alpha) const {
    Series unit(size());
    unit[alpha] = 1;
    return mul(unit, s);
  }

 private:
  std::size_t degree_of(std::size_t i) const {
    std::size_t d = 0;
    for (int x : monomials_[i]) d += static_cast<std::size_t>(x);
    return d;
  }

  void enumerate(std::vector<int>& e, std::size_t var, int remaining) {
    if (var + 1 >= vars_) {
      if (vars_ == 0) {
        if (remaining == 0) monomials_.push_back(e);
        return;
      }
      e[var] = remaining;
      monomials_.push_back(e);
      e[var] = 0;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[var] = k;
      enumerate(e, var + 1, remaining - k);
    }
    e[var] = 0;
  }

  std::size_t vars_;
  std::size_t degree_;
  std::vector<std::vector<int>> monomials_;
  std::map<std::vector<int>, std::size_t> index_;
};

}  // namespace

std::vector<Integer> OrdinaryKRing::expand(const LaurentPoly& element) const {
  if (element.profile().kind != VariableKind::FaceRing || element.profile().count != facet_count_)
    throw ProfileMismatch("ordinary K-ring elements are Laurent polynomials in y_1..y_d");
  Truncation trunc(free_facets_.size(), degree_);
  std::vector<Integer> total(trunc.size());
  for (const auto& [exps, c] : element.terms()) {
    auto term = trunc.constant(c);
    for (std::size_t i = 0; i < facet_count_; ++i) {
      if (exps[i] == 0) continue;
      term = trunc.mul(term, trunc.pow(y_series_[i], y_inv_series_[i], exps[i].convert_to<long>()));
    }
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += term[k];
  }
  return total;
}

bool OrdinaryKRing::is_zero(const LaurentPoly& element) const {
  const auto s = expand(element);
  const IntMatrix& V = relations_.V;
  const std::size_t r = relations_.rank();
  for (std::size_t j = 0; j < s.size(); ++j) {
    Integer w = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != 0) w += s[i] * V(i, j);
    if (j < r ? (w % relations_.D(j, j) != 0) : (w != 0)) return false;
  }
  return true;
}

OrdinaryKRing FaceRing::ordinary_ring_at(std::size_t degree) const {
  OrdinaryKRing ring;
  ring.degree_ = degree;
  ring.facet_count_ = polytope_.facet_count;
  const FacetSet& base = polytope_.vertices.front();
  for (int f = 1; f <= static_cast<int>(polytope_.facet_count); ++f)
    if (!base.contains(f)) ring.free_facets_.push_back(f);

  Truncation trunc(ring.free_facets_.size(), degree);
  ring.monomials_ = trunc.monomials();
  ring.y_series_.assign(polytope_.facet_count, {});
  ring.y_inv_series_.assign(polytope_.facet_count, {});
  for (std::size_t k = 0; k < ring.free_facets_.size(); ++k) {
    const auto i = static_cast<std::size_t>(ring.free_facets_[k] - 1);
    ring.y_series_[i] = trunc.one_plus_x(k);
    ring.y_inv_series_[i] = trunc.inverse_one_plus_x(k);
  }
  // prod_i y_i^{<mu_b, lambda_i>} = 1 with <mu_b, lambda_c> = delta_bc on the
  // base vertex, so y_b = prod_{free i} y_i^{-<mu_b, lambda_i>}.
  for (int b : base) {
    const Character mu = gkm_.mu_of(0, b);
    auto y = trunc.constant(1);
    auto y_inv = trunc.constant(1);
    for (std::size_t k = 0; k < ring.free_facets_.size(); ++k) {
      const int f = ring.free_facets_[k];
      const long e = pairing(mu, lambda_.lambda(f)).convert_to<long>();
      const auto i = static_cast<std::size_t>(f - 1);
      y = trunc.mul(y, trunc.pow(ring.y_series_[i], ring.y_inv_series_[i], -e));
      y_inv = trunc.mul(y_inv, trunc.pow(ring.y_series_[i], ring.y_inv_series_[i], e));
    }
    ring.y_series_[static_cast<std::size_t>(b - 1)] = std::move(y);
    ring.y_inv_series_[static_cast<std::size_t>(b - 1)] = std::move(y_inv);
  }

  const Profile plain = Profile::face_ring(polytope_.facet_count);
  std::vector<std::vector<Integer>> rows;
  for (const auto& s : minimal_nonfaces(polytope_)) {
    const auto g = ring.expand(product_one_minus(plain, s));
    for (std::size_t alpha = 0; alpha < trunc.size(); ++alpha) {
      auto row = trunc.shift(g, alpha);
      bool zero = true;
      for (const auto& x : row) zero = zero && x == 0;
      if (!zero) rows.push_back(std::move(row));
    }
  }
  ring.relations_ = snf(IntMatrix::from_rows(rows, trunc.size()));
  const auto factors = ring.relations_.invariant_factors();
  ring.rank_ = trunc.size() - factors.size();
  for (const auto& f : factors)
    if (f != 1) ring.torsion_.push_back(f);
  return ring;
}

OrdinaryKRing FaceRing::ordinary_ring() const {
  const std::size_t n = polytope_.dim;
  const std::size_t d = polytope_.facet_count;
  const std::size_t cap = n * (d - n) + n + 1;
  OrdinaryKRing previous = ordinary_ring_at(0);
  for (std::size_t degree = 1; degree <= cap; ++degree) {
    OrdinaryKRing current = ordinary_ring_at(degree);
    if (current.rank() == previous.rank() && current.torsion() == previous.torsion()) return current;
    previous = std::move(current);
  }
  throw TruncationUnstable("rank and torsion did not stabilise up to degree " + std::to_string(cap));
}

OrdinaryRank FaceRing::ordinary_rank() const {
  OrdinaryKRing ring = ordinary_ring();
  return {ring.rank(), ring.torsion_free(), ring.torsion(), ring.degree()};
}

}  // namespace quasik
