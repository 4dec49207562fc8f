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

#include "quasik/proptest.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

#include "quasik/errors.hpp"

namespace quasik {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

enum Suite : std::uint64_t {
  kGammaEqualsW,
  kPhiHomomorphism,
  kPhiImageInGamma,
  kThetaCompatibility,
  kInterpolationRoundtrip,
  kKernel,
  kCertificate,
};

/// Runs `count` cases; the check returns an empty string on success and a
/// description otherwise. Library exceptions count as failures.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, Suite id, std::size_t count,
                      const std::function<std::string(Sampler&, std::size_t)>& check) {
  SuiteResult result{name, count, 0, std::nullopt};
  for (std::size_t i = 0; i < count; ++i) {
    Sampler sampler(derive_seed(seed, id, i));
    std::string problem;
    try {
      problem = check(sampler, i);
    } catch (const Error& e) {
      problem = e.what();
    }
    if (problem.empty()) {
      ++result.passed;
    } else if (!result.failure) {
      result.failure = "case " + std::to_string(i + 1) + ": " + problem;
    }
  }
  return result;
}

std::string certificate_problem(const FaceRing& ring, const VertexOrder& order) {
  const auto cert = ring.basis_certificate(order);
  if (cert.report.ok()) return {};
  const auto& issue = cert.report.issues.front();
  return issue.code + " " + issue.message;
}

std::string sequence_string(const VertexOrder& order) {
  std::string s = "[";
  for (std::size_t k = 0; k < order.sequence.size(); ++k)
    s += (k ? "," : "") + std::to_string(order.sequence[k] + 1);
  return s + "]";
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t suite, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ suite) ^ index);
}

long Sampler::uniform(long lo, long hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<long>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % range);
}

long Sampler::nonzero(long bound) {
  const long x = uniform(1, bound);
  return uniform(0, 1) ? x : -x;
}

std::vector<std::size_t> Sampler::permutation(std::size_t m) {
  std::vector<std::size_t> p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = i;
  for (std::size_t i = m; i > 1; --i)
    std::swap(p[i - 1], p[static_cast<std::size_t>(uniform(0, static_cast<long>(i) - 1))]);
  return p;
}

Character Sampler::character(std::size_t n, long bound) {
  Character u(n);
  for (std::size_t k = 0; k < n; ++k) u[k] = uniform(-bound, bound);
  return u;
}

LaurentPoly Sampler::face_ring_element(const FaceRing& ring, std::size_t max_terms, long bound) {
  const Profile profile = ring.face_ring_profile();
  LaurentPoly f(profile);
  const std::size_t terms = static_cast<std::size_t>(uniform(1, static_cast<long>(max_terms)));
  for (std::size_t k = 0; k < terms; ++k) {
    Exponent e(profile.var_count());
    for (std::size_t i = 0; i < ring.polytope().facet_count; ++i) e[i] = uniform(-bound, bound);
    f.add_term(e, nonzero(3));
  }
  return f;
}

FixedPointTuple Sampler::member_tuple(const FaceRing& ring) {
  const auto& g = ring.gkm();
  const std::size_t m = ring.vertex_count();
  const Profile profile = ring.character_profile();
  FixedPointTuple out = FixedPointTuple::zero(m, profile);
  const std::size_t terms = static_cast<std::size_t>(uniform(1, 3));
  for (std::size_t k = 0; k < terms; ++k) {
    const Integer c = nonzero(3);
    const Character u = character(g.dim, 2);
    std::vector<long> a(g.facet_count);
    for (auto& x : a) x = uniform(-1, 1);
    std::vector<LaurentPoly> entries;
    for (std::size_t j = 0; j < m; ++j) {
      Character w = u;
      for (std::size_t i = 0; i < g.facet_count; ++i)
        w = w + g.mu_of(j, static_cast<int>(i + 1)).scaled(a[i]);
      entries.push_back(exp_character(profile, w).scaled(c));
    }
    out += FixedPointTuple(std::move(entries));
  }
  return out;
}

FixedPointTuple Sampler::perturbed(const FaceRing& ring, FixedPointTuple tuple) {
  const auto& g = ring.gkm();
  const Profile profile = ring.character_profile();
  const std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long>(tuple.size()) - 1));
  LaurentPoly delta = exp_character(profile, character(g.dim, 2)).scaled(nonzero(3));
  if (uniform(0, 1)) {
    std::vector<const GkmEdge*> at;
    for (const auto& e : g.edges)
      if (e.v == j || e.w == j) at.push_back(&e);
    if (!at.empty()) {
      const auto& e = *at[static_cast<std::size_t>(uniform(0, static_cast<long>(at.size()) - 1))];
      delta *= one_minus_exp(profile, -e.u);
    }
  }
  tuple[j] += delta;
  return tuple;
}

std::optional<VertexOrder> Sampler::valid_order(
    const SimplePolytope& p, const std::optional<std::vector<std::vector<Rational>>>& coords,
    std::size_t attempts) {
  for (std::size_t k = 0; k < attempts; ++k) {
    try {
      if (coords) {
        std::vector<Rational> w(p.dim);
        for (auto& x : w) x = Rational(uniform(-50, 50));
        return vertex_order_from_heights(p, *coords, w);
      }
      return validate_order(p, permutation(p.vertex_count()));
    } catch (const NonGenericHeight&) {
    } catch (const InvalidOrder&) {
    }
  }
  return std::nullopt;
}

bool ProptestReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

std::string ProptestReport::to_string() const {
  std::ostringstream os;
  os << "proptest seed=" << seed << " cases=" << cases << "\n";
  for (const auto& s : suites) {
    std::ostringstream counts;
    counts << s.passed << "/" << s.cases;
    os << "  " << std::left << std::setw(26) << s.name << std::right << std::setw(10) << counts.str()
       << "  " << (s.ok() ? "ok" : "FAIL");
    if (s.failure) os << "  " << *s.failure;
    os << "\n";
  }
  os << "suites: " << (ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Json ProptestReport::to_json() const {
  Json suites_json = Json::array();
  for (const auto& s : suites) {
    Json j{{"name", s.name}, {"cases", s.cases}, {"passed", s.passed}, {"ok", s.ok()}};
    j["failure"] = s.failure ? Json(*s.failure) : Json(nullptr);
    suites_json.push_back(std::move(j));
  }
  return Json{{"seed", seed}, {"cases", cases}, {"ok", ok()}, {"suites", std::move(suites_json)}};
}

ProptestReport run_proptests(const FaceRing& ring, const VertexOrder& order,
                             const std::optional<std::vector<std::vector<Rational>>>& coords,
                             const ProptestOptions& options) {
  ProptestReport report;
  report.seed = options.seed;
  report.cases = options.cases;
  const std::size_t n = options.cases;
  const std::size_t m = ring.vertex_count();
  const auto& polytope = ring.polytope();

  report.suites.push_back(run_suite("gamma_equals_w", options.seed, kGammaEqualsW, n,
                                    [&](Sampler& s, std::size_t i) -> std::string {
    const bool member = i % 2 == 0;
    FixedPointTuple t = s.member_tuple(ring);
    if (!member) t = s.perturbed(ring, std::move(t));
    const auto gamma = in_gamma(ring.gkm(), t);
    const auto w = in_w(ring.joins(), t);
    if (gamma.member != w.member)
      return std::string("in_gamma says ") + (gamma.member ? "member" : "non-member") +
             ", in_w says " + (w.member ? "member" : "non-member");
    if (member && !gamma.member) return "constructed member rejected: " + gamma.witness->describe();
    return {};
  }));

  report.suites.push_back(run_suite("phi_homomorphism", options.seed, kPhiHomomorphism, n,
                                    [&](Sampler& s, std::size_t) -> std::string {
    const auto p = s.face_ring_element(ring, 3, 2);
    const auto q = s.face_ring_element(ring, 3, 2);
    if (!(ring.phi(p * q) == ring.phi(p) * ring.phi(q))) return "phi(PQ) != phi(P)phi(Q) for P = " + p.to_string();
    if (!(ring.phi(p + q) == ring.phi(p) + ring.phi(q))) return "phi(P+Q) != phi(P)+phi(Q) for P = " + p.to_string();
    return {};
  }));

  report.suites.push_back(run_suite("phi_image_in_gamma", options.seed, kPhiImageInGamma, n,
                                    [&](Sampler& s, std::size_t) -> std::string {
    const auto p = s.face_ring_element(ring, 3, 2);
    const auto r = in_gamma(ring.gkm(), ring.phi(p));
    return r.member ? std::string() : "phi(" + p.to_string() + ") fails " + r.witness->describe();
  }));

  report.suites.push_back(run_suite("theta_compatibility", options.seed, kThetaCompatibility, n,
                                    [&](Sampler& s, std::size_t) -> std::string {
    const Character u = s.character(polytope.dim, 3);
    const auto expected = FixedPointTuple::diagonal(m, exp_character(ring.character_profile(), u));
    return ring.phi(ring.theta(u)) == expected ? std::string() : "u = " + u.to_string();
  }));

  std::string order_problem;
  try {
    validate_order(polytope, order.sequence);
  } catch (const InvalidOrder& e) {
    order_problem = std::string("input order is not valid: ") + e.what();
  }
  report.suites.push_back(run_suite("interpolation_roundtrip", options.seed, kInterpolationRoundtrip, n,
                                    [&](Sampler& s, std::size_t) -> std::string {
    if (!order_problem.empty()) return order_problem;
    const auto p = s.face_ring_element(ring, 3, 2);
    const auto image = ring.phi(p);
    const auto result = ring.interpolate(image, order);
    if (!result.residual_check || !(ring.phi(result.poly) == image))
      return "phi(P') != phi(P) for P = " + p.to_string();
    if (!ring.phi(p - result.poly).is_zero()) return "P - P' is not in the kernel for P = " + p.to_string();
    return {};
  }));

  const auto generators = ring.kernel_generators();
  report.suites.push_back(run_suite("kernel", options.seed, kKernel, n,
                                    [&](Sampler& s, std::size_t i) -> std::string {
    if (generators.empty()) return {};
    const auto& g = generators[i % generators.size()];
    if (!ring.phi(g).is_zero()) return "phi(" + g.to_string() + ") != 0";
    const auto p = s.face_ring_element(ring, 3, 2);
    if (!ring.phi(g * p).is_zero()) return "phi(g P) != 0 for g = " + g.to_string();
    return {};
  }));

  const std::size_t orders = n == 0 ? 0 : 1 + std::min(options.certificate_orders, n - 1);
  report.suites.push_back(run_suite("certificate", options.seed, kCertificate, orders,
                                    [&](Sampler& s, std::size_t i) -> std::string {
    if (i == 0) {
      auto problem = certificate_problem(ring, order);
      return problem.empty() ? problem : "input order " + sequence_string(order) + ": " + problem;
    }
    auto random_order = s.valid_order(polytope, coords);
    if (!random_order) return "no valid order found";
    auto problem = certificate_problem(ring, *random_order);
    return problem.empty() ? problem : "order " + sequence_string(*random_order) + ": " + problem;
  }));

  return report;
}

}  // namespace quasik
