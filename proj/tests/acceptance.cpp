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

// Acceptance checks over the bundled inputs. Prints one PASS/FAIL line per
// criterion and exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "quasik/errors.hpp"
#include "quasik/facering.hpp"
#include "quasik/io.hpp"
#include "quasik/proptest.hpp"
#include "quasik_cli/cli.hpp"

namespace {

using namespace quasik;
using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kValidateSeconds = 1.0;
constexpr double kGammaWSeconds = 30.0;
constexpr double kInterpolateSeconds = 60.0;
constexpr double kRankSeconds = 60.0;
constexpr std::size_t kGammaWTuples = 500;
constexpr std::size_t kPhiElements = 200;
constexpr std::size_t kThetaCharacters = 50;
constexpr std::size_t kInterpolations = 200;
constexpr std::uint64_t kSeed = 20261014;

const std::vector<std::string> kInputs = {"cp1",       "cp2",       "cp3",       "square_h0",
                                          "square_h1", "square_h2", "square_h3", "cube"};

std::string path_of(const std::string& name) { return std::string(QUASIK_DATA_DIR) + "/" + name + ".json"; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (ok) detail.str("");
    if (ok) detail << what;
    ok = false;
  }
};

FaceRing ring_of(const InputDocument& doc) { return FaceRing(doc.polytope, doc.lambda, doc.use_bott); }

void criterion_validation(Outcome& out) {
  double worst = 0;
  for (const auto& name : kInputs) {
    const auto start = Clock::now();
    const auto doc = load_input(path_of(name));
    const bool ok = validate_simple(doc.polytope).ok() && validate_characteristic(doc.polytope, doc.lambda).ok();
    const double t = seconds_since(start);
    worst = std::max(worst, t);
    if (!ok) out.fail(name + " does not validate");
    if (t >= kValidateSeconds) out.fail(name + " took " + std::to_string(t) + " s");
  }
  const auto bad = load_input(path_of("bad_char"));
  const auto report = validate_characteristic(bad.polytope, bad.lambda);
  if (report.issues.size() != 1 || report.issues[0].message != "vertex {2,3}: det = 2")
    out.fail("bad_char does not report the det = 2 witness at {2,3}");
  if (out.ok) out.detail << "8 inputs valid, bad_char witness {2,3} det = 2, slowest " << worst << " s";
}

void criterion_gkm(Outcome& out) {
  std::size_t edges_checked = 0;
  for (const auto& name : kInputs) {
    const auto doc = load_input(path_of(name));
    const auto g = build_gkm(doc.polytope, doc.lambda);
    for (const auto& e : g.edges) {
      ++edges_checked;
      if (e.u.is_zero() || !e.u.is_primitive()) out.fail(name + ": edge character " + e.u.to_string() + " not primitive");
      if (e.facets.size() + 1 != doc.polytope.dim) out.fail(name + ": edge with wrong facet count");
      for (int f : e.facets)
        if (pairing(e.u, doc.lambda.lambda(f)) != 0) out.fail(name + ": edge character not orthogonal");
    }
    for (std::size_t j = 0; j < g.vertex_count(); ++j) {
      std::vector<const GkmEdge*> at;
      for (const auto& e : g.edges)
        if (e.v == j || e.w == j) at.push_back(&e);
      if (at.size() != doc.polytope.dim) out.fail(name + ": vertex degree is not n");
      for (std::size_t a = 0; a < at.size(); ++a)
        for (std::size_t b = a + 1; b < at.size(); ++b) {
          IntMatrix pair(2, doc.polytope.dim);
          for (std::size_t k = 0; k < doc.polytope.dim; ++k) {
            pair(0, k) = at[a]->u[k];
            pair(1, k) = at[b]->u[k];
          }
          if (rank(pair) != 2) out.fail(name + ": dependent characters at v" + std::to_string(j + 1));
        }
    }
    if (!euler_coprimality_check(g).ok()) out.fail(name + ": Euler class check failed");
  }
  if (out.ok) out.detail << edges_checked << " edges primitive, orthogonal and pairwise independent";
}

void criterion_gamma_w(Outcome& out) {
  double worst = 0;
  std::size_t members = 0;
  std::size_t nonmembers = 0;
  for (std::size_t input = 0; input < kInputs.size(); ++input) {
    const auto& name = kInputs[input];
    const auto start = Clock::now();
    const auto ring = ring_of(load_input(path_of(name)));
    std::size_t rejected = 0;
    for (std::size_t i = 0; i < kGammaWTuples; ++i) {
      Sampler s(derive_seed(kSeed, 3 * 100 + input, i));
      auto t = s.member_tuple(ring);
      const bool constructed = i % 2 == 0;
      if (!constructed) t = s.perturbed(ring, std::move(t));
      const bool g = in_gamma(ring.gkm(), t).member;
      const bool w = in_w(ring.joins(), t).member;
      if (g != w) out.fail(name + ": in_gamma and in_w disagree on case " + std::to_string(i));
      if (constructed && !g) out.fail(name + ": constructed member rejected");
      (g ? members : nonmembers) += 1;
      rejected += g ? 0 : 1;
    }
    if (rejected == 0) out.fail(name + ": no perturbed tuple left Gamma");
    const double t = seconds_since(start);
    worst = std::max(worst, t);
    if (t >= kGammaWSeconds) out.fail(name + " took " + std::to_string(t) + " s");
  }
  if (out.ok)
    out.detail << kGammaWTuples << " tuples per input, 100% agreement (" << members << " members, " << nonmembers
               << " non-members), slowest " << worst << " s";
}

void criterion_phi(Outcome& out) {
  for (std::size_t input = 0; input < kInputs.size(); ++input) {
    const auto& name = kInputs[input];
    const auto ring = ring_of(load_input(path_of(name)));
    for (std::size_t i = 0; i < kPhiElements; ++i) {
      Sampler s(derive_seed(kSeed, 4 * 100 + input, i));
      const auto p = s.face_ring_element(ring, 3, 2);
      const auto q = s.face_ring_element(ring, 3, 2);
      if (!(ring.phi(p * q) == ring.phi(p) * ring.phi(q))) out.fail(name + ": phi not multiplicative");
      if (!(ring.phi(p + q) == ring.phi(p) + ring.phi(q))) out.fail(name + ": phi not additive");
      if (!in_gamma(ring.gkm(), ring.phi(p)).member) out.fail(name + ": phi image outside Gamma");
    }
    for (std::size_t i = 0; i < kThetaCharacters; ++i) {
      Sampler s(derive_seed(kSeed, 4 * 100 + 50 + input, i));
      const auto u = s.character(ring.polytope().dim, 4);
      const auto expected = FixedPointTuple::diagonal(ring.vertex_count(), exp_character(ring.character_profile(), u));
      if (!(ring.phi(ring.theta(u)) == expected)) out.fail(name + ": phi(theta(u)) != Delta(e^u)");
    }
  }
  if (out.ok)
    out.detail << kPhiElements << " elements per input: exact ring map into Gamma; " << kThetaCharacters
               << " characters: phi(theta(u)) = Delta(e^u)";
}

void criterion_interpolation(Outcome& out) {
  double worst = 0;
  for (std::size_t input = 0; input < kInputs.size(); ++input) {
    const auto& name = kInputs[input];
    const auto start = Clock::now();
    const auto doc = load_input(path_of(name));
    const auto ring = ring_of(doc);
    const auto order = resolve_order(doc, true);
    for (std::size_t i = 0; i < kInterpolations; ++i) {
      Sampler s(derive_seed(kSeed, 5 * 100 + input, i));
      const auto p = s.face_ring_element(ring, 3, 2);
      const auto image = ring.phi(p);
      try {
        const auto result = ring.interpolate(image, order);
        if (!result.residual_check || !(ring.phi(result.poly) == image)) out.fail(name + ": phi(P') != phi(P)");
      } catch (const Error& e) {
        out.fail(name + ": " + e.what());
      }
    }
    const double t = seconds_since(start);
    worst = std::max(worst, t);
    if (t >= kInterpolateSeconds) out.fail(name + " took " + std::to_string(t) + " s");
  }
  if (out.ok)
    out.detail << kInterpolations << " height-order interpolations per input, all exact, slowest " << worst << " s";
}

void criterion_kernel(Outcome& out) {
  std::size_t count = 0;
  for (const auto& name : kInputs) {
    const auto ring = ring_of(load_input(path_of(name)));
    const auto gens = ring.kernel_generators();
    if (gens.size() != minimal_nonfaces(ring.polytope()).size()) out.fail(name + ": generator count");
    for (const auto& g : gens) {
      ++count;
      if (!ring.phi(g).is_zero()) out.fail(name + ": phi(" + g.to_string() + ") != 0");
    }
  }
  if (out.ok) out.detail << count << " minimal non-face generators map to the zero tuple";
}

void criterion_certificate(Outcome& out) {
  std::size_t elements = 0;
  for (const auto& name : kInputs) {
    const auto doc = load_input(path_of(name));
    const auto ring = ring_of(doc);
    const auto order = resolve_order(doc, true);
    const auto cert = ring.basis_certificate(order);
    if (!cert.report.ok()) out.fail(name + ": " + cert.report.issues.front().message);
    if (cert.entries.size() != ring.vertex_count()) out.fail(name + ": wrong number of basis elements");
    for (std::size_t t = 0; t < cert.entries.size(); ++t) {
      ++elements;
      const auto& e = cert.entries[t];
      if (e.support.size() != order.index[e.vertex]) out.fail(name + ": |S_t| != ind(v_t)");
      const auto image = ring.phi(e.omega);
      for (std::size_t s = 0; s < t; ++s)
        if (!image[order.sequence[s]].is_zero()) out.fail(name + ": not strictly triangular");
      if (image[e.vertex].is_zero()) out.fail(name + ": zero diagonal");
    }
  }
  if (out.ok) out.detail << elements << " basis elements, strictly triangular with nonzero diagonal, |S_t| = ind(v_t)";
}

void criterion_ordinary(Outcome& out) {
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"cp1", 2}, {"cp2", 3}, {"cp3", 4}, {"square_h0", 4}, {"square_h1", 4},
      {"square_h2", 4}, {"square_h3", 4}, {"cube", 8}};
  double worst = 0;
  std::ostringstream ranks;
  for (const auto& [name, m] : expected) {
    const auto start = Clock::now();
    const auto ring = ring_of(load_input(path_of(name)));
    const auto k = ring.ordinary_ring();
    if (k.rank() != m || k.rank() != ring.vertex_count())
      out.fail(name + ": rank " + std::to_string(k.rank()) + ", expected " + std::to_string(m));
    if (!k.torsion_free()) out.fail(name + ": torsion");
    ranks << (ranks.str().empty() ? "" : " ") << name << "=" << k.rank();
    if (name == "cp1" || name == "cp2") {
      const unsigned n = static_cast<unsigned>(ring.polytope().dim);
      const auto one = LaurentPoly::constant(ring.face_ring_profile(), 1);
      const auto x = one - LaurentPoly::variable(ring.face_ring_profile(), 0);
      if (k.is_zero(x.pow(n))) out.fail(name + ": (1-y)^n vanishes");
      if (!k.is_zero(x.pow(n + 1))) out.fail(name + ": (1-y)^(n+1) does not vanish");
    }
    const double t = seconds_since(start);
    worst = std::max(worst, t);
    if (t >= kRankSeconds) out.fail(name + " took " + std::to_string(t) + " s");
  }
  if (out.ok)
    out.detail << ranks.str() << ", torsion-free; CP1, CP2 match Z[y]/(1-y)^(n+1); slowest " << worst << " s";
}

void criterion_determinism(Outcome& out) {
  std::size_t runs = 0;
  for (const auto& name : {"cp2", "square_h3", "cube", "bad_order"}) {
    for (const char* format : {"", "--json"}) {
      std::vector<std::string> args{"quasik", "proptest", path_of(name), "--seed", "7", "--cases", "50"};
      if (*format) args.emplace_back(format);
      std::ostringstream a, b, err;
      const int ca = cli::run(args, a, err);
      const int cb = cli::run(args, b, err);
      ++runs;
      if (a.str() != b.str() || ca != cb) out.fail(std::string(name) + ": proptest reports differ");
      if (a.str().empty()) out.fail(std::string(name) + ": empty report");
    }
  }
  if (out.ok) out.detail << runs << " repeated proptest runs byte-identical (text and JSON)";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"validation", criterion_validation},
      {"gkm structure", criterion_gkm},
      {"gamma equals w", criterion_gamma_w},
      {"phi homomorphism and image", criterion_phi},
      {"interpolation", criterion_interpolation},
      {"kernel", criterion_kernel},
      {"freeness certificate", criterion_certificate},
      {"ordinary k-ring", criterion_ordinary},
      {"determinism", criterion_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first
              << "): " << out.detail.str() << std::endl;
    failures += out.ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
