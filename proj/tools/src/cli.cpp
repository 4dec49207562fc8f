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

#include "quasik_cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quasik/errors.hpp"
#include "quasik/facering.hpp"
#include "quasik/gkm.hpp"
#include "quasik/proptest.hpp"

namespace quasik::cli {

namespace {

struct Options {
  std::string input;
  std::string tuple;
  std::string dot;
  bool json = false;
  bool ordinary = false;
  std::uint64_t seed = 1;
  std::size_t cases = 100;
};

std::string vertex_name(std::size_t v) { return "v" + std::to_string(v + 1); }

std::string sequence_text(const std::vector<std::size_t>& seq) {
  std::string s = "[";
  for (std::size_t k = 0; k < seq.size(); ++k) s += (k ? "," : "") + std::to_string(seq[k] + 1);
  return s + "]";
}

Json sequence_json(const std::vector<std::size_t>& seq) {
  Json out = Json::array();
  for (auto v : seq) out.push_back(v + 1);
  return out;
}

Json lattice_json(const std::vector<Integer>& coords) {
  Json out = Json::array();
  for (const auto& x : coords) out.push_back(integer_to_json(x));
  return out;
}

Json facets_json(const FacetSet& s) { return Json(s.ids()); }

Json report_json(const ValidationReport& r) {
  Json issues = Json::array();
  for (const auto& i : r.issues) issues.push_back(Json{{"code", i.code}, {"message", i.message}});
  return Json{{"ok", r.ok()}, {"issues", std::move(issues)}};
}

void report_text(std::ostream& os, const std::string& label, const ValidationReport& r) {
  os << label << ": " << (r.ok() ? "ok" : "FAIL") << "\n";
  for (const auto& i : r.issues) os << "  " << i.code << ": " << i.message << "\n";
}

Json poly_json(const LaurentPoly& f) { return Json{{"text", f.to_string()}, {"terms", to_json(f)}}; }

Json witness_json(const MembershipReport& r) {
  if (r.member) return nullptr;
  const auto& w = *r.witness;
  Json j{{"kind", w.kind == MembershipWitness::Kind::Edge ? "edge" : "pair"}, {"i", w.i + 1}, {"l", w.l + 1}};
  if (w.kind == MembershipWitness::Kind::Edge)
    j["u"] = lattice_json(w.u.coords());
  else
    j["face"] = facets_json(w.face);
  j["difference"] = w.difference.to_string();
  j["description"] = w.describe();
  return j;
}

std::string input_name(const InputDocument& doc, const std::string& path) {
  return doc.name.empty() ? std::filesystem::path(path).stem().string() : doc.name;
}

/// Structural validation shared by every command that needs a valid input.
bool require_valid(const InputDocument& doc, Report& report, std::ostream& text) {
  const auto simple = validate_simple(doc.polytope);
  ValidationReport chars;
  if (simple.ok()) chars = validate_characteristic(doc.polytope, doc.lambda);
  if (simple.ok() && chars.ok()) return true;
  report.status = "fail";
  report.payload["validation"] = Json{{"simple", report_json(simple)},
                                      {"characteristic", simple.ok() ? report_json(chars) : Json(nullptr)}};
  report_text(text, "simple polytope", simple);
  if (simple.ok()) report_text(text, "characteristic matrix", chars);
  return false;
}

int cmd_validate(const InputDocument& doc, const Options&, Report& report, std::ostream& text) {
  const auto& p = doc.polytope;
  const auto simple = validate_simple(p);
  text << "simple polytope: " << (simple.ok() ? "ok" : "FAIL") << " (n = " << p.dim
       << ", d = " << p.facet_count << ", m = " << p.vertex_count() << ")\n";
  for (const auto& i : simple.issues) text << "  " << i.code << ": " << i.message << "\n";
  report.payload["simple"] = report_json(simple);
  bool ok = simple.ok();

  if (simple.ok()) {
    const auto chars = validate_characteristic(p, doc.lambda);
    report_text(text, "characteristic matrix", chars);
    report.payload["characteristic"] = report_json(chars);
    ok = ok && chars.ok();
  } else {
    report.payload["characteristic"] = nullptr;
  }

  Json order{{"given", doc.has_order()}};
  if (simple.ok() && doc.has_order()) {
    try {
      const auto o = resolve_order(doc, true);
      order["ok"] = true;
      order["sequence"] = sequence_json(o.sequence);
      text << "vertex order: ok " << sequence_text(o.sequence) << "\n";
    } catch (const InvalidOrder& e) {
      order["ok"] = false;
      order["message"] = e.what();
      text << "vertex order: FAIL\n  " << e.what() << "\n";
      ok = false;
    } catch (const NonGenericHeight& e) {
      order["ok"] = false;
      order["message"] = e.what();
      text << "vertex order: FAIL\n  " << e.what() << "\n";
      ok = false;
    }
  } else if (!doc.has_order()) {
    text << "vertex order: none given\n";
  }
  report.payload["order"] = std::move(order);
  report.status = ok ? "pass" : "fail";
  return ok ? kSuccess : kFailure;
}

int cmd_gkm(const InputDocument& doc, const Options& opts, Report& report, std::ostream& text) {
  if (!require_valid(doc, report, text)) return kFailure;
  const auto g = build_gkm(doc.polytope, doc.lambda);
  text << "GKM graph: " << g.vertex_count() << " vertices, " << g.edges.size() << " edges\n";

  Json vertices = Json::array();
  text << "vertices:\n";
  for (std::size_t j = 0; j < g.vertex_count(); ++j) {
    Json mu = Json::array();
    text << "  " << vertex_name(j) << " " << g.vertex_facets[j].to_string();
    for (const auto& [facet, m] : g.mu[j]) {
      mu.push_back(Json{{"facet", facet}, {"mu", lattice_json(m.coords())}});
      text << "  mu_" << facet << " = " << m.to_string();
    }
    text << "\n";
    vertices.push_back(Json{{"vertex", j + 1}, {"facets", facets_json(g.vertex_facets[j])}, {"mu", std::move(mu)}});
  }
  Json edges = Json::array();
  text << "edges:\n";
  for (const auto& e : g.edges) {
    text << "  " << vertex_name(e.v) << " -- " << vertex_name(e.w) << "  facets " << e.facets.to_string()
         << "  u = " << e.u.to_string() << "\n";
    edges.push_back(Json{{"v", e.v + 1}, {"w", e.w + 1}, {"facets", facets_json(e.facets)},
                         {"u", lattice_json(e.u.coords())}});
  }
  const auto euler = euler_coprimality_check(g);
  report_text(text, "edge characters", euler);
  report.payload["vertices"] = std::move(vertices);
  report.payload["edges"] = std::move(edges);
  report.payload["edge_characters"] = report_json(euler);

  if (!opts.dot.empty()) {
    std::optional<VertexOrder> order;
    if (doc.has_order()) order = resolve_order(doc, true);
    std::ofstream out(opts.dot, std::ios::binary);
    if (!out) throw InputError("cannot write " + opts.dot);
    out << to_dot(g, order ? &*order : nullptr);
    text << "dot: " << opts.dot << "\n";
    report.payload["dot"] = opts.dot;
  }
  report.status = euler.ok() ? "pass" : "fail";
  return euler.ok() ? kSuccess : kFailure;
}

int cmd_facering(const InputDocument& doc, const Options& opts, Report& report, std::ostream& text) {
  if (!require_valid(doc, report, text)) return kFailure;
  const FaceRing ring(doc.polytope, doc.lambda, doc.use_bott);
  const auto pres = opts.ordinary ? ring.ordinary_presentation() : ring.equivariant_presentation();

  text << "generators:";
  for (const auto& g : pres.generators) text << " " << g;
  text << "\nminimal non-faces: " << pres.nonfaces.size() << "\n";
  Json nonfaces = Json::array();
  for (std::size_t k = 0; k < pres.nonfaces.size(); ++k) {
    text << "  " << pres.nonfaces[k].to_string() << ": " << pres.j_generators[k].to_string() << "\n";
    nonfaces.push_back(Json{{"facets", facets_json(pres.nonfaces[k])}, {"generator", poly_json(pres.j_generators[k])}});
  }
  report.payload["generators"] = pres.generators;
  report.payload["minimal_nonfaces"] = std::move(nonfaces);

  text << "r-vectors:\n";
  Json rvectors = Json::array();
  for (int i = 1; i <= static_cast<int>(doc.polytope.facet_count); ++i) {
    const auto r = ring.r_vector(i);
    Json entries = Json::array();
    text << "  r" << i << " = (";
    for (std::size_t j = 0; j < r.size(); ++j) {
      text << (j ? ", " : "") << r[j].to_string();
      entries.push_back(r[j].to_string());
    }
    text << ")\n";
    rvectors.push_back(Json{{"facet", i}, {"entries", std::move(entries)}});
  }
  report.payload["r_vectors"] = std::move(rvectors);

  bool ok = true;
  const auto order = resolve_order(doc, false);
  Json order_json{{"sequence", sequence_json(order.sequence)}};
  if (auto bad = order_violation(doc.polytope, order)) {
    ok = false;
    order_json["ok"] = false;
    order_json["face"] = facets_json(bad->facets);
    text << "vertex order " << sequence_text(order.sequence) << ": FAIL, face "
         << (bad->is_whole() ? std::string("Q") : bad->facets.to_string()) << " has no unique lowest vertex\n";
  } else {
    order_json["ok"] = true;
  }
  report.payload["order"] = std::move(order_json);

  const auto cert = ring.basis_certificate(order);
  text << "basis certificate (order " << sequence_text(order.sequence) << "): " << (cert.report.ok() ? "ok" : "FAIL")
       << "\n";
  Json entries = Json::array();
  for (const auto& e : cert.entries) {
    text << "  t = " << e.position + 1 << "  " << vertex_name(e.vertex) << "  ind = " << e.support.size()
         << "  S = " << e.support.to_string() << "  omega = " << e.omega.to_string() << "\n";
    entries.push_back(Json{{"position", e.position + 1}, {"vertex", e.vertex + 1},
                           {"support", facets_json(e.support)}, {"omega", e.omega.to_string()}});
  }
  for (const auto& i : cert.report.issues) text << "  " << i.code << ": " << i.message << "\n";
  Json cert_json = report_json(cert.report);
  cert_json["entries"] = std::move(entries);
  report.payload["certificate"] = std::move(cert_json);
  ok = ok && cert.report.ok();

  if (opts.ordinary) {
    text << "lattice relations:\n";
    Json relations = Json::array();
    for (const auto& r : pres.lattice_relations) {
      text << "  " << r.to_string() << "\n";
      relations.push_back(r.to_string());
    }
    const auto rank = ring.ordinary_rank();
    text << "ordinary K-ring: rank " << rank.rank << ", "
         << (rank.torsion_free ? std::string("torsion-free") : std::string("torsion"));
    Json torsion = Json::array();
    for (const auto& t : rank.torsion) {
      text << " " << t;
      torsion.push_back(integer_to_json(t));
    }
    text << " (stable at truncation degree " << rank.degree << ")\n";
    report.payload["ordinary"] = Json{{"lattice_relations", std::move(relations)},
                                      {"rank", rank.rank},
                                      {"torsion_free", rank.torsion_free},
                                      {"torsion", std::move(torsion)},
                                      {"degree", rank.degree}};
  }
  report.status = ok ? "pass" : "fail";
  return ok ? kSuccess : kFailure;
}

FixedPointTuple load_input_tuple(const FaceRing& ring, const Options& opts) {
  return load_tuple(opts.tuple, ring.character_profile(), ring.vertex_count());
}

int cmd_membership(const InputDocument& doc, const Options& opts, Report& report, std::ostream& text) {
  if (!require_valid(doc, report, text)) return kFailure;
  const FaceRing ring(doc.polytope, doc.lambda, doc.use_bott);
  const auto tuple = load_input_tuple(ring, opts);
  const auto gamma = in_gamma(ring.gkm(), tuple);
  const auto w = in_w(ring.joins(), tuple);
  text << "Gamma (edge divisibility): " << (gamma.member ? "member" : "non-member") << "\n";
  if (!gamma.member) text << "  " << gamma.witness->describe() << "\n";
  text << "W (face agreement): " << (w.member ? "member" : "non-member") << "\n";
  if (!w.member) text << "  " << w.witness->describe() << "\n";
  report.payload["gamma"] = Json{{"member", gamma.member}, {"witness", witness_json(gamma)}};
  report.payload["w"] = Json{{"member", w.member}, {"witness", witness_json(w)}};
  report.payload["agree"] = gamma.member == w.member;
  const bool ok = gamma.member && w.member;
  report.status = ok ? "pass" : "fail";
  return ok ? kSuccess : kFailure;
}

int cmd_interpolate(const InputDocument& doc, const Options& opts, Report& report, std::ostream& text) {
  if (!require_valid(doc, report, text)) return kFailure;
  const FaceRing ring(doc.polytope, doc.lambda, doc.use_bott);
  const auto tuple = load_input_tuple(ring, opts);
  const auto order = resolve_order(doc, true);
  const auto result = ring.interpolate(tuple, order);
  text << "order: " << sequence_text(order.sequence) << "\n" << result.trace();
  text << "phi(P) equals the input: " << (result.residual_check ? "yes" : "no") << "\n";
  Json steps = Json::array();
  for (const auto& s : result.steps)
    steps.push_back(Json{{"position", s.position + 1}, {"vertex", s.vertex + 1}, {"piece", poly_json(s.piece)}});
  report.payload["order"] = sequence_json(order.sequence);
  report.payload["poly"] = poly_json(result.poly);
  report.payload["steps"] = std::move(steps);
  report.payload["verified"] = result.residual_check;
  report.status = result.residual_check ? "pass" : "fail";
  return result.residual_check ? kSuccess : kFailure;
}

int cmd_proptest(const InputDocument& doc, const Options& opts, Report& report, std::ostream& text) {
  if (!require_valid(doc, report, text)) return kFailure;
  const FaceRing ring(doc.polytope, doc.lambda, doc.use_bott);
  const auto order = resolve_order(doc, false);
  ProptestOptions po;
  po.seed = opts.seed;
  po.cases = opts.cases;
  const auto result = run_proptests(ring, order, doc.vertex_coords, po);
  text << result.to_string();
  report.payload = result.to_json();
  report.status = result.ok() ? "pass" : "fail";
  return result.ok() ? kSuccess : kFailure;
}

using Command = int (*)(const InputDocument&, const Options&, Report&, std::ostream&);

void emit(const Report& report, const Options& opts, std::ostream& out) {
  if (opts.json)
    out << report.to_json().dump(2) << "\n";
  else
    out << report.human_text;
}

}  // namespace

Json Report::to_json() const {
  return Json{{"command", command}, {"input", input}, {"status", status}, {"payload", payload},
              {"humanText", human_text}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Equivariant K-theory of quasitoric manifolds", "quasik"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opts.json, "Print a JSON report instead of text");

  const auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", opts.input, "Input document (JSON)")->required()->check(CLI::ExistingFile);
    return sub;
  };
  const auto with_tuple = [&](CLI::App* sub) {
    sub->add_option("tuple", opts.tuple, "Fixed-point tuple (JSON)")->required()->check(CLI::ExistingFile);
    return sub;
  };

  std::vector<std::pair<CLI::App*, Command>> commands;
  commands.emplace_back(with_input(app.add_subcommand("validate", "Check the polytope, Lambda and vertex order")),
                        cmd_validate);
  auto* gkm = with_input(app.add_subcommand("gkm", "Build the GKM graph"));
  gkm->add_option("--dot", opts.dot, "Write the graph in DOT format");
  commands.emplace_back(gkm, cmd_gkm);
  auto* facering = with_input(app.add_subcommand("facering", "Face ring presentation and basis certificate"));
  facering->add_flag("--ordinary", opts.ordinary, "Also compute the ordinary K-ring and its rank");
  commands.emplace_back(facering, cmd_facering);
  commands.emplace_back(with_tuple(with_input(app.add_subcommand("membership", "Test a tuple for Gamma and W"))),
                        cmd_membership);
  commands.emplace_back(with_tuple(with_input(app.add_subcommand("interpolate", "Find P with phi(P) = tuple"))),
                        cmd_interpolate);
  auto* proptest = with_input(app.add_subcommand("proptest", "Run the seeded property tests"));
  proptest->add_option("--seed", opts.seed, "Random seed");
  proptest->add_option("--cases", opts.cases, "Cases per suite");
  commands.emplace_back(proptest, cmd_proptest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  Report report;
  Command command = nullptr;
  for (const auto& [sub, fn] : commands)
    if (sub->parsed()) {
      report.command = sub->get_name();
      command = fn;
    }
  report.input = std::filesystem::path(opts.input).stem().string();

  std::ostringstream text;
  int code = kSuccess;
  std::string error;
  try {
    const auto doc = load_input(opts.input);
    report.input = input_name(doc, opts.input);
    text << "input: " << report.input << "\n";
    code = command(doc, opts, report, text);
    text << "result: " << (code == kSuccess ? "PASS" : "FAIL") << "\n";
  } catch (const InputError& e) {
    code = kInputError;
    error = e.what();
  } catch (const Error& e) {
    code = kFailure;
    error = e.what();
  } catch (const std::exception& e) {
    code = kFailure;
    error = std::string("internal error: ") + e.what();
  }
  if (!error.empty()) {
    err << "error: " << (code == kInputError ? opts.input + ": " : std::string()) << error << "\n";
    text << "error: " << error << "\n";
    report.status = code == kInputError ? "error" : "fail";
    report.payload["error"] = error;
  }
  report.human_text = text.str();
  if (opts.json || error.empty() || code == kFailure) emit(report, opts, out);
  return code;
}

}  // namespace quasik::cli
