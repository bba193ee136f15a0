// Copyright (c) 2026 The qcy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcy/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "qcy/acceptance.hpp"
#include "qcy/iso.hpp"
#include "qcy/textio.hpp"

namespace qcy::cli {

namespace {

struct JobConfig {
  std::string family;
  int n = 0;
  std::string q_list;
  std::string p_list;
  std::string input_path;
  std::string order_list;   // descending precedence, comma separated
  std::string emit = "mesh";
  std::string adjacency;    // rows split by ';', entries by ','
  std::string nakayama;     // "id", "swap", or comma-separated images
  std::string expect;       // "", "true" or "false"
  bool show_witness = false;
  int degree = 0;
};

int default_degree() {
  if (const char* env = std::getenv("QCY_DEGREE")) {
    int v = std::atoi(env);
    if (v >= 2) return v;
  }
  return 12;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) out.push_back(parse_scalar(cur).to_rational());
  if (out.empty()) throw parse_error("empty parameter list");
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  return out;
}

FamilyTag tag_from_name(const std::string& name) {
  if (name == "an") return FamilyTag::An;
  if (name == "bn") return FamilyTag::Bn;
  if (name == "aq") return FamilyTag::Aq;
  if (name == "bq") return FamilyTag::Bq;
  if (name == "j") return FamilyTag::J;
  if (name == "dq") return FamilyTag::Dq;
  throw parse_error("unknown family '" + name + "' (an, bn, aq, bq, j, dq)");
}

FamilyInstance family_from_config(const JobConfig& cfg) {
  FamilyTag tag = tag_from_name(cfg.family);
  FamilyParams params;
  params.tag = tag;
  if (tag == FamilyTag::An || tag == FamilyTag::Bn) {
    params.q = parse_rational_list(cfg.q_list);
    params.n = cfg.n > 0 ? cfg.n : static_cast<int>(params.q.size());
    if (params.n != static_cast<int>(params.q.size()))
      throw parse_error("--n disagrees with the length of --q");
  } else if (tag != FamilyTag::J) {
    params.q = parse_rational_list(cfg.q_list);
    if (params.q.size() != 1) throw parse_error("this family takes a single --q value");
  }
  return construct_family(params);
}

// The quiver, relations and (optionally) mesh data a subcommand works on.
struct Workload {
  Quiver quiver;
  std::vector<HomogeneousRelation> relations;
  bool has_mesh = false;
  MeshData mesh;
};

Workload load_workload(const JobConfig& cfg) {
  Workload w;
  if (!cfg.family.empty()) {
    FamilyInstance fi = family_from_config(cfg);
    w.quiver = fi.quiver;
    w.relations = fi.relations;
    w.has_mesh = true;
    w.mesh = fi.mesh;
    return w;
  }
  if (cfg.input_path.empty()) throw parse_error("need --family or --input");
  PresentationFile pf = parse_presentation(read_file(cfg.input_path));
  w.quiver = pf.quiver;
  if (pf.has_tau) {
    if (!pf.has_mu) throw parse_error("a tau section needs a mu section");
    w.has_mesh = true;
    w.mesh = MeshData{pf.quiver, pf.mu, pf.tau};
    w.relations = mesh_relations(w.mesh);
  }
  for (const AlgebraElement& e : pf.relations) w.relations.emplace_back(pf.quiver, e);
  if (w.relations.empty()) throw parse_error("input defines no relations");
  return w;
}

MonomialOrder order_from_config(const JobConfig& cfg, const Quiver& q) {
  if (cfg.order_list.empty()) return MonomialOrder::from_declaration(q);
  return MonomialOrder::from_descending_labels(q, split_list(cfg.order_list));
}

CyPolynomial cy_from_config(const JobConfig& cfg, const Workload* w) {
  if (!cfg.adjacency.empty()) {
    std::vector<std::string> rows;
    std::string cur;
    std::istringstream in(cfg.adjacency);
    while (std::getline(in, cur, ';')) rows.push_back(cur);
    std::size_t n = rows.size();
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<std::string> entries = split_list(rows[r]);
      if (entries.size() != n) throw parse_error("--adjacency must be square");
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = Int(entries[c]);
    }
    VertexPermutation perm;
    if (cfg.nakayama.empty() || cfg.nakayama == "id" || cfg.nakayama == "identity") {
      perm = VertexPermutation::identity(static_cast<int>(n));
    } else if (cfg.nakayama == "swap") {
      if (n != 2) throw parse_error("'swap' needs a 2x2 matrix");
      perm = VertexPermutation::transposition(2, 0, 1);
    } else {
      std::vector<int> images;
      for (const std::string& s : split_list(cfg.nakayama)) images.push_back(std::stoi(s));
      try {
        perm = VertexPermutation(images);
      } catch (const structural_error& e) {
        throw parse_error(std::string("bad --nakayama: ") + e.what());
      }
    }
    return CyPolynomial{std::move(m), std::move(perm)};
  }
  if (w == nullptr || !w->has_mesh)
    throw parse_error("need mesh data (family, mesh file, or --adjacency/--nakayama)");
  return cy_polynomial(w->mesh);
}

int apply_expectation(const JobConfig& cfg, bool value, std::ostream& err) {
  if (cfg.expect.empty()) return kOk;
  bool expected;
  if (cfg.expect == "true" || cfg.expect == "yes") {
    expected = true;
  } else if (cfg.expect == "false" || cfg.expect == "no") {
    expected = false;
  } else {
    throw parse_error("--expect takes true or false");
  }
  if (value == expected) return kOk;
  err << "expectation failed: computed " << (value ? "true" : "false") << "\n";
  return kExpectationFailed;
}

std::string serialize_witness(const GradedMap& f, const Quiver& src, const Quiver& tgt) {
  std::ostringstream out;
  out << "sigma:";
  for (int v = 0; v < f.sigma.size(); ++v)
    out << (v ? ", " : " ") << "e" << (v + 1) << "->e" << (f.sigma(v) + 1);
  out << "\n";
  for (int x = 0; x < src.arrow_count(); ++x) {
    std::vector<AlgebraElement::Term> terms;
    for (int y = 0; y < tgt.arrow_count(); ++y)
      if (!f.arrow_matrix.at(x, y).is_zero())
        terms.emplace_back(make_path(tgt, {y}), f.arrow_matrix.at(x, y));
    out << src.arrow(x).label << " -> "
        << serialize_element(tgt, AlgebraElement::from_terms(std::move(terms))) << "\n";
  }
  return out.str();
}

int cmd_construct(const JobConfig& cfg, std::ostream& out) {
  FamilyInstance fi = family_from_config(cfg);
  if (cfg.emit == "quiver") {
    out << serialize_quiver(fi.quiver);
  } else if (cfg.emit == "relations") {
    out << serialize_quiver(fi.quiver);
    for (const HomogeneousRelation& r : fi.relations)
      out << "relation " << serialize_element(fi.quiver, r.element()) << "\n";
  } else if (cfg.emit == "mesh") {
    out << serialize_mesh_file(fi.quiver, fi.mesh.mu, fi.mesh.tau);
  } else {
    throw parse_error("--emit takes quiver, relations or mesh");
  }
  return kOk;
}

int cmd_gb(const JobConfig& cfg, std::ostream& out) {
  Workload w = load_workload(cfg);
  RewriteSystem rs = complete(w.quiver, w.relations, order_from_config(cfg, w.quiver), cfg.degree);
  out << "rules: " << rs.rules.size() << " (confluent to degree " << rs.confluent_to << ")\n";
  for (const RewriteRule& r : rs.rules) out << rule_str(rs, r) << "\n";
  for (const std::string& n : rs.notices) out << "note: " << n << "\n";
  return kOk;
}

int cmd_hilbert(const JobConfig& cfg, std::ostream& out) {
  Workload w = load_workload(cfg);
  CyPolynomial cp = cy_from_config(cfg, &w);
  RewriteSystem rs = complete(w.quiver, w.relations, order_from_config(cfg, w.quiver), cfg.degree);
  out << "closed form (I - Mt + Pt^2)^{-1}:\n"
      << serialize_series(closed_form_series(cp, cfg.degree).coeffs);
  out << "algebra series:\n" << serialize_series(algebra_series(rs, cfg.degree).coeffs);
  return kOk;
}

int cmd_cy_check(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  Workload w = load_workload(cfg);
  CyPolynomial cp = cy_from_config(cfg, &w);
  RewriteSystem rs = complete(w.quiver, w.relations, order_from_config(cfg, w.quiver), cfg.degree);
  Cy2Report rep = cy2_check(rs, cp, cfg.degree);
  if (rep.ok)
    out << "PASS: matrix series agree up to degree " << cfg.degree << "\n";
  else
    out << "FAIL: " << rep.str() << "\n";
  return apply_expectation(cfg, rep.ok, err);
}

int cmd_gk_check(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  CyPolynomial cp = [&] {
    if (!cfg.adjacency.empty()) return cy_from_config(cfg, nullptr);
    Workload w = load_workload(cfg);
    return cy_from_config(cfg, &w);
  }();
  IntPoly det = cy_determinant(cp);
  bool finite = finite_gk_check(cp);
  out << "det(I - Mt + Pt^2) = " << det.str() << "\n";
  out << (finite ? "all roots on the unit circle: finite GK dimension\n"
                 : "roots off the unit circle: infinite GK dimension\n");
  return apply_expectation(cfg, finite, err);
}

int cmd_iso(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  FamilyTag tag = tag_from_name(cfg.family);
  std::vector<Rational> p = parse_rational_list(cfg.p_list);
  std::vector<Rational> q = parse_rational_list(cfg.q_list);
  IsoVerdict v;
  FamilyInstance fsrc, ftgt;
  bool have_quivers = false;
  if (tag == FamilyTag::An || tag == FamilyTag::Bn) {
    v = tag == FamilyTag::An ? an_iso_decide(p, q) : bn_iso_decide(p, q);
    if (v.witness) {
      int n = static_cast<int>(p.size());
      fsrc = tag == FamilyTag::An ? construct_an(n, {p.begin(), p.end()})
                                  : construct_bn(n, {p.begin(), p.end()});
      ftgt = tag == FamilyTag::An ? construct_an(n, {q.begin(), q.end()})
                                  : construct_bn(n, {q.begin(), q.end()});
      have_quivers = true;
    }
  } else if (tag == FamilyTag::Aq || tag == FamilyTag::Bq || tag == FamilyTag::Dq) {
    if (p.size() != 1 || q.size() != 1) throw parse_error("this family takes single parameters");
    v = two_param_iso_decide(tag, Scalar(p[0]), Scalar(q[0]));
    if (v.witness) {
      fsrc = construct_two_vertex(tag, Scalar(p[0]));
      ftgt = construct_two_vertex(tag, Scalar(q[0]));
      have_quivers = true;
    }
  } else {
    throw parse_error("iso decides an, bn, aq, bq or dq");
  }
  out << (v.isomorphic ? "isomorphic" : "not isomorphic") << " (" << v.certificate << ")\n";
  if (cfg.show_witness && v.witness && have_quivers)
    out << serialize_witness(*v.witness, fsrc.quiver, ftgt.quiver);
  return apply_expectation(cfg, v.isomorphic, err);
}

int cmd_classify(const JobConfig& cfg, std::ostream& out) {
  PresentationFile pf = parse_presentation(read_file(cfg.input_path));
  if (!pf.has_tau || !pf.has_mu) throw parse_error("classify needs mu and tau sections");
  ClassificationResult r = classify_two_vertex(MeshData{pf.quiver, pf.mu, pf.tau});
  out << r.str() << "\n";
  return kOk;
}

int cmd_enumerate(const JobConfig& cfg, std::ostream& out) {
  if (cfg.n != 0 && cfg.n != 2)
    throw parse_error("only the two-vertex inventory is implemented");
  for (const TwoVertexCase& c : enumerate_cy2_matrices()) {
    out << "M = [[" << c.adjacency.at(0, 0).get_str() << "," << c.adjacency.at(0, 1).get_str()
        << "],[" << c.adjacency.at(1, 0).get_str() << "," << c.adjacency.at(1, 1).get_str()
        << "]]  P:";
    for (std::size_t i = 0; i < c.admissible.size(); ++i)
      out << (i ? ", " : " ") << (c.admissible[i].is_identity() ? "identity" : "swap");
    out << "\n";
  }
  return kOk;
}

int cmd_verify_paper(std::ostream& out) {
  std::vector<acceptance::CriterionResult> results = acceptance::run_all();
  out << acceptance::render(results);
  for (const acceptance::CriterionResult& r : results)
    if (!r.pass) return kExpectationFailed;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computation with quadratic quiver algebras"};
  app.require_subcommand(1);
  JobConfig cfg;
  cfg.degree = default_degree();

  auto add_common = [&](CLI::App* sub, bool with_input) {
    sub->add_option("--family", cfg.family, "family tag: an, bn, aq, bq, j, dq");
    sub->add_option("--n", cfg.n, "number of vertices for an/bn");
    sub->add_option("--q", cfg.q_list, "comma-separated parameters");
    sub->add_option("--degree,-d", cfg.degree, "truncation degree");
    if (with_input) sub->add_option("--input", cfg.input_path, "presentation or mesh file");
  };

  CLI::App* construct = app.add_subcommand("construct", "build a named family member");
  add_common(construct, false);
  construct->add_option("--emit", cfg.emit, "quiver, relations or mesh");

  CLI::App* gb = app.add_subcommand("gb", "complete the relations to a rewriting system");
  add_common(gb, true);
  gb->add_option("--order", cfg.order_list, "arrow precedence, largest first");

  CLI::App* hilbert = app.add_subcommand("hilbert", "closed-form and algebra series");
  add_common(hilbert, true);
  hilbert->add_option("--order", cfg.order_list, "arrow precedence, largest first");

  CLI::App* cy = app.add_subcommand("cy-check", "compare the two series");
  add_common(cy, true);
  cy->add_option("--order", cfg.order_list, "arrow precedence, largest first");
  cy->add_option("--expect", cfg.expect, "true or false");

  CLI::App* gk = app.add_subcommand("gk-check", "cyclotomic unit-circle test");
  add_common(gk, true);
  gk->add_option("--adjacency", cfg.adjacency, "rows like 0,2;2,0");
  gk->add_option("--nakayama", cfg.nakayama, "id, swap, or image list");
  gk->add_option("--expect", cfg.expect, "true or false");

  CLI::App* iso = app.add_subcommand("iso", "decide a family isomorphism");
  add_common(iso, false);
  iso->add_option("--p", cfg.p_list, "left parameters");
  iso->add_flag("--witness", cfg.show_witness, "print the witness map");
  iso->add_option("--expect", cfg.expect, "true or false");

  CLI::App* classify = app.add_subcommand("classify", "classify a two-vertex mesh");
  classify->add_option("--mesh,--input", cfg.input_path, "mesh file")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "admissible two-vertex cases");
  enumerate->add_option("--vertices", cfg.n, "vertex count (2)");

  CLI::App* verify = app.add_subcommand("verify-paper", "run the whole verification battery");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "argument error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (construct->parsed()) return cmd_construct(cfg, out);
    if (gb->parsed()) return cmd_gb(cfg, out);
    if (hilbert->parsed()) return cmd_hilbert(cfg, out);
    if (cy->parsed()) return cmd_cy_check(cfg, out, err);
    if (gk->parsed()) return cmd_gk_check(cfg, out, err);
    if (iso->parsed()) return cmd_iso(cfg, out, err);
    if (classify->parsed()) return cmd_classify(cfg, out);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out);
    if (verify->parsed()) return cmd_verify_paper(out);
    err << "no subcommand\n";
    return kInputError;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const parse_error& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace qcy::cli
