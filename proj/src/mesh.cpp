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

#include "qcy/mesh.hpp"

namespace qcy {

MeshReport validate_mesh(const MeshData& m) {
  MeshReport rep;
  int arrows = m.quiver.arrow_count();
  if (m.mu.size() != m.quiver.vertex_count()) {
    rep.valid = false;
    rep.problems.push_back("mu acts on the wrong number of vertices");
    return rep;
  }
  if (static_cast<int>(m.tau.rows()) != arrows || static_cast<int>(m.tau.cols()) != arrows) {
    rep.valid = false;
    rep.problems.push_back("tau is not square over the arrow basis");
    return rep;
  }
  VertexPermutation mu_inv = m.mu.inverse();
  for (int x = 0; x < arrows; ++x) {
    const Arrow& ax = m.quiver.arrow(x);
    for (int y = 0; y < arrows; ++y) {
      if (m.tau.at(x, y).is_zero()) continue;
      const Arrow& ay = m.quiver.arrow(y);
      // tau(e_i V e_j) subset e_{mu^{-1}(j)} V e_i for x: i -> j.
      if (ay.source != mu_inv(ax.target) || ay.target != ax.source) {
        rep.valid = false;
        rep.problems.push_back("tau(" + ax.label + ") hits arrow " + ay.label +
                               " outside the block e" + std::to_string(mu_inv(ax.target) + 1) +
                               " -> e" + std::to_string(ax.source + 1));
      }
    }
  }
  if (rep.valid && !m.tau.invertible()) {
    rep.valid = false;
    rep.problems.push_back("tau is not invertible");
  }
  return rep;
}

AlgebraElement potential(const MeshData& m) {
  MeshReport rep = validate_mesh(m);
  if (!rep.valid) {
    std::string msg = "invalid mesh data";
    for (const std::string& p : rep.problems) msg += "; " + p;
    throw structural_error(msg);
  }
  std::vector<AlgebraElement::Term> terms;
  for (int x = 0; x < m.quiver.arrow_count(); ++x)
    for (int y = 0; y < m.quiver.arrow_count(); ++y) {
      const Scalar& c = m.tau.at(x, y);
      if (c.is_zero()) continue;
      terms.emplace_back(make_path(m.quiver, {y, x}), c);  // tau(x) x term y.x
    }
  return AlgebraElement::from_terms(std::move(terms));
}

std::vector<HomogeneousRelation> mesh_relations(const MeshData& m) {
  AlgebraElement omega = potential(m);
  int n = m.quiver.vertex_count();
  std::vector<std::vector<AlgebraElement::Term>> split(n);
  for (const auto& [p, c] : omega.terms())
    split[path_target(m.quiver, p)].emplace_back(p, c);
  std::vector<HomogeneousRelation> out;
  for (int j = 0; j < n; ++j) {
    AlgebraElement component = AlgebraElement::from_terms(std::move(split[j]));
    if (component.is_zero())
      throw degeneracy_error("potential component at vertex e" + std::to_string(j + 1) +
                             " vanishes");
    out.emplace_back(m.quiver, std::move(component));
  }
  return out;
}

std::string family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::An: return "An";
    case FamilyTag::Bn: return "Bn";
    case FamilyTag::Aq: return "A(q)";
    case FamilyTag::Bq: return "B(q)";
    case FamilyTag::J: return "J";
    case FamilyTag::Dq: return "D(q)";
  }
  return "?";
}

namespace {

void require_nonzero(const Scalar& q) {
  if (q.is_zero()) throw structural_error("family parameters must be nonzero");
}

FamilyInstance finish(FamilyTag tag, Quiver quiver, VertexPermutation mu, ScalarMatrix tau) {
  FamilyInstance fi;
  fi.tag = tag;
  fi.quiver = quiver;
  fi.mesh = MeshData{std::move(quiver), std::move(mu), std::move(tau)};
  fi.relations = mesh_relations(fi.mesh);
  return fi;
}

}  // namespace

FamilyInstance construct_an(int n, const std::vector<Scalar>& q) {
  if (n < 1) throw structural_error("An needs n >= 1");
  if (static_cast<int>(q.size()) != n) throw structural_error("An needs n parameters");
  for (const Scalar& v : q) require_nonzero(v);
  Quiver quiver(n);
  // a_i: e_i -> e_{i+1} first, then the reverse arrows a_i*.
  for (int i = 0; i < n; ++i) quiver.add_arrow("a" + std::to_string(i), i, (i + 1) % n);
  for (int i = 0; i < n; ++i) quiver.add_arrow("a" + std::to_string(i) + "*", (i + 1) % n, i);
  int m = quiver.arrow_count();
  ScalarMatrix tau(m, m);
  for (int i = 0; i < n; ++i) {
    // tau(a_i) = -q_{i+1} a_i*,  tau(a_i*) = a_i.
    tau.at(i, n + i) = -q[(i + 1) % n];
    tau.at(n + i, i) = Scalar(1);
  }
  return finish(FamilyTag::An, std::move(quiver), VertexPermutation::identity(n), std::move(tau));
}

FamilyInstance construct_bn(int n, const std::vector<Scalar>& q) {
  if (n < 2) throw structural_error("Bn needs n >= 2");
  if (static_cast<int>(q.size()) != n) throw structural_error("Bn needs n parameters");
  for (const Scalar& v : q) require_nonzero(v);
  Quiver quiver(n);
  for (int i = 0; i < n; ++i) quiver.add_arrow("a" + std::to_string(i), i, (i + 1) % n);
  for (int i = 0; i < n; ++i) quiver.add_arrow("b" + std::to_string(i), i, i);
  int m = quiver.arrow_count();
  ScalarMatrix tau(m, m);
  for (int i = 0; i < n; ++i) {
    // tau(a_i) = b_i,  tau(b_i) = -q_{i-1} a_{i-1};  mu(i) = i+1.
    tau.at(i, n + i) = Scalar(1);
    tau.at(n + i, (i + n - 1) % n) = -q[(i + n - 1) % n];
  }
  return finish(FamilyTag::Bn, std::move(quiver), VertexPermutation::cycle(n), std::move(tau));
}

FamilyInstance construct_two_vertex(FamilyTag tag, const Scalar& q) {
  require_nonzero(q);
  if (tag == FamilyTag::Aq || tag == FamilyTag::Dq) {
    // Two arrows each way: a, c: e1 -> e2 and b, d: e2 -> e1.
    Quiver quiver(2);
    quiver.add_arrow("a", 0, 1);
    quiver.add_arrow("b", 1, 0);
    quiver.add_arrow("c", 0, 1);
    quiver.add_arrow("d", 1, 0);
    int a = 0, b = 1, c = 2, d = 3;
    ScalarMatrix tau(4, 4);
    if (tag == FamilyTag::Aq) {
      // omega = ba + ab - q dc - cd, giving (ab - cd, ba - q dc).
      tau.at(a, b) = Scalar(1);
      tau.at(b, a) = Scalar(1);
      tau.at(c, d) = -q;
      tau.at(d, c) = Scalar(-1);
    } else {
      // omega = ba + ab - q dc - (a+c)d, giving (ab - (a+c)d, ba - q dc).
      tau.at(a, b) = Scalar(1);
      tau.at(b, a) = Scalar(1);
      tau.at(c, d) = -q;
      tau.at(d, a) = Scalar(-1);
      tau.at(d, c) = Scalar(-1);
    }
    return finish(tag, std::move(quiver), VertexPermutation::identity(2), std::move(tau));
  }
  if (tag == FamilyTag::J || tag == FamilyTag::Bq) {
    // Loops a at e1 and c at e2, plus b: e1 -> e2 and d: e2 -> e1.
    Quiver quiver(2);
    quiver.add_arrow("a", 0, 0);
    quiver.add_arrow("b", 0, 1);
    quiver.add_arrow("c", 1, 1);
    quiver.add_arrow("d", 1, 0);
    int a = 0, b = 1, c = 2, d = 3;
    ScalarMatrix tau(4, 4);
    if (tag == FamilyTag::J) {
      // omega = a^2 - db + c^2 - bd, giving (a^2 - bd, c^2 - db).
      tau.at(a, a) = Scalar(1);
      tau.at(b, d) = Scalar(-1);
      tau.at(c, c) = Scalar(1);
      tau.at(d, b) = Scalar(-1);
      return finish(tag, std::move(quiver), VertexPermutation::identity(2), std::move(tau));
    }
    // B(q): omega = -q da + ab - bc + cd, giving (ab - bc, cd - q da).
    tau.at(a, d) = -q;
    tau.at(b, a) = Scalar(1);
    tau.at(c, b) = Scalar(-1);
    tau.at(d, c) = Scalar(1);
    return finish(tag, std::move(quiver), VertexPermutation::transposition(2, 0, 1), std::move(tau));
  }
  throw structural_error("not a two-vertex family tag");
}

FamilyInstance construct_family(const FamilyParams& params) {
  std::vector<Scalar> q(params.q.begin(), params.q.end());
  switch (params.tag) {
    case FamilyTag::An: return construct_an(params.n, q);
    case FamilyTag::Bn: return construct_bn(params.n, q);
    case FamilyTag::J:
      if (!q.empty()) throw structural_error("J takes no parameter");
      return construct_two_vertex(FamilyTag::J, Scalar(1));
    case FamilyTag::Aq:
    case FamilyTag::Bq:
    case FamilyTag::Dq:
      if (q.size() != 1) throw structural_error("this family takes exactly one parameter");
      return construct_two_vertex(params.tag, q[0]);
  }
  throw structural_error("unknown family tag");
}

CyPolynomial cy_polynomial(const MeshData& m) {
  return CyPolynomial{adjacency(m.quiver), m.mu};
}

}  // namespace qcy
