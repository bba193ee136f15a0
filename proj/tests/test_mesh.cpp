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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcy/iso.hpp"
#include "qcy/mesh.hpp"
#include "qcy/textio.hpp"

using namespace qcy;

TEST_CASE("potential of the diagonal loop mesh") {
  FamilyInstance j = construct_family({FamilyTag::J, 2, {}});
  AlgebraElement omega = potential(j.mesh);
  CHECK(omega == parse_element(j.quiver, "a^2 - d*b + c^2 - b*d"));
}

TEST_CASE("potential of the shear mesh") {
  FamilyInstance d = construct_two_vertex(FamilyTag::Dq, Scalar(3));
  AlgebraElement omega = potential(d.mesh);
  CHECK(omega == parse_element(d.quiver, "b*a + a*b - 3*d*c - a*d - c*d"));
}

TEST_CASE("loop-cycle component relations") {
  FamilyInstance b3 = construct_bn(3, {Scalar(2), Scalar(3), Scalar(5)});
  REQUIRE(b3.relations.size() == 3);
  // Component at target j is b_{j-1} a_{j-1} - q_{j-1} a_{j-1} b_j.
  CHECK(b3.relations[1].element() == parse_element(b3.quiver, "b0*a0 - 2*a0*b1"));
  CHECK(b3.relations[2].element() == parse_element(b3.quiver, "b1*a1 - 3*a1*b2"));
  CHECK(b3.relations[0].element() == parse_element(b3.quiver, "b2*a2 - 5*a2*b0"));
}

TEST_CASE("cycle family component relations") {
  FamilyInstance a3 = construct_an(3, {Scalar(2), Scalar(3), Scalar(5)});
  REQUIRE(a3.relations.size() == 3);
  CHECK(a3.relations[0].element() == parse_element(a3.quiver, "a0*a0* - 2*a2**a2"));
  CHECK(a3.relations[1].element() == parse_element(a3.quiver, "a1*a1* - 3*a0**a0"));
  CHECK(a3.relations[2].element() == parse_element(a3.quiver, "a2*a2* - 5*a1**a1"));
}

TEST_CASE("two-vertex constructions give the expected relations") {
  FamilyInstance aq = construct_two_vertex(FamilyTag::Aq, Scalar(Rational(7, 2)));
  CHECK(aq.relations[0].element() == parse_element(aq.quiver, "a*b - c*d"));
  CHECK(aq.relations[1].element() == parse_element(aq.quiver, "b*a - 7/2*d*c"));

  FamilyInstance bq = construct_two_vertex(FamilyTag::Bq, Scalar(4));
  CHECK(bq.relations[1].element() == parse_element(bq.quiver, "a*b - b*c"));
  CHECK(bq.relations[0].element() == parse_element(bq.quiver, "c*d - 4*d*a"));

  FamilyInstance jj = construct_family({FamilyTag::J, 2, {}});
  CHECK(jj.relations[0].element() == parse_element(jj.quiver, "a^2 - b*d"));
  CHECK(jj.relations[1].element() == parse_element(jj.quiver, "c^2 - d*b"));
}

TEST_CASE("smallest cycle family is a quantum plane") {
  FamilyInstance a1 = construct_an(1, {Scalar(Rational(5, 3))});
  REQUIRE(a1.relations.size() == 1);
  CHECK(a1.quiver.arrow_count() == 2);
  CHECK(a1.relations[0].element() == parse_element(a1.quiver, "a0*a0* - 5/3*a0**a0"));
}

TEST_CASE("unit parameters give the symmetric relations") {
  FamilyInstance pre = construct_an(4, std::vector<Scalar>(4, Scalar(1)));
  for (int i = 0; i < 4; ++i) {
    std::string si = std::to_string(i), sj = std::to_string((i + 3) % 4);
    std::string rel = "a" + si + "*a" + si + "* - a" + sj + "**a" + sj;
    CHECK(pre.relations[i].element() == parse_element(pre.quiver, rel));
  }
}

TEST_CASE("potential decomposes as the sum of its components") {
  for (FamilyTag tag : {FamilyTag::Aq, FamilyTag::Bq, FamilyTag::Dq}) {
    FamilyInstance fi = construct_two_vertex(tag, Scalar(Rational(3, 7)));
    AlgebraElement sum;
    for (const HomogeneousRelation& r : fi.relations) sum += r.element();
    CHECK(sum == potential(fi.mesh));
  }
  FamilyInstance a4 = construct_an(4, {Scalar(1), Scalar(2), Scalar(3), Scalar(4)});
  AlgebraElement sum;
  for (const HomogeneousRelation& r : a4.relations) sum += r.element();
  CHECK(sum == potential(a4.mesh));
}

TEST_CASE("mesh validation reports the violation") {
  FamilyInstance j = construct_family({FamilyTag::J, 2, {}});
  CHECK(validate_mesh(j.mesh).valid);

  MeshData zero_row = j.mesh;
  for (int c = 0; c < 4; ++c) zero_row.tau.at(1, c) = Scalar(0);
  MeshReport rep = validate_mesh(zero_row);
  CHECK_FALSE(rep.valid);
  REQUIRE(rep.problems.size() == 1);
  CHECK(rep.problems[0].find("not invertible") != std::string::npos);

  MeshData wrong_block = j.mesh;
  wrong_block.tau.at(0, 1) = Scalar(1);  // tau(a) picks up the 0 -> 1 arrow
  rep = validate_mesh(wrong_block);
  CHECK_FALSE(rep.valid);
  REQUIRE(rep.problems.size() == 1);
  CHECK(rep.problems[0].find("tau(a) hits arrow b") != std::string::npos);
  CHECK_THROWS_AS(potential(wrong_block), structural_error);
}

TEST_CASE("a vertex with no incident arrows degenerates the potential") {
  Quiver q(2);
  q.add_arrow("x", 0, 0);
  ScalarMatrix tau(1, 1);
  tau.at(0, 0) = Scalar(1);
  MeshData m{q, VertexPermutation::identity(2), tau};
  CHECK(validate_mesh(m).valid);
  CHECK_THROWS_AS(mesh_relations(m), degeneracy_error);
}

TEST_CASE("family parameters must be nonzero") {
  CHECK_THROWS_AS(construct_two_vertex(FamilyTag::Aq, Scalar(0)), structural_error);
  CHECK_THROWS_AS(construct_an(3, {Scalar(1), Scalar(0), Scalar(1)}), structural_error);
  CHECK_THROWS_AS(construct_bn(1, {Scalar(1)}), structural_error);
  CHECK_THROWS_AS(construct_family({FamilyTag::Aq, 2, {}}), structural_error);
}

TEST_CASE("every named family passes the dimension-two criterion") {
  std::vector<FamilyInstance> all;
  all.push_back(construct_an(3, {Scalar(1), Scalar(Rational(2, 3)), Scalar(5)}));
  all.push_back(construct_bn(2, {Scalar(2), Scalar(Rational(1, 4))}));
  all.push_back(construct_two_vertex(FamilyTag::Aq, Scalar(Rational(5, 2))));
  all.push_back(construct_two_vertex(FamilyTag::Bq, Scalar(3)));
  all.push_back(construct_two_vertex(FamilyTag::Dq, Scalar(Rational(1, 6))));
  all.push_back(construct_family({FamilyTag::J, 2, {}}));
  for (const FamilyInstance& fi : all) {
    RewriteSystem rs =
        complete(fi.quiver, fi.relations, MonomialOrder::from_declaration(fi.quiver), 8);
    Cy2Report rep = cy2_check(rs, cy_polynomial(fi.mesh), 8);
    CAPTURE(family_name(fi.tag));
    CHECK(rep.ok);
  }
}

TEST_CASE("rescaling the whole of tau keeps the ideal") {
  FamilyInstance d = construct_two_vertex(FamilyTag::Dq, Scalar(Rational(4, 3)));
  MeshData scaled = d.mesh;
  for (std::size_t r = 0; r < scaled.tau.rows(); ++r)
    for (std::size_t c = 0; c < scaled.tau.cols(); ++c)
      scaled.tau.at(r, c) *= Scalar(Rational(-7, 5));
  std::vector<HomogeneousRelation> original = d.relations;
  std::vector<HomogeneousRelation> rescaled = mesh_relations(scaled);

  MonomialOrder ord = MonomialOrder::from_declaration(d.quiver);
  RewriteSystem rs1 = complete(d.quiver, original, ord, 2);
  RewriteSystem rs2 = complete(d.quiver, rescaled, ord, 2);
  for (const HomogeneousRelation& r : rescaled) CHECK(ideal_membership(r.element(), rs1));
  for (const HomogeneousRelation& r : original) CHECK(ideal_membership(r.element(), rs2));
}
