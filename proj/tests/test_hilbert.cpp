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

namespace {

IntMatrix mat2(long a, long b, long c, long d) {
  IntMatrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

// Closed coefficient tables of (I - Mt + It^2)^{-1} for the two diagonal
// two-vertex cases, frozen from the case-by-case formulas.
IntMatrix loop_case_table(int k) {
  if (k % 2 == 1) {
    long i = (k - 1) / 2;
    return mat2(i + 1, i + 1, i + 1, i + 1);
  }
  if (k % 4 == 0) {
    long i = k / 4;
    return mat2(2 * i + 1, 2 * i, 2 * i, 2 * i + 1);
  }
  long i = (k - 2) / 4;
  return mat2(2 * i + 1, 2 * i + 2, 2 * i + 2, 2 * i + 1);
}

IntMatrix shear_case_table(int k) {
  return (k % 2 == 0) ? mat2(k + 1, 0, 0, k + 1) : mat2(0, k + 1, k + 1, 0);
}

RewriteSystem completed_family(const FamilyInstance& fi, int cap) {
  return complete(fi.quiver, fi.relations, MonomialOrder::from_declaration(fi.quiver), cap);
}

}  // namespace

TEST_CASE("closed-form coefficients of the named cases") {
  // M = I + P with P the 2-cycle.
  CyPolynomial b2{mat2(1, 1, 1, 1), VertexPermutation::transposition(2, 0, 1)};
  MatrixSeries s = closed_form_series(b2, 4);
  CHECK(s.coeffs[2] == mat2(2, 1, 1, 2));

  CyPolynomial j{mat2(1, 1, 1, 1), VertexPermutation::identity(2)};
  s = closed_form_series(j, 6);
  CHECK(s.coeffs[4] == mat2(3, 2, 2, 3));
  for (int k = 0; k <= 6; ++k) CHECK(s.coeffs[k] == loop_case_table(k));

  CyPolynomial d{mat2(0, 2, 2, 0), VertexPermutation::identity(2)};
  s = closed_form_series(d, 6);
  CHECK(s.coeffs[3] == mat2(0, 4, 4, 0));
  for (int k = 0; k <= 6; ++k) CHECK(s.coeffs[k] == shear_case_table(k));
}

TEST_CASE("recursion identity and p(t) h(t) = I") {
  for (auto [m, id_nakayama] :
       {std::pair{mat2(1, 1, 1, 1), true}, {mat2(0, 2, 2, 0), true}, {mat2(1, 1, 1, 1), false}}) {
    CyPolynomial cp{m, id_nakayama ? VertexPermutation::identity(2)
                                   : VertexPermutation::transposition(2, 0, 1)};
    MatrixSeries s = closed_form_series(cp, 10);
    IntMatrix P = cp.nakayama.matrix();
    CHECK(s.coeffs[0] == IntMatrix::identity(2));
    CHECK(s.coeffs[1] == cp.adjacency);
    for (int k = 1; k < 10; ++k)
      CHECK((s.coeffs[k + 1] - cp.adjacency * s.coeffs[k] + P * s.coeffs[k - 1]).is_zero());
    // Same identity phrased as p(t) h(t) = I mod t^{D+1}.
    for (int mdeg = 1; mdeg <= 10; ++mdeg) {
      IntMatrix acc = s.coeffs[mdeg] - cp.adjacency * s.coeffs[mdeg - 1];
      if (mdeg >= 2) acc = acc + P * s.coeffs[mdeg - 2];
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("algebra series of the loop algebra matches its table") {
  FamilyInstance j = construct_family({FamilyTag::J, 2, {}});
  RewriteSystem rs = completed_family(j, 5);
  MatrixSeries s = algebra_series(rs, 5);
  for (int k = 0; k <= 5; ++k) CHECK(s.coeffs[k] == loop_case_table(k));
}

TEST_CASE("algebra series basics") {
  FamilyInstance aq = construct_two_vertex(FamilyTag::Aq, Scalar(2));
  RewriteSystem rs = completed_family(aq, 4);
  MatrixSeries s = algebra_series(rs, 4);
  CHECK(s.coeffs[0] == IntMatrix::identity(2));
  // Four length-2 loops at each vertex minus one relation leaves three.
  CHECK(s.coeffs[2] == mat2(3, 0, 0, 3));
  CHECK_THROWS_AS(algebra_series(rs, 9), truncation_error);
}

TEST_CASE("dimension-two criterion accepts the named families") {
  FamilyInstance b3 = construct_bn(3, {Scalar(1), Scalar(2), Scalar(3)});
  RewriteSystem rs = completed_family(b3, 10);
  CHECK(cy2_check(rs, cy_polynomial(b3.mesh), 10).ok);

  FamilyInstance j = construct_family({FamilyTag::J, 2, {}});
  RewriteSystem jrs = completed_family(j, 12);
  CHECK(cy2_check(jrs, cy_polynomial(j.mesh), 12).ok);
}

TEST_CASE("over-determined relations fail at the first extra collapse") {
  Quiver q(2);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 0);
  q.add_arrow("c", 0, 1);
  q.add_arrow("d", 1, 0);
  std::vector<HomogeneousRelation> rels{
      HomogeneousRelation(q, parse_element(q, "a*b - c*d")),
      HomogeneousRelation(q, parse_element(q, "b*a - d*c")),
      HomogeneousRelation(q, parse_element(q, "a*d - c*b")),
  };
  CyPolynomial cp{mat2(0, 2, 2, 0), VertexPermutation::identity(2)};
  RewriteSystem rs = complete(q, rels, MonomialOrder::from_declaration(q), 8);
  Cy2Report rep = cy2_check(rs, cp, 8);
  CHECK_FALSE(rep.ok);
  CHECK(rep.k == 2);
  CHECK(rep.i == 0);
  CHECK(rep.j == 0);
  CHECK(rep.algebra_value == 2);
  CHECK(rep.closed_value == 3);

  // Failure is stable under a different cap: the earliest mismatch persists.
  Cy2Report rep4 = cy2_check(rs, cp, 4);
  CHECK_FALSE(rep4.ok);
  CHECK(rep4.k == 2);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly({-1, 1}));
  CHECK(cyclotomic(2) == IntPoly({1, 1}));
  CHECK(cyclotomic(4) == IntPoly({1, 0, 1}));
  CHECK(cyclotomic(6) == IntPoly({1, -1, 1}));
  CHECK(cyclotomic(12) == IntPoly({1, 0, -1, 0, 1}));
  CHECK(cyclotomic(1).str() == "t - 1");
}

TEST_CASE("finite GK detection through cyclotomic factorisation") {
  VertexPermutation id2 = VertexPermutation::identity(2);
  VertexPermutation swap2 = VertexPermutation::transposition(2, 0, 1);

  CyPolynomial off_circle{mat2(0, 2, 2, 0), swap2};
  CHECK_FALSE(finite_gk_check(off_circle));
  // det(I - Mt + Pt^2) = -(t^2 - 2t - 1)(t - 1)^2 = 1 - 4t^2 + 4t^3 - t^4.
  CHECK(cy_determinant(off_circle) == IntPoly({1, 0, -4, 4, -1}));

  CyPolynomial pm_one{mat2(0, 2, 2, 0), id2};
  CHECK(finite_gk_check(pm_one));
  CHECK(cy_determinant(pm_one) == IntPoly({1, 0, -2, 0, 1}));  // (t-1)^2 (t+1)^2

  CyPolynomial mixed{mat2(1, 1, 1, 1), id2};
  CHECK(finite_gk_check(mixed));
  CHECK(cy_determinant(mixed) == IntPoly({1, -2, 2, -2, 1}));  // (t-1)^2 (t^2+1)

  CyPolynomial swap_case{mat2(1, 1, 1, 1), swap2};
  CHECK(finite_gk_check(swap_case));

  CyPolynomial wide{mat2(0, 3, 3, 0), id2};
  CHECK_FALSE(finite_gk_check(wide));
}

TEST_CASE("series text block") {
  CyPolynomial d{mat2(0, 2, 2, 0), VertexPermutation::identity(2)};
  MatrixSeries s = closed_form_series(d, 2);
  CHECK(serialize_series(s.coeffs) == "0\n1\t0\n0\t1\n1\n0\t2\n2\t0\n2\n3\t0\n0\t3\n");
}
