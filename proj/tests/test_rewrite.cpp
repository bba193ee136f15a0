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

#include <random>

#include "oracle.hpp"
#include "qcy/mesh.hpp"
#include "qcy/rewrite.hpp"
#include "qcy/textio.hpp"

using namespace qcy;

namespace {

RewriteSystem completed_family(const FamilyInstance& fi, int cap) {
  return complete(fi.quiver, fi.relations, MonomialOrder::from_declaration(fi.quiver), cap);
}

AlgebraElement word(const Quiver& q, const std::string& expr) { return parse_element(q, expr); }

AlgebraElement random_element(const Quiver& q, std::mt19937& rng, int max_len) {
  std::vector<AlgebraElement::Term> terms;
  int count = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < count; ++t) {
    int v = static_cast<int>(rng() % q.vertex_count());
    int len = static_cast<int>(rng() % (max_len + 1));
    auto paths = enumerate_paths_from(q, v, len);
    if (paths.empty()) continue;
    long num = static_cast<long>(rng() % 9) - 4;
    if (num == 0) num = 1;
    terms.emplace_back(paths[rng() % paths.size()], Scalar(Rational(num, 1 + rng() % 3)));
  }
  return AlgebraElement::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("completion of the diagonal loop algebra: four rules, confluent") {
  FamilyInstance j = construct_family({FamilyTag::J, 2, {}});
  RewriteSystem rs = completed_family(j, 6);

  REQUIRE(rs.rules.size() == 4);
  CHECK(rule_str(rs, rs.rules[0]) == "b*d -> a^2");
  CHECK(rule_str(rs, rs.rules[1]) == "d*b -> c^2");
  CHECK(rule_str(rs, rs.rules[2]) == "b*c^2 -> a^2*b");
  CHECK(rule_str(rs, rs.rules[3]) == "d*a^2 -> c^2*d");
  CHECK_FALSE(rs.truncated);
  CHECK(rs.confluent_to == 6);

  // The two remaining ambiguities resolve.
  std::vector<Ambiguity> ambs = overlap_ambiguities(rs);
  std::vector<std::string> words;
  for (const Ambiguity& a : ambs) {
    words.push_back(serialize_path(rs.quiver, a.word));
    CHECK(normal_form(s_element(rs, a), rs).is_zero());
  }
  // d*b*c^2 and b*d*a^2 are the overlaps the completed system still shows.
  CHECK(std::count(words.begin(), words.end(), "d*b*c^2") == 1);
  CHECK(std::count(words.begin(), words.end(), "b*d*a^2") == 1);
}

TEST_CASE("normal forms in the loop algebra") {
  FamilyInstance j = construct_family({FamilyTag::J, 2, {}});
  RewriteSystem rs = completed_family(j, 8);

  CHECK(normal_form(word(rs.quiver, "b*d"), rs) == word(rs.quiver, "a^2"));
  CHECK(normal_form(AlgebraElement::single(trivial_path(0), Scalar(1)), rs) ==
        AlgebraElement::single(trivial_path(0), Scalar(1)));
  // b*d*a^2 -> a^4 either through b*d or through d*a^2.
  CHECK(normal_form(word(rs.quiver, "b*d*a^2"), rs) == word(rs.quiver, "a^4"));
}

TEST_CASE("two-vertex shear family completes with no overlaps under c>b>d>a") {
  FamilyInstance dq = construct_two_vertex(FamilyTag::Dq, Scalar(5));
  MonomialOrder order = MonomialOrder::from_descending_labels(dq.quiver, {"c", "b", "d", "a"});
  RewriteSystem rs = complete(dq.quiver, dq.relations, order, 6);
  REQUIRE(rs.rules.size() == 2);
  CHECK(overlap_ambiguities(rs).empty());
  CHECK(serialize_path(rs.quiver, rs.rules[0].lead) == "b*a");
  CHECK(serialize_path(rs.quiver, rs.rules[1].lead) == "c*d");
}

TEST_CASE("quantum plane: one rule, confluent") {
  Quiver q(1);
  q.add_arrow("x", 0, 0);
  q.add_arrow("y", 0, 0);
  AlgebraElement rel = word(q, "x*y - 2*y*x");
  RewriteSystem rs =
      complete(q, {HomogeneousRelation(q, rel)}, MonomialOrder::from_declaration(q), 6);
  CHECK(rs.rules.size() == 1);
  CHECK(overlap_ambiguities(rs).empty());
  CHECK_FALSE(rs.truncated);
}

TEST_CASE("redundant relations are dropped with a notice") {
  Quiver q(1);
  q.add_arrow("x", 0, 0);
  q.add_arrow("y", 0, 0);
  std::vector<HomogeneousRelation> rels{
      HomogeneousRelation(q, word(q, "x*y - y*x")),
      HomogeneousRelation(q, word(q, "2*x*y - 2*y*x")),
  };
  RewriteSystem rs = complete(q, rels, MonomialOrder::from_declaration(q), 6);
  CHECK(rs.rules.size() == 1);
  REQUIRE(rs.notices.size() == 1);
  CHECK(rs.notices[0].find("dropped") != std::string::npos);
}

TEST_CASE("ideal membership") {
  FamilyInstance aq = construct_two_vertex(FamilyTag::Aq, Scalar(2));
  RewriteSystem rs = completed_family(aq, 6);
  CHECK(ideal_membership(word(rs.quiver, "a*b - c*d"), rs));
  CHECK_FALSE(ideal_membership(word(rs.quiver, "a*b"), rs));

  FamilyInstance j = construct_family({FamilyTag::J, 2, {}});
  RewriteSystem jrs = completed_family(j, 6);
  CHECK_FALSE(ideal_membership(word(jrs.quiver, "a"), jrs));

  // Image of b*a - q*d*c under the vertex-swapping map lands in the
  // inverse-parameter algebra: q*a*b - q*c*d.
  FamilyInstance aq_inv = construct_two_vertex(FamilyTag::Aq, Scalar(Rational(1, 2)));
  RewriteSystem inv_rs = completed_family(aq_inv, 6);
  CHECK(ideal_membership(word(inv_rs.quiver, "2*a*b - 2*c*d"), inv_rs));
}

TEST_CASE("graded dimensions: loop algebra and shear algebra") {
  FamilyInstance j = construct_family({FamilyTag::J, 2, {}});
  RewriteSystem jrs = completed_family(j, 8);
  CHECK(graded_dim(jrs, 2, 0, 0) == 1);
  CHECK(graded_dim(jrs, 0, 0, 0) == 1);
  CHECK(graded_dim(jrs, 0, 0, 1) == 0);

  FamilyInstance dq = construct_two_vertex(FamilyTag::Dq, Scalar(7));
  MonomialOrder order = MonomialOrder::from_descending_labels(dq.quiver, {"c", "b", "d", "a"});
  RewriteSystem drs = complete(dq.quiver, dq.relations, order, 8);
  CHECK(graded_dim(drs, 2, 0, 0) == 3);

  CHECK_THROWS_AS(graded_dim(jrs, 9, 0, 0), truncation_error);
}

TEST_CASE("normal form is idempotent") {
  std::mt19937 rng(17);
  for (FamilyTag tag : {FamilyTag::Aq, FamilyTag::Dq, FamilyTag::J, FamilyTag::Bq}) {
    FamilyInstance fi = tag == FamilyTag::J ? construct_family({tag, 2, {}})
                                            : construct_two_vertex(tag, Scalar(Rational(3, 2)));
    RewriteSystem rs = completed_family(fi, 6);
    for (int trial = 0; trial < 50; ++trial) {
      AlgebraElement x = random_element(rs.quiver, rng, 6);
      AlgebraElement nf = normal_form(x, rs);
      CHECK(normal_form(nf, rs) == nf);
    }
  }
}

TEST_CASE("confluence witness: randomized reduction order agrees") {
  std::mt19937 rng(23);
  for (FamilyTag tag : {FamilyTag::Aq, FamilyTag::J}) {
    FamilyInstance fi = tag == FamilyTag::J ? construct_family({tag, 2, {}})
                                            : construct_two_vertex(tag, Scalar(Rational(2)));
    RewriteSystem rs = completed_family(fi, 6);
    for (int trial = 0; trial < 100; ++trial) {
      AlgebraElement x = random_element(rs.quiver, rng, 6);
      AlgebraElement expected = normal_form(x, rs);
      CHECK(normal_form_randomized(x, rs, rng) == expected);
    }
  }
}

TEST_CASE("graded dimensions agree with the linear-algebra oracle") {
  struct Case {
    FamilyInstance fi;
    const char* name;
  };
  std::vector<Case> cases;
  cases.push_back({construct_an(3, {Scalar(1), Scalar(2), Scalar(3)}), "cycle n=3"});
  cases.push_back({construct_bn(2, {Scalar(2), Scalar(3)}), "loop cycle n=2"});
  cases.push_back({construct_two_vertex(FamilyTag::Aq, Scalar(2)), "A(2)"});
  cases.push_back({construct_two_vertex(FamilyTag::Bq, Scalar(5)), "B(5)"});
  cases.push_back({construct_family({FamilyTag::J, 2, {}}), "J"});
  cases.push_back({construct_two_vertex(FamilyTag::Dq, Scalar(7)), "D(7)"});

  for (const Case& c : cases) {
    CAPTURE(c.name);
    RewriteSystem rs = completed_family(c.fi, 8);
    for (int k = 0; k <= 8; ++k)
      for (int i = 0; i < c.fi.quiver.vertex_count(); ++i)
        for (int j = 0; j < c.fi.quiver.vertex_count(); ++j) {
          Int via_rewrite = graded_dim(rs, k, i, j);
          long via_oracle = qcy_test::oracle_graded_dim(c.fi.quiver, c.fi.relations, k, i, j);
          CHECK(via_rewrite == via_oracle);
        }
  }
}

TEST_CASE("bounded-degree products of normal forms stay reduced consistently") {
  // normal_form(x * y) == normal_form(normal_form(x) * normal_form(y))
  std::mt19937 rng(31);
  FamilyInstance aq = construct_two_vertex(FamilyTag::Aq, Scalar(3));
  RewriteSystem rs = completed_family(aq, 8);
  for (int trial = 0; trial < 60; ++trial) {
    AlgebraElement x = random_element(rs.quiver, rng, 4);
    AlgebraElement y = random_element(rs.quiver, rng, 4);
    AlgebraElement lhs = normal_form(multiply(rs.quiver, x, y), rs);
    AlgebraElement rhs = normal_form(
        multiply(rs.quiver, normal_form(x, rs), normal_form(y, rs)), rs);
    CHECK(lhs == rhs);
  }
}
