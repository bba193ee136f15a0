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

#include "qcy/mesh.hpp"
#include "qcy/quiver.hpp"

using namespace qcy;

namespace {

// Two vertices, two arrows each way (a, c: e1 -> e2; b, d: e2 -> e1).
Quiver four_arrow_quiver() {
  Quiver q(2);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 0);
  q.add_arrow("c", 0, 1);
  q.add_arrow("d", 1, 0);
  return q;
}

// Loops a at e1 and c at e2, with b: e1 -> e2 and d: e2 -> e1.
Quiver loop_quiver() {
  Quiver q(2);
  q.add_arrow("a", 0, 0);
  q.add_arrow("b", 0, 1);
  q.add_arrow("c", 1, 1);
  q.add_arrow("d", 1, 0);
  return q;
}

Quiver random_quiver(std::mt19937& rng) {
  int n = 1 + static_cast<int>(rng() % 3);
  Quiver q(n);
  int arrows = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < arrows; ++i)
    q.add_arrow("x" + std::to_string(i), static_cast<int>(rng() % n), static_cast<int>(rng() % n));
  return q;
}

}  // namespace

TEST_CASE("composition: identities, concatenation, zero") {
  Quiver q = four_arrow_quiver();
  Path a = make_path_by_labels(q, {"a"});
  Path b = make_path_by_labels(q, {"b"});
  Path c = make_path_by_labels(q, {"c"});

  auto ea_a = compose(q, trivial_path(0), a);
  REQUIRE(ea_a.has_value());
  CHECK(*ea_a == a);
  CHECK(*compose(q, a, trivial_path(1)) == a);

  auto ab = compose(q, a, b);
  REQUIRE(ab.has_value());
  CHECK(*ab == make_path_by_labels(q, {"a", "b"}));
  CHECK(path_target(q, *ab) == 0);

  CHECK_FALSE(compose(q, a, c).has_value());
  CHECK_FALSE(compose(q, trivial_path(1), a).has_value());
}

TEST_CASE("composition is associative when products survive") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    Quiver q = random_quiver(rng);
    auto paths1 = enumerate_paths_from(q, static_cast<int>(rng() % q.vertex_count()), 1 + rng() % 2);
    if (paths1.empty()) continue;
    Path p = paths1[rng() % paths1.size()];
    auto paths2 = enumerate_paths_from(q, path_target(q, p), 1 + rng() % 2);
    if (paths2.empty()) continue;
    Path r = paths2[rng() % paths2.size()];
    auto paths3 = enumerate_paths_from(q, path_target(q, r), 1 + rng() % 2);
    if (paths3.empty()) continue;
    Path s = paths3[rng() % paths3.size()];
    auto left = compose(q, *compose(q, p, r), s);
    auto right = compose(q, p, *compose(q, r, s));
    REQUIRE(left.has_value());
    REQUIRE(right.has_value());
    CHECK(*left == *right);
  }
}

TEST_CASE("adjacency matrices of the named quivers") {
  IntMatrix m = adjacency(four_arrow_quiver());
  CHECK(m.at(0, 0) == 0);
  CHECK(m.at(0, 1) == 2);
  CHECK(m.at(1, 0) == 2);
  CHECK(m.at(1, 1) == 0);

  IntMatrix l = adjacency(loop_quiver());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(l.at(i, j) == 1);

  Quiver one(1);
  one.add_arrow("x", 0, 0);
  CHECK(adjacency(one).at(0, 0) == 1);
}

TEST_CASE("path counts of length k equal entries of M^k") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Quiver q = random_quiver(rng);
    IntMatrix m = adjacency(q);
    IntMatrix power = IntMatrix::identity(q.vertex_count());
    for (int k = 1; k <= 8; ++k) {
      power = power * m;
      for (int i = 0; i < q.vertex_count(); ++i)
        for (int j = 0; j < q.vertex_count(); ++j)
          CHECK(power.at(i, j) == Int(enumerate_paths(q, i, j, k).size()));
    }
  }
}

TEST_CASE("strong connectivity") {
  FamilyInstance a4 = construct_an(4, std::vector<Scalar>(4, Scalar(1)));
  CHECK(is_strongly_connected(a4.quiver));

  Quiver two(2);
  two.add_arrow("x", 0, 1);
  CHECK_FALSE(is_strongly_connected(two));

  Quiver one(1);
  CHECK(is_strongly_connected(one));
}

TEST_CASE("schurian predicate") {
  FamilyInstance b3 = construct_bn(3, std::vector<Scalar>(3, Scalar(1)));
  CHECK(is_schurian(b3.quiver));
  CHECK_FALSE(is_schurian(four_arrow_quiver()));
  FamilyInstance a3 = construct_an(3, std::vector<Scalar>(3, Scalar(1)));
  CHECK(is_schurian(a3.quiver));
}

TEST_CASE("cycle family adjacency is symmetric with zero diagonal") {
  for (int n = 3; n <= 6; ++n) {
    FamilyInstance an = construct_an(n, std::vector<Scalar>(n, Scalar(2)));
    IntMatrix m = adjacency(an.quiver);
    Int row_sum = 0;
    for (int i = 0; i < n; ++i) {
      CHECK(m.at(i, i) == 0);
      row_sum = 0;
      for (int j = 0; j < n; ++j) {
        CHECK(m.at(i, j) == m.at(j, i));
        row_sum += m.at(i, j);
      }
      CHECK(row_sum == 2);  // constant row sums: Perron root is exactly 2
    }
  }
}

TEST_CASE("structural validation") {
  Quiver q(2);
  q.add_arrow("a", 0, 1);
  CHECK_THROWS_AS(q.add_arrow("a", 1, 0), structural_error);
  CHECK_THROWS_AS(q.add_arrow("b", 0, 5), structural_error);
  CHECK_THROWS_AS(q.arrow(3), structural_error);
  CHECK_THROWS_AS(make_path(q, {0, 0}), structural_error);
  CHECK_THROWS_AS(Quiver(0), structural_error);
  CHECK_THROWS_AS(VertexPermutation({0, 0}), structural_error);
}

TEST_CASE("vertex permutations") {
  VertexPermutation mu = VertexPermutation::cycle(3);
  CHECK(mu(2) == 0);
  CHECK(mu.inverse()(0) == 2);
  IntMatrix p = mu.matrix();
  CHECK(p.at(0, 1) == 1);
  CHECK(p.at(2, 0) == 1);
  CHECK(p.at(0, 0) == 0);
  CHECK((mu == VertexPermutation::identity(3)) == false);
}
