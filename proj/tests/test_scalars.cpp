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

#include "qcy/scalar.hpp"

using namespace qcy;

namespace {

Rational random_rational(std::mt19937& rng) {
  long num = static_cast<long>(rng() % 41) - 20;
  long den = static_cast<long>(rng() % 20) + 1;
  return Rational(num, den);
}

}  // namespace

TEST_CASE("rational arithmetic and normalisation") {
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-1, 2).denominator() == 2);
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(-22, 8).str() == "-11/4");
  CHECK_THROWS_AS(Rational(0).inverse(), arithmetic_error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), arithmetic_error);

  Rational root;
  CHECK(Rational(49, 16).is_square(&root));
  CHECK(root == Rational(7, 4));
  CHECK_FALSE(Rational(2).is_square());
  CHECK_FALSE(Rational(-4).is_square());
}

TEST_CASE("field axioms hold for random rationals") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    Rational x = random_rational(rng), y = random_rational(rng), z = random_rational(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) * z == x * z + y * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == Rational(1));
  }
}

TEST_CASE("quadratic extension arithmetic") {
  Scalar r2 = Scalar::sqrt_of(2);
  Scalar one_plus(Rational(1), Rational(1), 2);
  Scalar one_minus(Rational(1), Rational(-1), 2);
  CHECK(one_plus * one_minus == Scalar(-1));
  CHECK(one_plus.inverse() == Scalar(Rational(-1), Rational(1), 2));
  CHECK(one_plus * one_plus.inverse() == Scalar(1));
  CHECK(r2 * r2 == Scalar(2));

  // Radicands normalise to their squarefree core.
  CHECK(Scalar::sqrt_of(8) == Scalar(Rational(0), Rational(2), 2));
  CHECK(Scalar::sqrt_of(9) == Scalar(3));
  CHECK(Scalar::sqrt_of(-4) == Scalar(Rational(0), Rational(2), -1));
  CHECK(Scalar::sqrt_of(-1) * Scalar::sqrt_of(-1) == Scalar(-1));

  CHECK_THROWS_AS(Scalar::sqrt_of(2) + Scalar::sqrt_of(3), arithmetic_error);
  CHECK_THROWS_AS(Scalar(0).inverse(), arithmetic_error);
  CHECK((Scalar::sqrt_of(2) + Scalar(Rational(0), Rational(-1), 2)).is_zero());
}

TEST_CASE("quadratic roots: rational, irrational, repeated") {
  QuadraticRoots r = quadratic_roots(Rational(1), Rational(-3), Rational(2));
  CHECK(r.rational);
  CHECK_FALSE(r.repeated);
  CHECK(r.first == Scalar(1));
  CHECK(r.second == Scalar(2));

  r = quadratic_roots(Rational(1), Rational(0), Rational(-2));
  CHECK_FALSE(r.rational);
  CHECK(r.first == -Scalar::sqrt_of(2));
  CHECK(r.second == Scalar::sqrt_of(2));

  r = quadratic_roots(Rational(1), Rational(-2), Rational(1));
  CHECK(r.repeated);
  CHECK(r.first == Scalar(1));

  CHECK_THROWS_AS(quadratic_roots(Rational(0), Rational(1), Rational(1)), degeneracy_error);
}

TEST_CASE("quadratic roots satisfy their polynomial exactly") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = random_rational(rng);
    if (a.is_zero()) a = Rational(1);
    Rational b = random_rational(rng), c = random_rational(rng);
    QuadraticRoots r = quadratic_roots(a, b, c);
    for (const Scalar& x : {r.first, r.second})
      CHECK((Scalar(a) * x * x + Scalar(b) * x + Scalar(c)).is_zero());
  }
}

TEST_CASE("scalar printing") {
  CHECK(Scalar(Rational(1, 2)).str() == "1/2");
  CHECK(Scalar(Rational(1), Rational(2), 5).str() == "1+2*sqrt(5)");
  CHECK(Scalar(Rational(0), Rational(-1), 2).str() == "-sqrt(2)");
  CHECK(Scalar(Rational(-1, 3), Rational(-2, 7), 3).str() == "-1/3-2/7*sqrt(3)");
}
