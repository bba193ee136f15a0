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

#include "qcy/rational.hpp"

#include <ostream>

namespace qcy {

Rational::Rational(long n, long d) {
  if (d == 0) throw arithmetic_error("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const Int& n, const Int& d) {
  if (sgn(d) == 0) throw arithmetic_error("rational with zero denominator");
  v_ = mpq_class(n) / mpq_class(d);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw parse_error("bad rational literal: '" + text + "'");
  if (sgn(v.get_den()) == 0)
    throw parse_error("zero denominator in rational literal: '" + text + "'");
  v.canonicalize();
  return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw arithmetic_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw arithmetic_error("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::is_square(Rational* root) const {
  if (sign() < 0) return false;
  Int n = numerator(), d = denominator();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  if (root != nullptr) {
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    *root = Rational(rn, rd);
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Int squarefree_part(Int d, Int* square_root_of_cofactor) {
  if (sgn(d) == 0) throw arithmetic_error("squarefree part of zero");
  Int sq = 1;
  Int rest = abs(d);
  // Trial division; radicands in this code base come from small discriminants.
  for (Int p = 2; p * p <= rest; ++p) {
    Int p2 = p * p;
    while (mpz_divisible_p(rest.get_mpz_t(), p2.get_mpz_t())) {
      rest /= p2;
      sq *= p;
    }
  }
  if (square_root_of_cofactor != nullptr) *square_root_of_cofactor = sq;
  return sgn(d) < 0 ? Int(-rest) : rest;
}

}  // namespace qcy
