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

#include "qcy/scalar.hpp"

#include <ostream>

namespace qcy {

Scalar::Scalar(Rational a, Rational b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (b_.is_zero()) {
    d_ = 0;
    return;
  }
  if (d_ == 0 || d_ == 1) throw arithmetic_error("radicand must not be 0 or 1");
  Int sq;
  Int core = squarefree_part(d_, &sq);
  if (core != d_) {
    b_ *= Rational(sq, 1);
    d_ = core;
  }
}

Scalar Scalar::sqrt_of(const Int& d) {
  if (sgn(d) == 0) return Scalar();
  Int sq;
  Int core = squarefree_part(d, &sq);
  if (core == 1) return Scalar(Rational(sq, 1));
  return Scalar(Rational(0), Rational(sq, 1), core);
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw arithmetic_error("irrational value where a rational is required: " + str());
  return a_;
}

Rational Scalar::norm() const { return a_ * a_ - Rational(d_, 1) * b_ * b_; }

void Scalar::check_compatible(const Scalar& o) const {
  if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
    throw arithmetic_error("mixing sqrt(" + d_.get_str() + ") with sqrt(" + o.d_.get_str() + ")");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_compatible(o);
  a_ += o.a_;
  b_ += o.b_;
  if (d_ == 0) d_ = o.d_;
  if (b_.is_zero()) d_ = 0;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_compatible(o);
  Int d = d_ != 0 ? d_ : o.d_;
  Rational na = a_ * o.a_ + Rational(d, 1) * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  d_ = nb.is_zero() ? Int(0) : d;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw arithmetic_error("inverse of zero");
  if (is_rational()) return Scalar(a_.inverse());
  // (a - b sqrt(d)) / (a^2 - d b^2); the norm is nonzero since d is not a square.
  Rational n = norm();
  if (n.is_zero()) throw internal_error("zero norm for a nonzero quadratic element");
  return Scalar(a_ / n, -b_ / n, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::str() const {
  if (is_rational()) return a_.str();
  std::string rad = "sqrt(" + d_.get_str() + ")";
  std::string tail;
  if (b_.is_one())
    tail = rad;
  else if (b_ == Rational(-1))
    tail = "-" + rad;
  else
    tail = b_.str() + "*" + rad;
  if (a_.is_zero()) return tail;
  if (tail[0] == '-') return a_.str() + tail;
  return a_.str() + "+" + tail;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

QuadraticRoots quadratic_roots(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero()) throw degeneracy_error("degenerate quadratic: leading coefficient is zero");
  Rational disc = b * b - Rational(4) * a * c;
  Rational two_a = Rational(2) * a;
  QuadraticRoots out;
  if (disc.is_zero()) {
    out.first = out.second = Scalar(-b / two_a);
    out.repeated = true;
    out.rational = true;
    return out;
  }
  Rational root;
  if (disc.is_square(&root)) {
    out.first = Scalar((-b - root) / two_a);
    out.second = Scalar((-b + root) / two_a);
    out.rational = true;
    return out;
  }
  // disc = (num/den) = num*den / den^2, so sqrt(disc) = sqrt(num*den)/den.
  Int num = disc.numerator(), den = disc.denominator();
  Int sq;
  Int core = squarefree_part(num * den, &sq);
  Rational coef = Rational(sq, den);  // sqrt(disc) = coef * sqrt(core)
  Scalar sqrt_disc(Rational(0), coef, core);
  out.first = (Scalar(-b) - sqrt_disc) / Scalar(two_a);
  out.second = (Scalar(-b) + sqrt_disc) / Scalar(two_a);
  return out;
}

}  // namespace qcy
