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

#pragma once

#include <iosfwd>
#include <string>

#include "qcy/rational.hpp"

namespace qcy {

/// Element a + b*sqrt(d) of the working field.
///
/// d is a squarefree integer, possibly negative, never 0 or 1. Plain
/// rationals are the canonical case b == 0, d == 0, and mix freely with
/// any extension. Elements of two different genuine extensions do not mix;
/// combining them raises arithmetic_error rather than silently widening.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : a_(n) {}  // NOLINT: implicit by design
  Scalar(const Rational& a) : a_(a) {}  // NOLINT: implicit by design
  Scalar(Rational a, Rational b, Int d);

  /// b*sqrt(d) with d an arbitrary nonzero integer; the square part of d is
  /// folded into b.
  static Scalar sqrt_of(const Int& d);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  const Int& radicand() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return b_.is_zero() && a_.is_one(); }
  bool is_rational() const { return b_.is_zero(); }

  /// The rational value; throws if the element is irrational.
  Rational to_rational() const;

  Scalar conjugate() const { return Scalar(a_, -b_, d_); }
  /// a^2 - d b^2, the field norm down to the rationals.
  Rational norm() const;

  Scalar operator-() const { return Scalar(-a_, -b_, d_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.a_ == b.a_ && a.b_ == b.b_ && a.d_ == b.d_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// `a`, `a+b*sqrt(d)`, `-b*sqrt(d)`, ...
  std::string str() const;

 private:
  void check_compatible(const Scalar& o) const;

  Rational a_;
  Rational b_;
  Int d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Root description for a quadratic with exact coefficients.
struct QuadraticRoots {
  Scalar first;
  Scalar second;
  bool repeated = false;   // first == second
  bool rational = false;   // both roots rational
};

/// Exact roots of a x^2 + b x + c. Rational roots when the discriminant is
/// a rational square, conjugate elements of Q(sqrt(d)) otherwise, with d the
/// squarefree core of the discriminant. a must be nonzero.
QuadraticRoots quadratic_roots(const Rational& a, const Rational& b, const Rational& c);

}  // namespace qcy
