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

#include <optional>
#include <string>
#include <vector>

#include "qcy/matrix.hpp"
#include "qcy/quiver.hpp"
#include "qcy/rewrite.hpp"

namespace qcy {

/// Integer polynomial, dense coefficient list, constant term first.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(Int v) { return IntPoly({std::move(v)}); }
  /// t^m - 1.
  static IntPoly t_power_minus_one(int m);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& coeff(int i) const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;

  /// Quotient when dividing by a monic divisor, or nullopt if the division
  /// leaves a remainder.
  std::optional<IntPoly> divide_exact_by_monic(const IntPoly& monic) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  /// Human form, e.g. "t^4 - 4*t^3 + 4*t^2 - 1".
  std::string str() const;

 private:
  void trim();
  std::vector<Int> c_;
};

/// m-th cyclotomic polynomial (memoized).
const IntPoly& cyclotomic(int m);

/// Truncated matrix-valued power series: coefficient matrices H_0..H_D.
struct MatrixSeries {
  std::vector<IntMatrix> coeffs;
  int top_degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// The data of p(t) = I - M t + P t^2.
struct CyPolynomial {
  IntMatrix adjacency;
  VertexPermutation nakayama;
  std::size_t size() const { return adjacency.rows(); }
};

/// Power-series inverse of p(t) through degree D, computed by the recursion
/// H_{k+1} = M H_k - P H_{k-1} with H_0 = I, H_1 = M.
MatrixSeries closed_form_series(const CyPolynomial& cp, int degree_cap);

/// (H_k)_{ij} = number of normal-form paths i -> j of length k.
MatrixSeries algebra_series(const RewriteSystem& rs, int degree_cap);

struct Cy2Report {
  bool ok = true;
  // Least mismatch when ok is false.
  int k = -1, i = -1, j = -1;
  Int algebra_value, closed_value;
  std::string str() const;
};

/// Coefficient-wise comparison of algebra_series and closed_form_series up
/// to degree D; reports the least (k, i, j) mismatch on failure.
Cy2Report cy2_check(const RewriteSystem& rs, const CyPolynomial& cp, int degree_cap);

/// det(I - Mt + Pt^2) as an integer polynomial.
IntPoly cy_determinant(const CyPolynomial& cp);

/// True exactly when every root of det(p(t)) lies on the complex unit
/// circle, decided by exact trial division against cyclotomic polynomials
/// (the determinant has constant term 1 and leading coefficient +-1, so
/// all-roots-on-circle is equivalent to being +- a product of cyclotomics).
bool finite_gk_check(const CyPolynomial& cp);

}  // namespace qcy
