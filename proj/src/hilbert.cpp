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

#include "qcy/hilbert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace qcy {

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPoly IntPoly::t_power_minus_one(int m) {
  std::vector<Int> c(m + 1, Int(0));
  c[0] = -1;
  c[m] = 1;
  return IntPoly(std::move(c));
}

const Int& IntPoly::coeff(int i) const {
  static const Int zero(0);
  if (i < 0 || i > degree()) return zero;
  return c_[i];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
  std::vector<Int> c = c_;
  for (Int& v : c) v = -v;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(c));
}

std::optional<IntPoly> IntPoly::divide_exact_by_monic(const IntPoly& monic) const {
  if (monic.is_zero() || monic.c_.back() != 1)
    throw internal_error("divisor must be monic");
  if (is_zero()) return IntPoly();
  if (degree() < monic.degree()) return std::nullopt;
  std::vector<Int> rem = c_;
  std::vector<Int> quot(degree() - monic.degree() + 1, Int(0));
  for (int k = degree() - monic.degree(); k >= 0; --k) {
    Int q = rem[k + monic.degree()];
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (int i = 0; i <= monic.degree(); ++i) rem[k + i] -= q * monic.c_[i];
  }
  for (const Int& v : rem)
    if (sgn(v) != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (sgn(c_[i]) == 0) continue;
    Int v = c_[i];
    if (first) {
      if (sgn(v) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(v) < 0 ? " - " : " + ");
    }
    Int a = abs(v);
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "t";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

const IntPoly& cyclotomic(int m) {
  static std::map<int, IntPoly> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  IntPoly value = IntPoly::t_power_minus_one(m);
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto q = value.divide_exact_by_monic(cyclotomic(d));
    if (!q) throw internal_error("cyclotomic division failed");
    value = std::move(*q);
  }
  return cache.emplace(m, std::move(value)).first->second;
}

MatrixSeries closed_form_series(const CyPolynomial& cp, int degree_cap) {
  if (degree_cap < 1) throw structural_error("series degree must be at least 1");
  std::size_t n = cp.size();
  IntMatrix P = cp.nakayama.matrix();
  MatrixSeries s;
  s.coeffs.reserve(degree_cap + 1);
  s.coeffs.push_back(IntMatrix::identity(n));
  s.coeffs.push_back(cp.adjacency);
  for (int k = 1; k < degree_cap; ++k)
    s.coeffs.push_back(cp.adjacency * s.coeffs[k] - P * s.coeffs[k - 1]);
  return s;
}

MatrixSeries algebra_series(const RewriteSystem& rs, int degree_cap) {
  if (degree_cap > rs.confluent_to)
    throw truncation_error("algebra series to degree " + std::to_string(degree_cap) +
                           " needs confluence past " + std::to_string(rs.confluent_to));
  int n = rs.quiver.vertex_count();
  MatrixSeries s;
  s.coeffs.reserve(degree_cap + 1);
  for (int k = 0; k <= degree_cap; ++k) {
    IntMatrix h(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h.at(i, j) = graded_dim(rs, k, i, j);
    s.coeffs.push_back(std::move(h));
  }
  return s;
}

std::string Cy2Report::str() const {
  if (ok) return "series agree";
  std::ostringstream out;
  out << "mismatch at k=" << k << ", (i,j)=(" << i + 1 << "," << j + 1
      << "): algebra " << algebra_value.get_str() << " vs closed form " << closed_value.get_str();
  return out.str();
}

Cy2Report cy2_check(const RewriteSystem& rs, const CyPolynomial& cp, int degree_cap) {
  MatrixSeries lhs = algebra_series(rs, degree_cap);
  MatrixSeries rhs = closed_form_series(cp, degree_cap);
  Cy2Report rep;
  int n = static_cast<int>(cp.size());
  for (int k = 0; k <= degree_cap; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (lhs.coeffs[k].at(i, j) != rhs.coeffs[k].at(i, j)) {
          rep.ok = false;
          rep.k = k;
          rep.i = i;
          rep.j = j;
          rep.algebra_value = lhs.coeffs[k].at(i, j);
          rep.closed_value = rhs.coeffs[k].at(i, j);
          return rep;
        }
  return rep;
}

IntPoly cy_determinant(const CyPolynomial& cp) {
  std::size_t n = cp.size();
  IntMatrix P = cp.nakayama.matrix();
  // Entries of p(t) as degree-<=2 polynomials.
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = IntPoly({Int(i == j ? 1 : 0), -cp.adjacency.at(i, j), P.at(i, j)});
  // Leibniz expansion; vertex counts here are tiny.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntPoly det;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    IntPoly prod = IntPoly::constant(Int(sign));
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod = prod * m[i][perm[i]];
    det = det + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

bool finite_gk_check(const CyPolynomial& cp) {
  IntPoly f = cy_determinant(cp);
  if (f.is_zero()) throw degeneracy_error("det(I - Mt + Pt^2) is identically zero");
  if (sgn(f.coeffs().back()) < 0) f = -f;
  if (f.coeffs().back() != 1) return false;  // roots cannot all be roots of unity
  if (sgn(f.coeff(0)) == 0) return false;    // t = 0 is inside the circle
  // Strip cyclotomic factors; every phi_m with phi(m) <= deg can occur, and
  // phi(m) >= sqrt(m/2) bounds the search.
  int start_degree = f.degree();
  for (int m = 1; f.degree() > 0 && m <= 2 * start_degree * start_degree + 2; ++m) {
    const IntPoly& phi = cyclotomic(m);
    if (phi.degree() > f.degree()) continue;
    for (;;) {
      auto q = f.divide_exact_by_monic(phi);
      if (!q) break;
      f = std::move(*q);
      if (f.degree() == 0) break;
    }
  }
  return f.degree() == 0 && abs(f.coeff(0)) == 1;
}

}  // namespace qcy
