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

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qcy/quiver.hpp"
#include "qcy/scalar.hpp"

namespace qcy {

/// Degree-lexicographic order on paths, driven by a total precedence on
/// arrows (higher rank compares larger). Paths of equal length compare by
/// the leftmost differing arrow; trivial paths fall back to the source
/// vertex so the order stays total across components.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<int> rank) : rank_(std::move(rank)) {}

  /// Default order: later-declared arrows are larger, so a quiver declared
  /// a, b, c, d orders them d > c > b > a.
  static MonomialOrder from_declaration(const Quiver& q);
  /// Explicit precedence, largest arrow first ("d,c,b,a" style lists).
  static MonomialOrder from_descending_labels(const Quiver& q, const std::vector<std::string>& labels);

  int rank(int arrow_id) const { return rank_.empty() ? arrow_id : rank_.at(arrow_id); }

  /// <0, 0, >0 as p compares below, equal to, above r.
  int compare(const Path& p, const Path& r) const;
  bool less(const Path& p, const Path& r) const { return compare(p, r) < 0; }

 private:
  std::vector<int> rank_;
};

/// Finite sum of scalar-weighted paths. Terms are held sorted under a
/// structural order (length, word, source) with no zero coefficients, so
/// equality is plain vector comparison and zero has a unique representation
/// (no terms).
class AlgebraElement {
 public:
  using Term = std::pair<Path, Scalar>;

  AlgebraElement() = default;
  static AlgebraElement zero() { return {}; }
  static AlgebraElement from_terms(std::vector<Term> terms);
  static AlgebraElement single(Path p, Scalar c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Scalar coefficient(const Path& p) const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

  AlgebraElement scaled(const Scalar& c) const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  /// Largest term under the given order; element must be nonzero.
  const Term& leading_term(const MonomialOrder& ord) const;

  /// True when all terms share length, source and target; outputs them.
  bool homogeneous(const Quiver& q, int* length = nullptr, int* source = nullptr,
                   int* target = nullptr) const;

 private:
  std::vector<Term> terms_;  // ascending under structural path order
};

/// Structural total order used for term storage: independent of any
/// monomial precedence so elements compare canonically everywhere.
bool structural_path_less(const Path& a, const Path& b);

/// Product in the path algebra; incomposable path pairs multiply to zero.
AlgebraElement multiply(const Quiver& q, const AlgebraElement& a, const AlgebraElement& b);

/// u * x * v for paths u, v.
AlgebraElement sandwich(const Quiver& q, const Path& u, const AlgebraElement& x, const Path& v);

/// Homogeneous element wrapper: every term has the same length, source and
/// target. This is the shape of all defining relations in this code base.
class HomogeneousRelation {
 public:
  HomogeneousRelation(const Quiver& q, AlgebraElement element);

  const AlgebraElement& element() const { return element_; }
  int degree() const { return degree_; }
  int source() const { return source_; }
  int target() const { return target_; }

 private:
  AlgebraElement element_;
  int degree_, source_, target_;
};

}  // namespace qcy
