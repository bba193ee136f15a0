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

#include "qcy/mesh.hpp"
#include "qcy/rewrite.hpp"

namespace qcy {

/// A quadratic quiver algebra presented for computation: quiver, defining
/// relations, and a rewriting system completed to some degree.
struct Presentation {
  Quiver quiver;
  std::vector<HomogeneousRelation> relations;
  RewriteSystem rs;
};

Presentation make_presentation(const Quiver& q, std::vector<HomogeneousRelation> relations,
                               const MonomialOrder& order, int degree_cap);
/// Presentation of a family member under the declaration order.
Presentation family_presentation(const FamilyInstance& fi, int degree_cap);

/// Candidate graded map between quotient algebras: a vertex permutation
/// sigma plus an invertible degree-one arrow map. Entry (x, y) of
/// arrow_matrix is the coefficient of target arrow y in the image of
/// source arrow x; block-compatibility requires the image of an arrow
/// i -> j to be supported on arrows sigma(i) -> sigma(j).
struct GradedMap {
  VertexPermutation sigma;
  ScalarMatrix arrow_matrix;
};

GradedMap identity_graded_map(const Quiver& q);

/// Image of an element: e_v -> e_{sigma(v)}, paths multiplicatively.
AlgebraElement apply_graded_map(const GradedMap& f, const Quiver& src, const Quiver& tgt,
                                const AlgebraElement& x);

/// g after f.
GradedMap compose_graded_maps(const GradedMap& f, const GradedMap& g);

struct IsoCheck {
  bool ok = true;
  std::string detail;
};

/// True iff the arrow map is invertible, block-compatible, adjacency is
/// conjugated correctly by sigma, and the image of every defining relation
/// of src lies in the ideal of tgt (membership at degree 2).
IsoCheck is_isomorphism(const GradedMap& f, const Presentation& src, const Presentation& tgt);

struct IsoVerdict {
  bool isomorphic = false;
  std::optional<GradedMap> witness;
  /// Which criterion clause fired, with the data that witnesses it.
  std::string certificate;
};

/// A_n(p) vs A_n(q): isomorphic iff prod(p) equals prod(q) or its inverse.
/// The witness (when any) maps A_n(p) -> A_n(q) and is re-verified through
/// is_isomorphism before being returned. n = 1 is decided by the quantum
/// plane criterion p = q^{+-1}; n = 2 is refused (two-vertex classifier
/// territory).
IsoVerdict an_iso_decide(const std::vector<Rational>& p, const std::vector<Rational>& q);

/// B_n(p) vs B_n(q), n >= 2: isomorphic iff prod(p) == prod(q).
IsoVerdict bn_iso_decide(const std::vector<Rational>& p, const std::vector<Rational>& q);

/// A(q)/D(q): isomorphic iff p = q^{+-1}; B(q): iff p = q. Witnesses map
/// family(p) -> family(q).
IsoVerdict two_param_iso_decide(FamilyTag family, const Scalar& p, const Scalar& q);

/// One admissible two-vertex case: an adjacency matrix together with the
/// Nakayama permutations that survive the finite-GK filter.
struct TwoVertexCase {
  IntMatrix adjacency;
  std::vector<VertexPermutation> admissible;
};

/// The two-vertex inventory: symmetric nonnegative 2x2 matrices with
/// spectral radius exactly 2 and strongly connected support, paired with
/// the commuting permutations whose det(I - Mt + Pt^2) is a product of
/// cyclotomics.
std::vector<TwoVertexCase> enumerate_cy2_matrices();

struct EigenData {
  Scalar lambda1, lambda2;
  bool jordan = false;
  Scalar eta1, eta2;
};

struct ClassificationResult {
  FamilyTag tag = FamilyTag::J;
  std::optional<Scalar> parameter;
  std::optional<EigenData> eigen;
  std::string str() const;
};

/// Classifies a valid two-vertex mesh into A(q), B(q), J or D(q).
///
/// On the four-arrow quiver the invariant is the matrix N = W0^{-T} W1
/// built from the two relation components (W0 on source-vertex paths, W1
/// on the others): arrow-basis changes act on N by conjugation and the two
/// relation rescalings by a global scalar, so the eigenvalue ratio of N up
/// to inversion, together with diagonalisability, classifies the algebra.
ClassificationResult classify_two_vertex(const MeshData& m);

/// One row of the distinctness table.
struct DistinctnessRow {
  std::string left, right;
  bool isomorphic = false;
  std::string reason;
};

struct DistinctnessTable {
  std::vector<DistinctnessRow> rows;
  std::vector<std::string> remarks;
  std::string str() const;
};

/// Cross- and within-family comparison over a parameter sample, using the
/// computable obstructions: adjacency (A/D families vs B/J), Nakayama
/// permutation (B(q) vs J), and the within-family parameter criteria.
DistinctnessTable pairwise_distinct_check(const std::vector<Rational>& sample);

}  // namespace qcy
