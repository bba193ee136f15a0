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

#include <string>
#include <vector>

#include "qcy/algebra.hpp"
#include "qcy/hilbert.hpp"
#include "qcy/matrix.hpp"
#include "qcy/quiver.hpp"

namespace qcy {

/// Mesh data (Q, mu, tau): a vertex permutation mu together with an
/// invertible graded linear map tau on the arrow span, compatible in the
/// sense that tau sends an arrow i -> j into the span of arrows
/// mu^{-1}(j) -> i. Row x of `tau` holds the coordinates of tau(x) in the
/// arrow basis.
struct MeshData {
  Quiver quiver;
  VertexPermutation mu;
  ScalarMatrix tau;
};

struct MeshReport {
  bool valid = true;
  std::vector<std::string> problems;
};

/// Invertibility plus the block-compatibility condition; reports every
/// violating (arrow, arrow) entry instead of stopping at the first.
MeshReport validate_mesh(const MeshData& m);

/// The superpotential  omega = sum_x tau(x) x  over the arrow basis.
/// Throws structural_error when the mesh data is invalid.
AlgebraElement potential(const MeshData& m);

/// Vertex components omega_j = e_{mu^{-1}(j)} omega e_j, ordered by j.
/// Each component must be nonzero (degeneracy_error otherwise).
std::vector<HomogeneousRelation> mesh_relations(const MeshData& m);

enum class FamilyTag { An, Bn, Aq, Bq, J, Dq };

std::string family_name(FamilyTag tag);

/// Parameters of a named family: a length-n vector for An/Bn, one scalar
/// for Aq/Bq/Dq, nothing for J. All entries must be nonzero.
struct FamilyParams {
  FamilyTag tag = FamilyTag::J;
  int n = 2;
  std::vector<Rational> q;
};

/// A constructed family member: quiver, mesh data, and the defining
/// relations (the components of the potential).
struct FamilyInstance {
  FamilyTag tag = FamilyTag::J;
  Quiver quiver;
  MeshData mesh;
  std::vector<HomogeneousRelation> relations;
};

FamilyInstance construct_family(const FamilyParams& params);

/// Same constructions with scalar parameters, for parameters living in a
/// quadratic extension (as produced by the two-vertex classifier).
FamilyInstance construct_an(int n, const std::vector<Scalar>& q);
FamilyInstance construct_bn(int n, const std::vector<Scalar>& q);
FamilyInstance construct_two_vertex(FamilyTag tag, const Scalar& q);

/// I - Mt + Pt^2 data for a mesh.
CyPolynomial cy_polynomial(const MeshData& m);

}  // namespace qcy
