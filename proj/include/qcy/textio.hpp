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
#include <vector>

#include "qcy/algebra.hpp"
#include "qcy/matrix.hpp"
#include "qcy/quiver.hpp"

namespace qcy {

// Quiver text format
// ------------------
//   vertices: 2
//   arrow a e1 e2
//   arrow b e2 e1
//
// Vertex labels are e1..en (1-based) or e0..e(n-1) (0-based, detected by the
// presence of e0); bare integers are 0-based. The serializer always emits
// e1-based labels, and parse -> serialize -> parse is the identity.
Quiver parse_quiver(const std::string& text);
std::string serialize_quiver(const Quiver& q);

/// `p/q`, `a+b*sqrt(d)` and friends.
Scalar parse_scalar(const std::string& text);

// Relation / element syntax: rational or quadratic coefficients times
// `*`-joined arrow words, e.g.  a*b - 2/3*d*c  or  b*c^2 - a^2*b.
AlgebraElement parse_element(const Quiver& q, const std::string& text);
std::string serialize_element(const Quiver& q, const AlgebraElement& x);
std::string serialize_path(const Quiver& q, const Path& p);

// Mesh / presentation file: the quiver format plus optional sections
//   mu: identity            (or e1->e2, e2->e1)
//   tau a = b + 2*d
//   relation a*b - c*d
struct PresentationFile {
  Quiver quiver;
  bool has_mu = false;
  VertexPermutation mu;
  bool has_tau = false;
  ScalarMatrix tau;  // row = source arrow id, column = image arrow id
  std::vector<AlgebraElement> relations;
};
PresentationFile parse_presentation(const std::string& text);

/// Serializes a quiver plus mu/tau sections (a mesh file).
std::string serialize_mesh_file(const Quiver& q, const VertexPermutation& mu,
                                const ScalarMatrix& tau);

/// TSV block per degree: a line `k` followed by n rows of n tab-separated
/// integer entries.
std::string serialize_series(const std::vector<IntMatrix>& coeffs);

std::string read_file(const std::string& path);

}  // namespace qcy
