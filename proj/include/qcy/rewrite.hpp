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

#include <random>
#include <string>
#include <vector>

#include "qcy/algebra.hpp"

namespace qcy {

/// Rewrite rule lead -> tail. The lead strictly exceeds every tail term
/// under the system's order, and lead and tail share length, source and
/// target, so rewriting preserves homogeneity.
struct RewriteRule {
  Path lead;
  AlgebraElement tail;
};

/// Degree-truncated completed rewriting system for a homogeneous quadratic
/// ideal. Rules are inter-reduced: no rule's lead contains another rule's
/// lead as a subpath. Immutable once built; share freely across threads.
struct RewriteSystem {
  Quiver quiver;
  MonomialOrder order;
  std::vector<RewriteRule> rules;
  int completed_to = 0;
  /// All overlap ambiguities of total degree <= confluent_to reduce to
  /// zero, so normal forms are canonical up to this degree.
  int confluent_to = 0;
  /// True when some ambiguity above the degree cap was left unresolved.
  bool truncated = false;
  std::vector<std::string> notices;
};

/// Runs overlap completion on quadratic homogeneous relations up to total
/// degree D (D >= 2). Relations that reduce to zero are dropped with a
/// notice. The result is inter-reduced and verified confluent to D.
RewriteSystem complete(const Quiver& q, const std::vector<HomogeneousRelation>& relations,
                       const MonomialOrder& order, int degree_cap);

/// Fully reduces x: the result contains no rule lead as a subpath and is
/// congruent to x modulo the ideal. Canonical whenever deg(x) stays within
/// rs.confluent_to.
AlgebraElement normal_form(const AlgebraElement& x, const RewriteSystem& rs);

/// Reduction applying randomly chosen rules at randomly chosen positions;
/// confluence makes the result agree with normal_form on canonical degrees.
AlgebraElement normal_form_randomized(const AlgebraElement& x, const RewriteSystem& rs,
                                      std::mt19937& rng);

/// Number of irreducible paths of length k from i to j; equals the graded
/// dimension e_i A_k e_j of the quotient algebra.
Int graded_dim(const RewriteSystem& rs, int k, int i, int j);

/// normal_form(x) == 0. Requires deg(x) <= rs.confluent_to.
bool ideal_membership(const AlgebraElement& x, const RewriteSystem& rs);

/// One overlap ambiguity between rule leads: suffix of rules[a].lead of
/// length `overlap` equals the same-length prefix of rules[b].lead.
struct Ambiguity {
  int rule_a = 0;
  int rule_b = 0;
  int overlap = 0;
  Path word;
};

/// All overlap ambiguities among the final rules (any degree).
std::vector<Ambiguity> overlap_ambiguities(const RewriteSystem& rs);

/// Difference of the two one-step reductions of an ambiguity word; the
/// system is confluent at that degree exactly when this reduces to zero.
AlgebraElement s_element(const RewriteSystem& rs, const Ambiguity& amb);

/// Rule as `lead -> tail` using the relation text syntax.
std::string rule_str(const RewriteSystem& rs, const RewriteRule& rule);

}  // namespace qcy
