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

#include "qcy/errors.hpp"
#include "qcy/matrix.hpp"

namespace qcy {

/// One arrow of a quiver. `id` always equals the arrow's position in the
/// owning quiver's arrow list.
struct Arrow {
  int id = 0;
  std::string label;
  int source = 0;
  int target = 0;
};

/// Finite quiver: vertices 0..n-1 plus an ordered list of labelled arrows.
/// Vertices are 0-indexed internally; text I/O maps e1-style labels.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int vertex_count) : n_(vertex_count) {
    if (vertex_count <= 0) throw structural_error("quiver needs at least one vertex");
  }

  int vertex_count() const { return n_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int id) const;

  /// Appends an arrow and returns its id. Labels must be unique.
  int add_arrow(const std::string& label, int source, int target);

  bool has_label(const std::string& label) const;
  int arrow_by_label(const std::string& label) const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  int n_ = 1;
  std::vector<Arrow> arrows_;
};

/// Path in a quiver: a source vertex and a list of arrow ids, composable
/// left to right. An empty list is the trivial path e_v at `source`.
struct Path {
  int source = 0;
  std::vector<int> word;

  bool trivial() const { return word.empty(); }
  int length() const { return static_cast<int>(word.size()); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.word == b.word;
  }
};

/// Trivial path e_v.
Path trivial_path(int vertex);
/// Path from consecutive arrow ids; validates composability.
Path make_path(const Quiver& q, std::vector<int> word);
Path make_path_by_labels(const Quiver& q, const std::vector<std::string>& labels);

int path_source(const Quiver& q, const Path& p);
int path_target(const Quiver& q, const Path& p);

/// Concatenation pq when target(p) == source(q); std::nullopt encodes the
/// zero product. Trivial paths act as one-sided identities.
std::optional<Path> compose(const Quiver& q, const Path& p, const Path& r);

/// Entry (i, j) counts arrows i -> j.
IntMatrix adjacency(const Quiver& q);

/// Every ordered vertex pair joined by a (possibly trivial) path.
bool is_strongly_connected(const Quiver& q);

/// At most one arrow between any ordered vertex pair.
bool is_schurian(const Quiver& q);

/// All paths of the given length from `source` (all targets).
std::vector<Path> enumerate_paths_from(const Quiver& q, int source, int length);
/// All paths of the given length from `source` to `target`.
std::vector<Path> enumerate_paths(const Quiver& q, int source, int target, int length);

/// Bijection on vertex indices, with the permutation matrix convention
/// P[i][mu(i)] = 1.
class VertexPermutation {
 public:
  VertexPermutation() = default;
  explicit VertexPermutation(std::vector<int> images);

  static VertexPermutation identity(int n);
  /// i -> i+1 mod n.
  static VertexPermutation cycle(int n);
  static VertexPermutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_.at(v); }
  VertexPermutation inverse() const;
  bool is_identity() const;

  IntMatrix matrix() const;

  friend bool operator==(const VertexPermutation& a, const VertexPermutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const VertexPermutation& a, const VertexPermutation& b) {
    return !(a == b);
  }

  const std::vector<int>& images() const { return images_; }

 private:
  std::vector<int> images_;
};

}  // namespace qcy
