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

#include "qcy/quiver.hpp"

#include <algorithm>
#include <numeric>

namespace qcy {

const Arrow& Quiver::arrow(int id) const {
  if (id < 0 || id >= arrow_count()) throw structural_error("arrow id out of range");
  return arrows_[id];
}

int Quiver::add_arrow(const std::string& label, int source, int target) {
  if (source < 0 || source >= n_ || target < 0 || target >= n_)
    throw structural_error("arrow endpoint out of range: " + label);
  if (label.empty()) throw structural_error("arrow label must be nonempty");
  if (has_label(label)) throw structural_error("duplicate arrow label: " + label);
  Arrow a{arrow_count(), label, source, target};
  arrows_.push_back(std::move(a));
  return arrows_.back().id;
}

bool Quiver::has_label(const std::string& label) const {
  return std::any_of(arrows_.begin(), arrows_.end(),
                     [&](const Arrow& a) { return a.label == label; });
}

int Quiver::arrow_by_label(const std::string& label) const {
  for (const Arrow& a : arrows_)
    if (a.label == label) return a.id;
  throw structural_error("no arrow labelled '" + label + "'");
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.n_ != b.n_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const Arrow &x = a.arrows_[i], &y = b.arrows_[i];
    if (x.label != y.label || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

Path trivial_path(int vertex) { return Path{vertex, {}}; }

Path make_path(const Quiver& q, std::vector<int> word) {
  if (word.empty()) throw structural_error("make_path needs at least one arrow; use trivial_path");
  Path p{q.arrow(word.front()).source, std::move(word)};
  int at = p.source;
  for (int id : p.word) {
    const Arrow& a = q.arrow(id);
    if (a.source != at) throw structural_error("non-composable arrow sequence at '" + a.label + "'");
    at = a.target;
  }
  return p;
}

Path make_path_by_labels(const Quiver& q, const std::vector<std::string>& labels) {
  std::vector<int> ids;
  ids.reserve(labels.size());
  for (const std::string& l : labels) ids.push_back(q.arrow_by_label(l));
  return make_path(q, std::move(ids));
}

int path_source(const Quiver&, const Path& p) { return p.source; }

int path_target(const Quiver& q, const Path& p) {
  return p.word.empty() ? p.source : q.arrow(p.word.back()).target;
}

std::optional<Path> compose(const Quiver& q, const Path& p, const Path& r) {
  if (path_target(q, p) != path_source(q, r)) return std::nullopt;
  Path out = p;
  out.word.insert(out.word.end(), r.word.begin(), r.word.end());
  return out;
}

IntMatrix adjacency(const Quiver& q) {
  IntMatrix m(q.vertex_count(), q.vertex_count());
  for (const Arrow& a : q.arrows()) m.at(a.source, a.target) += 1;
  return m;
}

bool is_strongly_connected(const Quiver& q) {
  int n = q.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) reach[v][v] = true;  // trivial paths
  for (const Arrow& a : q.arrows()) reach[a.source][a.target] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!reach[i][j]) return false;
  return true;
}

bool is_schurian(const Quiver& q) {
  IntMatrix m = adjacency(q);
  for (int i = 0; i < q.vertex_count(); ++i)
    for (int j = 0; j < q.vertex_count(); ++j)
      if (m.at(i, j) > 1) return false;
  return true;
}

std::vector<Path> enumerate_paths_from(const Quiver& q, int source, int length) {
  std::vector<Path> out;
  Path cur = trivial_path(source);
  // Iterative DFS over arrow extensions.
  struct Frame { int vertex; int next_arrow; };
  std::vector<Frame> stack{{source, 0}};
  while (!stack.empty()) {
    if (static_cast<int>(cur.word.size()) == length) {
      out.push_back(cur);
      stack.pop_back();
      if (!cur.word.empty()) cur.word.pop_back();
      continue;
    }
    Frame& f = stack.back();
    int found = -1;
    while (f.next_arrow < q.arrow_count()) {
      if (q.arrow(f.next_arrow).source == f.vertex) { found = f.next_arrow++; break; }
      ++f.next_arrow;
    }
    if (found < 0) {
      stack.pop_back();
      if (!cur.word.empty()) cur.word.pop_back();
      continue;
    }
    cur.word.push_back(found);
    stack.push_back({q.arrow(found).target, 0});
  }
  return out;
}

std::vector<Path> enumerate_paths(const Quiver& q, int source, int target, int length) {
  std::vector<Path> all = enumerate_paths_from(q, source, length);
  std::vector<Path> out;
  for (Path& p : all)
    if (path_target(q, p) == target) out.push_back(std::move(p));
  return out;
}

VertexPermutation::VertexPermutation(std::vector<int> images) : images_(std::move(images)) {
  int n = size();
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v]) throw structural_error("not a permutation of the vertex set");
    seen[v] = true;
  }
}

VertexPermutation VertexPermutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return VertexPermutation(std::move(im));
}

VertexPermutation VertexPermutation::cycle(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return VertexPermutation(std::move(im));
}

VertexPermutation VertexPermutation::transposition(int n, int a, int b) {
  VertexPermutation p = identity(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

VertexPermutation VertexPermutation::inverse() const {
  std::vector<int> im(size());
  for (int i = 0; i < size(); ++i) im[images_[i]] = i;
  return VertexPermutation(std::move(im));
}

bool VertexPermutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

IntMatrix VertexPermutation::matrix() const {
  IntMatrix m(size(), size());
  for (int i = 0; i < size(); ++i) m.at(i, images_[i]) = 1;
  return m;
}

}  // namespace qcy
