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

#include "qcy/algebra.hpp"

#include <algorithm>

namespace qcy {

MonomialOrder MonomialOrder::from_declaration(const Quiver& q) {
  std::vector<int> rank(q.arrow_count());
  for (int i = 0; i < q.arrow_count(); ++i) rank[i] = i;
  return MonomialOrder(std::move(rank));
}

MonomialOrder MonomialOrder::from_descending_labels(const Quiver& q,
                                                    const std::vector<std::string>& labels) {
  if (static_cast<int>(labels.size()) != q.arrow_count())
    throw structural_error("precedence list must mention every arrow exactly once");
  std::vector<int> rank(q.arrow_count(), -1);
  int next = q.arrow_count();
  for (const std::string& l : labels) {
    int id = q.arrow_by_label(l);
    if (rank[id] != -1) throw structural_error("arrow repeated in precedence list: " + l);
    rank[id] = --next;
  }
  return MonomialOrder(std::move(rank));
}

int MonomialOrder::compare(const Path& p, const Path& r) const {
  if (p.length() != r.length()) return p.length() < r.length() ? -1 : 1;
  for (int i = 0; i < p.length(); ++i) {
    int x = rank(p.word[i]), y = rank(r.word[i]);
    if (x != y) return x < y ? -1 : 1;
  }
  if (p.source != r.source) return p.source < r.source ? -1 : 1;
  return 0;
}

bool structural_path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.word != b.word) return a.word < b.word;
  return a.source < b.source;
}

AlgebraElement AlgebraElement::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return structural_path_less(x.first, y.first); });
  AlgebraElement out;
  for (Term& t : terms) {
    if (t.second.is_zero()) continue;
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

AlgebraElement AlgebraElement::single(Path p, Scalar c) {
  AlgebraElement out;
  if (!c.is_zero()) out.terms_.emplace_back(std::move(p), std::move(c));
  return out;
}

Scalar AlgebraElement::coefficient(const Path& p) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const Term& t, const Path& key) {
                               return structural_path_less(t.first, key);
                             });
  if (it != terms_.end() && it->first == p) return it->second;
  return Scalar(0);
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (Term& t : out.terms_) t.second = -t.second;
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->first == b->first) {
      Scalar c = a->second + b->second;
      if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    } else if (structural_path_less(a->first, b->first)) {
      merged.push_back(*a++);
    } else {
      merged.push_back(*b++);
    }
  }
  merged.insert(merged.end(), a, terms_.end());
  merged.insert(merged.end(), b, o.terms_.end());
  terms_ = std::move(merged);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += -o; }

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  AlgebraElement out = *this;
  for (Term& t : out.terms_) t.second *= c;
  return out;
}

const AlgebraElement::Term& AlgebraElement::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw internal_error("leading term of zero");
  const Term* best = &terms_.front();
  for (const Term& t : terms_)
    if (ord.less(best->first, t.first)) best = &t;
  return *best;
}

bool AlgebraElement::homogeneous(const Quiver& q, int* length, int* source, int* target) const {
  if (terms_.empty()) return true;
  int len = terms_.front().first.length();
  int src = terms_.front().first.source;
  int tgt = path_target(q, terms_.front().first);
  for (const Term& t : terms_) {
    if (t.first.length() != len || t.first.source != src || path_target(q, t.first) != tgt)
      return false;
  }
  if (length != nullptr) *length = len;
  if (source != nullptr) *source = src;
  if (target != nullptr) *target = tgt;
  return true;
}

AlgebraElement multiply(const Quiver& q, const AlgebraElement& a, const AlgebraElement& b) {
  std::vector<AlgebraElement::Term> terms;
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) {
      std::optional<Path> p = compose(q, pa, pb);
      if (p) terms.emplace_back(std::move(*p), ca * cb);
    }
  return AlgebraElement::from_terms(std::move(terms));
}

AlgebraElement sandwich(const Quiver& q, const Path& u, const AlgebraElement& x, const Path& v) {
  std::vector<AlgebraElement::Term> terms;
  for (const auto& [p, c] : x.terms()) {
    std::optional<Path> up = compose(q, u, p);
    if (!up) continue;
    std::optional<Path> upv = compose(q, *up, v);
    if (!upv) continue;
    terms.emplace_back(std::move(*upv), c);
  }
  return AlgebraElement::from_terms(std::move(terms));
}

HomogeneousRelation::HomogeneousRelation(const Quiver& q, AlgebraElement element)
    : element_(std::move(element)) {
  if (element_.is_zero()) throw structural_error("a relation must be nonzero");
  if (!element_.homogeneous(q, &degree_, &source_, &target_))
    throw structural_error("relation is not homogeneous");
}

}  // namespace qcy
