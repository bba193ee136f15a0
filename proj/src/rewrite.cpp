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

#include "qcy/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace qcy {

namespace {

constexpr std::size_t kRuleCap = 50000;

// Position of the first occurrence of sub.word inside p.word, or -1.
int find_subword(const Path& p, const Path& sub) {
  if (sub.length() > p.length()) return -1;
  auto it = std::search(p.word.begin(), p.word.end(), sub.word.begin(), sub.word.end());
  if (it == p.word.end() && sub.length() > 0) return -1;
  return static_cast<int>(it - p.word.begin());
}

Path subpath(const Quiver& q, const Path& p, int from, int len) {
  if (len == 0) {
    int v = from == 0 ? p.source : q.arrow(p.word[from - 1]).target;
    return trivial_path(v);
  }
  std::vector<int> w(p.word.begin() + from, p.word.begin() + from + len);
  return make_path(q, std::move(w));
}

struct RuleRec {
  Path lead;
  AlgebraElement tail;
  bool alive = true;
  int degree = 0;
};

// Working state of a completion run.
struct Completion {
  const Quiver& q;
  MonomialOrder order;
  int cap;
  std::vector<RuleRec> rules;
  bool truncated = false;
  int min_skipped_degree = -1;
  std::vector<std::string> notices;

  // Tasks keyed by (degree, kind, sequence): elements before overlaps at
  // equal degree, FIFO within a kind.
  struct Task {
    int degree;
    int kind;  // 0 = pending element, 1 = pending overlap
    long seq;
    AlgebraElement elem;
    int r1 = -1, r2 = -1, ell = 0;
    bool operator<(const Task& o) const {
      return std::tie(degree, kind, seq) < std::tie(o.degree, o.kind, o.seq);
    }
  };
  std::set<Task> tasks;
  long seq = 0;

  explicit Completion(const Quiver& quiver, MonomialOrder ord, int degree_cap)
      : q(quiver), order(std::move(ord)), cap(degree_cap) {}

  void push_element(int degree, AlgebraElement e) {
    tasks.insert(Task{degree, 0, seq++, std::move(e)});
  }

  void push_overlaps_for(int id) {
    for (std::size_t m = 0; m < rules.size(); ++m) {
      if (!rules[m].alive) continue;
      push_overlap_pairs(id, static_cast<int>(m));
      if (static_cast<int>(m) != id) push_overlap_pairs(static_cast<int>(m), id);
    }
  }

  void push_overlap_pairs(int a, int b) {
    const Path& la = rules[a].lead;
    const Path& lb = rules[b].lead;
    int bound = std::min(la.length(), lb.length());
    for (int ell = 1; ell < bound; ++ell) {
      if (!std::equal(la.word.end() - ell, la.word.end(), lb.word.begin())) continue;
      int degree = la.length() + lb.length() - ell;
      if (degree > cap) {
        truncated = true;
        if (min_skipped_degree < 0 || degree < min_skipped_degree) min_skipped_degree = degree;
        continue;
      }
      Task t{degree, 1, seq++, {}, a, b, ell};
      tasks.insert(std::move(t));
    }
  }

  AlgebraElement reduce(AlgebraElement x) const {
    for (;;) {
      // Largest reducible term; first matching rule, leftmost position.
      const AlgebraElement::Term* pick = nullptr;
      int pick_rule = -1, pick_pos = -1;
      for (const auto& term : x.terms()) {
        int rr = -1, pp = -1;
        for (std::size_t r = 0; r < rules.size(); ++r) {
          if (!rules[r].alive) continue;
          int pos = find_subword(term.first, rules[r].lead);
          if (pos >= 0) {
            rr = static_cast<int>(r);
            pp = pos;
            break;
          }
        }
        if (rr < 0) continue;
        if (pick == nullptr || order.less(pick->first, term.first)) {
          pick = &term;
          pick_rule = rr;
          pick_pos = pp;
        }
      }
      if (pick == nullptr) return x;
      const RuleRec& rule = rules[pick_rule];
      Path u = subpath(q, pick->first, 0, pick_pos);
      Path v = subpath(q, pick->first, pick_pos + rule.lead.length(),
                       pick->first.length() - pick_pos - rule.lead.length());
      Scalar c = pick->second;
      AlgebraElement replaced = AlgebraElement::single(pick->first, c);
      x -= replaced;
      x += sandwich(q, u, rule.tail, v).scaled(c);
    }
  }

  // Installs the reduced nonzero element as a rule and re-establishes
  // inter-reduction.
  void add_rule_from(const AlgebraElement& reduced) {
    const auto& lt = reduced.leading_term(order);
    Path lead = lt.first;
    Scalar c = lt.second;
    AlgebraElement tail = (AlgebraElement::single(lead, c) - reduced).scaled(c.inverse());
    int id = static_cast<int>(rules.size());
    rules.push_back(RuleRec{lead, std::move(tail), true, lead.length()});
    if (rules.size() > kRuleCap) throw internal_error("completion exceeded the rule cap");

    for (std::size_t m = 0; m + 1 < rules.size(); ++m) {
      if (!rules[m].alive) continue;
      if (find_subword(rules[m].lead, lead) >= 0) {
        rules[m].alive = false;
        AlgebraElement e = AlgebraElement::single(rules[m].lead, Scalar(1)) - rules[m].tail;
        push_element(rules[m].degree, std::move(e));
      }
    }
    for (std::size_t m = 0; m < rules.size(); ++m) {
      if (!rules[m].alive || static_cast<int>(m) == id) continue;
      rules[m].tail = reduce(rules[m].tail);
    }
    push_overlaps_for(id);
  }

  void handle_element(AlgebraElement e, bool from_input, int input_index) {
    AlgebraElement r = reduce(std::move(e));
    if (r.is_zero()) {
      if (from_input)
        notices.push_back("relation " + std::to_string(input_index) +
                          " lies in the ideal of the others; dropped");
      return;
    }
    add_rule_from(r);
  }

  void run(const std::vector<HomogeneousRelation>& relations) {
    int index = 0;
    for (const HomogeneousRelation& rel : relations) {
      if (rel.degree() != 2) throw structural_error("completion expects quadratic relations");
      ++index;
      // Tag input elements via degree-2 tasks; the index rides in r1.
      Task t{2, 0, seq++, rel.element()};
      t.r1 = -2 - index;
      tasks.insert(std::move(t));
    }
    while (!tasks.empty()) {
      Task t = *tasks.begin();
      tasks.erase(tasks.begin());
      if (t.kind == 0) {
        bool from_input = t.r1 <= -2;
        handle_element(std::move(t.elem), from_input, from_input ? -t.r1 - 2 : 0);
      } else {
        if (!rules[t.r1].alive || !rules[t.r2].alive) continue;
        handle_element(s_elem(t.r1, t.r2, t.ell), false, 0);
      }
    }
  }

  AlgebraElement s_elem(int a, int b, int ell) const {
    const RuleRec& ra = rules[a];
    const RuleRec& rb = rules[b];
    Path prefix = subpath(q, ra.lead, 0, ra.lead.length() - ell);
    Path suffix = subpath(q, rb.lead, ell, rb.lead.length() - ell);
    Path end = trivial_path(path_target(q, rb.lead));
    Path start = trivial_path(ra.lead.source);
    AlgebraElement via_a = sandwich(q, start, ra.tail, suffix);
    AlgebraElement via_b = sandwich(q, prefix, rb.tail, end);
    return via_a - via_b;
  }
};

}  // namespace

RewriteSystem complete(const Quiver& q, const std::vector<HomogeneousRelation>& relations,
                       const MonomialOrder& order, int degree_cap) {
  if (degree_cap < 2) throw structural_error("completion degree cap must be at least 2");
  Completion state(q, order, degree_cap);
  state.run(relations);

  // Verification sweep: every surviving ambiguity within the cap must
  // reduce to zero against the final rules. Processing order makes this a
  // no-op pass, but it is cheap and turns confluence into a checked
  // postcondition.
  for (bool again = true; again;) {
    again = false;
    for (std::size_t a = 0; a < state.rules.size() && !again; ++a) {
      if (!state.rules[a].alive) continue;
      for (std::size_t b = 0; b < state.rules.size() && !again; ++b) {
        if (!state.rules[b].alive) continue;
        const Path& la = state.rules[a].lead;
        const Path& lb = state.rules[b].lead;
        int bound = std::min(la.length(), lb.length());
        for (int ell = 1; ell < bound; ++ell) {
          if (!std::equal(la.word.end() - ell, la.word.end(), lb.word.begin())) continue;
          if (la.length() + lb.length() - ell > degree_cap) continue;
          AlgebraElement s = state.reduce(state.s_elem(static_cast<int>(a), static_cast<int>(b), ell));
          if (!s.is_zero()) {
            state.add_rule_from(s);
            while (!state.tasks.empty()) {
              auto t = *state.tasks.begin();
              state.tasks.erase(state.tasks.begin());
              if (t.kind == 0)
                state.handle_element(std::move(t.elem), false, 0);
              else if (state.rules[t.r1].alive && state.rules[t.r2].alive)
                state.handle_element(state.s_elem(t.r1, t.r2, t.ell), false, 0);
            }
            again = true;
            break;
          }
        }
      }
    }
  }

  RewriteSystem rs;
  rs.quiver = q;
  rs.order = order;
  rs.completed_to = degree_cap;
  rs.confluent_to = degree_cap;
  rs.truncated = state.truncated;
  if (state.truncated)
    rs.notices.push_back("ambiguities above degree " + std::to_string(degree_cap) +
                         " were not resolved (first at degree " +
                         std::to_string(state.min_skipped_degree) + ")");
  for (const std::string& n : state.notices) rs.notices.push_back(n);
  for (RuleRec& r : state.rules)
    if (r.alive) rs.rules.push_back(RewriteRule{std::move(r.lead), std::move(r.tail)});
  // Deterministic listing: by degree, then lead under the order.
  std::sort(rs.rules.begin(), rs.rules.end(), [&](const RewriteRule& x, const RewriteRule& y) {
    return order.less(x.lead, y.lead);
  });
  return rs;
}

AlgebraElement normal_form(const AlgebraElement& x, const RewriteSystem& rs) {
  AlgebraElement cur = x;
  for (;;) {
    const AlgebraElement::Term* pick = nullptr;
    const RewriteRule* pick_rule = nullptr;
    int pick_pos = -1;
    for (const auto& term : cur.terms()) {
      const RewriteRule* rr = nullptr;
      int pp = -1;
      for (const RewriteRule& rule : rs.rules) {
        int pos = find_subword(term.first, rule.lead);
        if (pos >= 0) {
          rr = &rule;
          pp = pos;
          break;
        }
      }
      if (rr == nullptr) continue;
      if (pick == nullptr || rs.order.less(pick->first, term.first)) {
        pick = &term;
        pick_rule = rr;
        pick_pos = pp;
      }
    }
    if (pick == nullptr) return cur;
    Path u = subpath(rs.quiver, pick->first, 0, pick_pos);
    Path v = subpath(rs.quiver, pick->first, pick_pos + pick_rule->lead.length(),
                     pick->first.length() - pick_pos - pick_rule->lead.length());
    Scalar c = pick->second;
    cur -= AlgebraElement::single(pick->first, c);
    cur += sandwich(rs.quiver, u, pick_rule->tail, v).scaled(c);
  }
}

AlgebraElement normal_form_randomized(const AlgebraElement& x, const RewriteSystem& rs,
                                      std::mt19937& rng) {
  AlgebraElement cur = x;
  for (;;) {
    // Collect every (term, rule, position) redex, then pick one at random.
    struct Redex {
      Path term;
      Scalar coeff;
      const RewriteRule* rule;
      int pos;
    };
    std::vector<Redex> redexes;
    for (const auto& term : cur.terms())
      for (const RewriteRule& rule : rs.rules) {
        if (rule.lead.length() > term.first.length()) continue;
        for (int pos = 0; pos + rule.lead.length() <= term.first.length(); ++pos) {
          if (std::equal(rule.lead.word.begin(), rule.lead.word.end(),
                         term.first.word.begin() + pos))
            redexes.push_back(Redex{term.first, term.second, &rule, pos});
        }
      }
    if (redexes.empty()) return cur;
    const Redex& r = redexes[rng() % redexes.size()];
    Path u = subpath(rs.quiver, r.term, 0, r.pos);
    Path v = subpath(rs.quiver, r.term, r.pos + r.rule->lead.length(),
                     r.term.length() - r.pos - r.rule->lead.length());
    cur -= AlgebraElement::single(r.term, r.coeff);
    cur += sandwich(rs.quiver, u, r.rule->tail, v).scaled(r.coeff);
  }
}

Int graded_dim(const RewriteSystem& rs, int k, int i, int j) {
  if (k > rs.confluent_to)
    throw truncation_error("graded dimension at degree " + std::to_string(k) +
                           " exceeds the confluent degree " + std::to_string(rs.confluent_to));
  if (k < 0) throw structural_error("negative degree");
  if (k == 0) return Int(i == j ? 1 : 0);

  int window = 0;
  for (const RewriteRule& r : rs.rules) window = std::max(window, r.lead.length() - 1);

  std::map<std::tuple<int, std::vector<int>, int>, Int> memo;
  // Count extensions arrow by arrow, remembering just enough of the word's
  // tail to detect every rule lead that could end at the new arrow.
  std::function<Int(int, const std::vector<int>&, int)> rec =
      [&](int vertex, const std::vector<int>& suffix, int remaining) -> Int {
    if (remaining == 0) return Int(vertex == j ? 1 : 0);
    auto key = std::make_tuple(vertex, suffix, remaining);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = 0;
    for (const Arrow& a : rs.quiver.arrows()) {
      if (a.source != vertex) continue;
      std::vector<int> word = suffix;
      word.push_back(a.id);
      bool forbidden = false;
      for (const RewriteRule& r : rs.rules) {
        int len = r.lead.length();
        if (len > static_cast<int>(word.size())) continue;
        if (std::equal(r.lead.word.begin(), r.lead.word.end(), word.end() - len)) {
          forbidden = true;
          break;
        }
      }
      if (forbidden) continue;
      std::vector<int> next = word;
      if (static_cast<int>(next.size()) > window)
        next.erase(next.begin(), next.end() - window);
      total += rec(a.target, next, remaining - 1);
    }
    memo.emplace(key, total);
    return total;
  };
  return rec(i, {}, k);
}

bool ideal_membership(const AlgebraElement& x, const RewriteSystem& rs) {
  int deg = 0;
  for (const auto& t : x.terms()) deg = std::max(deg, t.first.length());
  if (deg > rs.confluent_to)
    throw truncation_error("membership test above the confluent degree");
  return normal_form(x, rs).is_zero();
}

std::vector<Ambiguity> overlap_ambiguities(const RewriteSystem& rs) {
  std::vector<Ambiguity> out;
  for (std::size_t a = 0; a < rs.rules.size(); ++a)
    for (std::size_t b = 0; b < rs.rules.size(); ++b) {
      const Path& la = rs.rules[a].lead;
      const Path& lb = rs.rules[b].lead;
      int bound = std::min(la.length(), lb.length());
      for (int ell = 1; ell < bound; ++ell) {
        if (!std::equal(la.word.end() - ell, la.word.end(), lb.word.begin())) continue;
        std::vector<int> w = la.word;
        w.insert(w.end(), lb.word.begin() + ell, lb.word.end());
        out.push_back(Ambiguity{static_cast<int>(a), static_cast<int>(b), ell,
                                make_path(rs.quiver, std::move(w))});
      }
    }
  return out;
}

AlgebraElement s_element(const RewriteSystem& rs, const Ambiguity& amb) {
  const RewriteRule& ra = rs.rules.at(amb.rule_a);
  const RewriteRule& rb = rs.rules.at(amb.rule_b);
  Path prefix = subpath(rs.quiver, ra.lead, 0, ra.lead.length() - amb.overlap);
  Path suffix = subpath(rs.quiver, rb.lead, amb.overlap, rb.lead.length() - amb.overlap);
  AlgebraElement via_a =
      sandwich(rs.quiver, trivial_path(ra.lead.source), ra.tail, suffix);
  AlgebraElement via_b =
      sandwich(rs.quiver, prefix, rb.tail, trivial_path(path_target(rs.quiver, rb.lead)));
  return via_a - via_b;
}

}  // namespace qcy
