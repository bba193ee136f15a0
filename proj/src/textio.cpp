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

#include "qcy/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "qcy/rewrite.hpp"

namespace qcy {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(strip(cur));
  return out;
}

std::vector<std::string> tokenize_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// Raw vertex tokens are resolved once the whole file is read, so that the
// e0-vs-e1 base convention can be detected from all mentions together.
struct VertexToken {
  bool e_form = false;
  long index = 0;
};

VertexToken parse_vertex_token(const std::string& tok) {
  VertexToken v;
  std::string digits = tok;
  if (!tok.empty() && (tok[0] == 'e' || tok[0] == 'E')) {
    v.e_form = true;
    digits = tok.substr(1);
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](unsigned char c) { return std::isdigit(c); }))
    throw parse_error("bad vertex label: '" + tok + "'");
  v.index = std::stol(digits);
  return v;
}

int resolve_vertex(const VertexToken& tok, int n, bool e_labels_one_based) {
  long idx = tok.index;
  if (tok.e_form && e_labels_one_based) idx -= 1;
  if (idx < 0 || idx >= n) throw parse_error("vertex index out of range");
  return static_cast<int>(idx);
}

struct RawArrow {
  std::string label;
  VertexToken src, tgt;
};

// --- scalar / element expression scanner ---------------------------------

struct Lexer {
  std::string s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw parse_error(std::string("expected '") + c + "' in '" + s + "'");
  }
  std::string number() {
    skip_ws();
    std::size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) throw parse_error("expected a number in '" + s + "'");
    return s.substr(b, pos - b);
  }
  std::string ident() {
    skip_ws();
    std::size_t b = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '*')) {
      // '*' is both the product sign and part of labels like a0*; a star is
      // taken into the identifier only when glued to it and not followed by
      // an alphanumeric (so a*b stays a product).
      if (s[pos] == '*') {
        bool glued = pos > b;
        bool next_alnum = pos + 1 < s.size() &&
                          (std::isalnum(static_cast<unsigned char>(s[pos + 1])) || s[pos + 1] == '_' ||
                           s[pos + 1] == '(');
        if (!glued || next_alnum) break;
      }
      ++pos;
    }
    if (b == pos) throw parse_error("expected a name in '" + s + "'");
    return s.substr(b, pos - b);
  }
};

Rational parse_rational_at(Lexer& lx) {
  std::string num = lx.number();
  if (lx.accept('/')) {
    std::string den = lx.number();
    return Rational(Int(num), Int(den));
  }
  return Rational(Int(num), Int(1));
}

// factor := rational | sqrt(int) | arrow-label[^power]
// term   := [sign] factor (* factor)*
// expr   := term ((+|-) term)*
struct FactorResult {
  bool is_scalar = false;
  Scalar scalar;
  std::vector<int> word;  // appended arrow ids (label repeated `power` times)
};

Scalar parse_scalar_until(Lexer& lx, char terminator);

FactorResult parse_factor(Lexer& lx, const Quiver* q) {
  FactorResult out;
  char c = lx.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    out.is_scalar = true;
    out.scalar = Scalar(parse_rational_at(lx));
    return out;
  }
  if (c == '(') {
    lx.expect('(');
    out.is_scalar = true;
    out.scalar = parse_scalar_until(lx, ')');
    lx.expect(')');
    return out;
  }
  std::string name = lx.ident();
  if (name == "sqrt") {
    lx.expect('(');
    bool neg = lx.accept('-');
    std::string digits = lx.number();
    lx.expect(')');
    Int d(digits);
    if (neg) d = -d;
    out.is_scalar = true;
    out.scalar = Scalar::sqrt_of(d);
    return out;
  }
  if (q == nullptr) throw parse_error("unexpected name '" + name + "' in a scalar");
  int id = q->arrow_by_label(name);
  long power = 1;
  if (lx.accept('^')) power = std::stol(lx.number());
  if (power < 1) throw parse_error("arrow power must be positive");
  out.word.assign(static_cast<std::size_t>(power), id);
  return out;
}

AlgebraElement parse_expression(Lexer& lx, const Quiver* q) {
  std::vector<AlgebraElement::Term> terms;
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('+')) {
      sign = 1;
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw parse_error("expected '+' or '-' in '" + lx.s + "'");
    }
    first = false;
    Scalar coeff(sign);
    std::vector<int> word;
    bool more = true;
    while (more) {
      FactorResult f = parse_factor(lx, q);
      if (f.is_scalar)
        coeff *= f.scalar;
      else
        word.insert(word.end(), f.word.begin(), f.word.end());
      more = lx.accept('*');
    }
    Path p = word.empty() ? Path{} : make_path(*q, word);
    if (word.empty()) throw parse_error("a term needs at least one arrow: '" + lx.s + "'");
    terms.emplace_back(std::move(p), std::move(coeff));
  }
  if (terms.empty()) throw parse_error("empty expression");
  return AlgebraElement::from_terms(std::move(terms));
}

// Sum of scalar terms up to `terminator` ('\0' = end of input).
Scalar parse_scalar_until(Lexer& lx, char terminator) {
  Scalar total(0);
  bool first = true;
  while (!lx.eof() && lx.peek() != terminator) {
    int sign = 1;
    if (lx.accept('+')) {
      sign = 1;
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw parse_error("expected '+' or '-' in '" + lx.s + "'");
    }
    first = false;
    Scalar value(sign);
    bool more = true;
    while (more) {
      FactorResult f = parse_factor(lx, nullptr);
      value *= f.scalar;
      more = lx.accept('*');
    }
    total += value;
  }
  if (first) throw parse_error("empty scalar");
  return total;
}

Scalar parse_scalar_expression(Lexer& lx) { return parse_scalar_until(lx, '\0'); }

std::string word_str(const Quiver& q, const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += "*";
    out += q.arrow(word[i]).label;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  PresentationFile pf = parse_presentation(text);
  return pf.quiver;
}

PresentationFile parse_presentation(const std::string& text) {
  std::vector<std::string> lines = tokenize_lines(text);
  int n = -1;
  std::vector<RawArrow> raw_arrows;
  std::vector<std::pair<VertexToken, VertexToken>> raw_mu;
  bool mu_identity = false, has_mu = false;
  std::vector<std::pair<std::string, std::string>> raw_tau;
  std::vector<std::string> raw_relations;

  for (const std::string& line : lines) {
    if (line.rfind("vertices:", 0) == 0) {
      n = std::stoi(strip(line.substr(9)));
      if (n <= 0) throw parse_error("vertices must be positive");
    } else if (line.rfind("arrow ", 0) == 0) {
      std::istringstream in(line.substr(6));
      RawArrow a;
      std::string src, tgt;
      if (!(in >> a.label >> src >> tgt)) throw parse_error("bad arrow line: '" + line + "'");
      a.src = parse_vertex_token(src);
      a.tgt = parse_vertex_token(tgt);
      raw_arrows.push_back(std::move(a));
    } else if (line.rfind("mu:", 0) == 0) {
      has_mu = true;
      std::string body = strip(line.substr(3));
      if (body == "identity" || body == "id") {
        mu_identity = true;
      } else {
        for (const std::string& piece : split(body, ',')) {
          std::size_t arrow_pos = piece.find("->");
          if (arrow_pos == std::string::npos)
            throw parse_error("bad mu entry: '" + piece + "'");
          raw_mu.emplace_back(parse_vertex_token(strip(piece.substr(0, arrow_pos))),
                              parse_vertex_token(strip(piece.substr(arrow_pos + 2))));
        }
      }
    } else if (line.rfind("tau ", 0) == 0) {
      std::size_t eq = line.find('=');
      if (eq == std::string::npos) throw parse_error("bad tau line: '" + line + "'");
      raw_tau.emplace_back(strip(line.substr(4, eq - 4)), strip(line.substr(eq + 1)));
    } else if (line.rfind("relation ", 0) == 0) {
      raw_relations.push_back(strip(line.substr(9)));
    } else {
      throw parse_error("unrecognised line: '" + line + "'");
    }
  }
  if (n < 0) throw parse_error("missing 'vertices:' line");

  // e-labels are 1-based unless e0 appears anywhere.
  bool saw_e0 = false;
  auto check = [&](const VertexToken& t) {
    if (t.e_form && t.index == 0) saw_e0 = true;
  };
  for (const RawArrow& a : raw_arrows) {
    check(a.src);
    check(a.tgt);
  }
  for (const auto& [from, to] : raw_mu) {
    check(from);
    check(to);
  }
  bool one_based = !saw_e0;

  PresentationFile pf;
  pf.quiver = Quiver(n);
  for (const RawArrow& a : raw_arrows)
    pf.quiver.add_arrow(a.label, resolve_vertex(a.src, n, one_based),
                        resolve_vertex(a.tgt, n, one_based));

  if (has_mu) {
    pf.has_mu = true;
    if (mu_identity) {
      pf.mu = VertexPermutation::identity(n);
    } else {
      std::vector<int> images(n, -1);
      for (const auto& [from, to] : raw_mu) {
        int f = resolve_vertex(from, n, one_based);
        int t = resolve_vertex(to, n, one_based);
        if (images[f] != -1) throw parse_error("mu maps a vertex twice");
        images[f] = t;
      }
      for (int v : images)
        if (v == -1) throw parse_error("mu does not cover every vertex");
      try {
        pf.mu = VertexPermutation(images);
      } catch (const structural_error& e) {
        throw parse_error(std::string("bad mu: ") + e.what());
      }
    }
  }

  if (!raw_tau.empty()) {
    pf.has_tau = true;
    int m = pf.quiver.arrow_count();
    pf.tau = ScalarMatrix(m, m);
    std::vector<bool> seen(m, false);
    for (const auto& [label, expr] : raw_tau) {
      int row = pf.quiver.arrow_by_label(label);
      if (seen[row]) throw parse_error("tau defined twice for arrow '" + label + "'");
      seen[row] = true;
      Lexer lx{expr};
      AlgebraElement image = parse_expression(lx, &pf.quiver);
      for (const auto& [p, c] : image.terms()) {
        if (p.length() != 1) throw parse_error("tau image must be linear in arrows: '" + expr + "'");
        pf.tau.at(row, p.word[0]) = c;
      }
    }
    for (int r = 0; r < m; ++r)
      if (!seen[r]) throw parse_error("tau missing for arrow '" + pf.quiver.arrow(r).label + "'");
  }

  for (const std::string& expr : raw_relations) {
    Lexer lx{expr};
    pf.relations.push_back(parse_expression(lx, &pf.quiver));
  }
  return pf;
}

std::string serialize_quiver(const Quiver& q) {
  std::ostringstream out;
  out << "vertices: " << q.vertex_count() << "\n";
  for (const Arrow& a : q.arrows())
    out << "arrow " << a.label << " e" << (a.source + 1) << " e" << (a.target + 1) << "\n";
  return out.str();
}

Scalar parse_scalar(const std::string& text) {
  Lexer lx{text};
  return parse_scalar_expression(lx);
}

AlgebraElement parse_element(const Quiver& q, const std::string& text) {
  Lexer lx{text};
  return parse_expression(lx, &q);
}

std::string serialize_path(const Quiver& q, const Path& p) {
  if (p.trivial()) return "e" + std::to_string(p.source + 1);
  return word_str(q, p.word);
}

std::string serialize_element(const Quiver& q, const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : x.terms()) {
    std::string coeff;
    bool negative = false;
    Scalar cc = c;
    if (cc.is_rational() && cc.rational_part().sign() < 0) {
      negative = true;
      cc = -cc;
    }
    if (!cc.is_one()) {
      std::string cs = cc.str();
      bool needs_parens = !cc.is_rational() && cs.find('+') != std::string::npos;
      if (!cc.is_rational() && !needs_parens && cs.find('-', 1) != std::string::npos)
        needs_parens = true;
      coeff = needs_parens ? "(" + cs + ")*" : cs + "*";
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coeff + word_str(q, p.word);
  }
  return out;
}

std::string serialize_mesh_file(const Quiver& q, const VertexPermutation& mu,
                                const ScalarMatrix& tau) {
  std::ostringstream out;
  out << serialize_quiver(q);
  if (mu.is_identity()) {
    out << "mu: identity\n";
  } else {
    out << "mu: ";
    for (int v = 0; v < mu.size(); ++v)
      out << (v > 0 ? ", " : "") << "e" << (v + 1) << "->e" << (mu(v) + 1);
    out << "\n";
  }
  for (int r = 0; r < q.arrow_count(); ++r) {
    std::vector<AlgebraElement::Term> terms;
    for (int c = 0; c < q.arrow_count(); ++c)
      if (!tau.at(r, c).is_zero())
        terms.emplace_back(make_path(q, {c}), tau.at(r, c));
    out << "tau " << q.arrow(r).label << " = "
        << serialize_element(q, AlgebraElement::from_terms(std::move(terms))) << "\n";
  }
  return out.str();
}

std::string serialize_series(const std::vector<IntMatrix>& coeffs) {
  std::ostringstream out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out << k << "\n";
    const IntMatrix& m = coeffs[k];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) out << (c > 0 ? "\t" : "") << m.at(r, c).get_str();
      out << "\n";
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string rule_str(const RewriteSystem& rs, const RewriteRule& rule) {
  return serialize_path(rs.quiver, rule.lead) + " -> " +
         serialize_element(rs.quiver, rule.tail);
}

}  // namespace qcy
