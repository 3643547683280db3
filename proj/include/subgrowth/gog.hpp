#pragma once

#include <cctype>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "subgrowth/catalog.hpp"
#include "subgrowth/error.hpp"
#include "subgrowth/group.hpp"
#include "subgrowth/rational.hpp"

namespace subgrowth {

struct Vertex {
  std::string name;
  FiniteGroup group;
};

/// A geometric edge {x, y}; x == y for loops.
struct Edge {
  std::string name;
  std::size_t x = 0;
  std::size_t y = 0;
  FiniteGroup group;
  EmbeddingMap into_x;
  EmbeddingMap into_y;

  bool is_loop() const { return x == y; }
};

/// A finite connected graph of finite groups.
class GraphOfGroups {
 public:
  GraphOfGroups() = default;
  GraphOfGroups(std::vector<Vertex> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    validate();
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_index(std::string_view name) const {
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (vertices_[v].name == name) return v;
    throw InputError("unknown vertex '" + std::string(name) + "'");
  }

  /// Optional values recorded in the input for comparison in reports.
  std::optional<Rational> expected_mu;
  std::optional<Rational> expected_chi;

 private:
  void validate() const {
    if (vertices_.empty()) throw InputError("graph has no vertices");
    for (std::size_t a = 0; a < vertices_.size(); ++a)
      for (std::size_t b = a + 1; b < vertices_.size(); ++b)
        if (vertices_[a].name == vertices_[b].name) throw InputError("duplicate vertex '" + vertices_[a].name + "'");
    for (const auto& e : edges_) {
      if (e.x >= vertices_.size() || e.y >= vertices_.size()) throw InputError("edge '" + e.name + "' has bad endpoint");
      if (e.into_x.codomain().order() != vertices_[e.x].group.order() ||
          e.into_y.codomain().order() != vertices_[e.y].group.order() ||
          e.into_x.domain().order() != e.group.order() || e.into_y.domain().order() != e.group.order())
        throw InputError("edge '" + e.name + "' embeddings do not match its endpoint groups");
    }
    std::vector<bool> reached(vertices_.size(), false);
    std::deque<std::size_t> queue{0};
    reached[0] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& e : edges_) {
        std::size_t w = e.x == v ? e.y : e.y == v ? e.x : vertices_.size();
        if (w < vertices_.size() && !reached[w]) {
          reached[w] = true;
          queue.push_back(w);
        }
      }
    }
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (!reached[v]) throw InputError("graph is disconnected: vertex '" + vertices_[v].name + "' unreachable");
  }

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// Edge indices of a spanning tree, found by BFS from `root` scanning edges
/// in order.
inline std::vector<std::size_t> spanning_tree(const GraphOfGroups& g, std::size_t root = 0) {
  const auto& vs = g.vertices();
  const auto& es = g.edges();
  std::vector<bool> reached(vs.size(), false);
  std::vector<std::size_t> tree;
  std::deque<std::size_t> queue{root};
  reached[root] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < es.size(); ++k) {
      const auto& e = es[k];
      if (e.is_loop()) continue;
      std::size_t w = e.x == v ? e.y : e.y == v ? e.x : vs.size();
      if (w < vs.size() && !reached[w]) {
        reached[w] = true;
        tree.push_back(k);
        queue.push_back(w);
      }
    }
  }
  return tree;
}

struct EulerData {
  Rational chi;
  Rational mu_free;
};

/// χ = Σ_v 1/|G_v| − Σ_e 1/|G_e| over geometric edges; μ_f = −χ.
inline EulerData euler_characteristic(const GraphOfGroups& g) {
  Rational chi = 0;
  for (const auto& v : g.vertices()) chi += Rational(1, v.group.order());
  for (const auto& e : g.edges()) chi -= Rational(1, e.group.order());
  chi.canonicalize();
  return EulerData{chi, -chi};
}

// ---------------------------------------------------------------------------
// Input language

namespace detail {

class GogLexer {
 public:
  explicit GogLexer(std::string_view text) : text_(text) {}

  struct Token {
    enum Kind { kWord, kNumber, kPunct, kCycles, kEnd } kind = kEnd;
    std::string text;
    std::size_t line = 1, col = 1;
  };

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw InputError("line " + std::to_string(at.line) + ", column " + std::to_string(at.col) + ": " + msg);
  }

  Token peek() {
    if (!ahead_) ahead_ = lex();
    return *ahead_;
  }
  Token next() {
    Token t = peek();
    ahead_.reset();
    return t;
  }
  Token expect_punct(char c) {
    Token t = next();
    if (t.kind != Token::kPunct || t.text[0] != c) fail(t, std::string("expected '") + c + "', found '" + t.text + "'");
    return t;
  }
  Token expect_word() {
    Token t = next();
    if (t.kind != Token::kWord) fail(t, "expected a name, found '" + t.text + "'");
    return t;
  }
  bool accept_punct(char c) {
    Token t = peek();
    if (t.kind == Token::kPunct && t.text[0] == c) {
      next();
      return true;
    }
    return false;
  }
  bool at_keyword(std::string_view w) {
    Token t = peek();
    return t.kind == Token::kWord && t.text == w;
  }
  std::size_t expect_number() {
    Token t = next();
    if (t.kind != Token::kNumber) fail(t, "expected a number, found '" + t.text + "'");
    if (t.text.size() > 6) fail(t, "number too large");
    return std::stoul(t.text);
  }

 private:
  void skip() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
      if (pos_ < text_.size() && text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      return;
    }
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Token lex() {
    skip();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) {
      t.kind = Token::kEnd;
      t.text = "end of input";
      return t;
    }
    char c = text_[pos_];
    if (c == '(') {
      // A run of parenthesized cycles, possibly separated by blanks.
      t.kind = Token::kCycles;
      for (;;) {
        if (pos_ >= text_.size() || text_[pos_] != '(') break;
        while (pos_ < text_.size() && text_[pos_] != ')') {
          if (text_[pos_] == '\n' || text_[pos_] == ';') fail(t, "unterminated cycle");
          t.text += text_[pos_];
          advance();
        }
        if (pos_ >= text_.size()) fail(t, "unterminated cycle");
        t.text += ')';
        advance();
        std::size_t save_pos = pos_, save_line = line_, save_col = col_;
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) advance();
        if (pos_ >= text_.size() || text_[pos_] != '(') {
          pos_ = save_pos;
          line_ = save_line;
          col_ = save_col;
          break;
        }
      }
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      t.kind = Token::kNumber;
      t.text += c;
      advance();
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
        t.text += text_[pos_];
        advance();
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::kWord;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                                     text_[pos_] == '.' || text_[pos_] == '\'')) {
        t.text += text_[pos_];
        advance();
      }
      return t;
    }
    if (std::string_view("{};,:=").find(c) != std::string_view::npos) {
      t.kind = Token::kPunct;
      t.text = std::string(1, c);
      advance();
      return t;
    }
    fail(t, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  std::optional<Token> ahead_;
};

inline FiniteGroup named_group(GogLexer& lex, const Caps& caps) {
  auto t = lex.expect_word();
  const std::string& w = t.text;
  if (w == "Klein4") return klein_four();
  if (w == "Trivial") return trivial_group();
  if (w == "Sym" || w == "Alt" || w == "Cyc" || w == "Dih") {
    auto a = lex.next();
    if (a.kind != GogLexer::Token::kCycles || a.text.size() < 3) lex.fail(a, "expected '(n)' after " + w);
    std::string inner = a.text.substr(1, a.text.size() - 2);
    std::size_t n = 0;
    for (char ch : inner) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (!std::isdigit(static_cast<unsigned char>(ch)) || inner.find(')') != std::string::npos)
        lex.fail(a, "expected '(n)' after " + w);
      n = n * 10 + static_cast<std::size_t>(ch - '0');
      if (n > 1000) lex.fail(a, "group parameter too large");
    }
    try {
      if (w == "Sym") return symmetric_group(n, caps.max_group_order);
      if (w == "Alt") return alternating_group(n, caps.max_group_order);
      if (w == "Cyc") return cyclic_group(n);
      return dihedral_group(n);
    } catch (const InputError& e) {
      lex.fail(t, e.what());
    }
  }
  lex.fail(t, "unknown group '" + w + "'");
}

/// Comma-separated permutations, possibly empty, up to the next ';'.
inline std::vector<Permutation> perm_list(GogLexer& lex, std::size_t degree) {
  std::vector<Permutation> out;
  if (lex.peek().kind == GogLexer::Token::kPunct && lex.peek().text == ";") return out;
  for (;;) {
    auto t = lex.next();
    if (t.kind != GogLexer::Token::kCycles) lex.fail(t, "expected cycle notation, found '" + t.text + "'");
    try {
      out.push_back(parse_cycles(t.text, degree));
    } catch (const InputError& e) {
      lex.fail(t, e.what());
    }
    if (!lex.accept_punct(',')) break;
  }
  return out;
}

/// `degree d; gens ...;` or `group <Named>;`
inline FiniteGroup group_body(GogLexer& lex, const Caps& caps) {
  if (lex.at_keyword("group")) {
    lex.next();
    lex.accept_punct('=');
    FiniteGroup g = named_group(lex, caps);
    lex.expect_punct(';');
    return g;
  }
  auto kw = lex.expect_word();
  if (kw.text != "degree") lex.fail(kw, "expected 'degree' or 'group'");
  std::size_t d = lex.expect_number();
  if (d == 0) lex.fail(kw, "degree must be positive");
  lex.expect_punct(';');
  std::vector<Permutation> gens;
  if (lex.at_keyword("gens")) {
    lex.next();
    gens = perm_list(lex, d);
    lex.expect_punct(';');
  }
  try {
    return generate(gens, d, caps.max_group_order);
  } catch (const InputError& e) {
    lex.fail(kw, e.what());
  }
}

}  // namespace detail

/// Parses the line-oriented graph-of-groups language:
///
///     vertex A = Sym(4)
///     vertex B { degree 3; gens (1 2), (1 2 3); }
///     edge e A B { degree 2; gens (1 2); into A: (1 2); into B: (2 3); }
///     expect mu 1/4;
///
/// Loops may label their two embeddings `left:` / `right:`.
inline GraphOfGroups parse_gog(std::string_view text, const Caps& caps = {}) {
  using Tok = detail::GogLexer::Token;
  detail::GogLexer lex(text);
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::optional<Rational> exp_mu, exp_chi;
  auto find_vertex = [&](const Tok& t) {
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (vertices[v].name == t.text) return v;
    lex.fail(t, "unknown vertex '" + t.text + "'");
  };

  while (lex.peek().kind != Tok::kEnd) {
    Tok kw = lex.expect_word();
    if (kw.text == "vertex") {
      Tok name = lex.expect_word();
      for (const auto& v : vertices)
        if (v.name == name.text) lex.fail(name, "duplicate vertex '" + name.text + "'");
      FiniteGroup g;
      if (lex.accept_punct('=')) {
        g = detail::named_group(lex, caps);
        lex.accept_punct(';');
      } else {
        lex.expect_punct('{');
        g = detail::group_body(lex, caps);
        lex.expect_punct('}');
      }
      vertices.push_back(Vertex{name.text, g});
    } else if (kw.text == "edge") {
      Tok name = lex.expect_word();
      for (const auto& e : edges)
        if (e.name == name.text) lex.fail(name, "duplicate edge '" + name.text + "'");
      Tok tx = lex.expect_word();
      Tok ty = lex.expect_word();
      std::size_t x = find_vertex(tx), y = find_vertex(ty);
      lex.expect_punct('{');
      FiniteGroup eg = detail::group_body(lex, caps);
      std::vector<Permutation> side[2];
      bool given[2] = {false, false};
      for (std::size_t s = 0; s < 2; ++s) {
        Tok clause = lex.expect_word();
        std::size_t slot = s;
        std::size_t target = x;
        Tok where = clause;
        if (clause.text == "into") {
          where = lex.expect_word();
          target = find_vertex(where);
          if (target != x && target != y)
            lex.fail(where, "vertex '" + where.text + "' is not an endpoint of '" + name.text + "'");
          if (x != y) slot = target == x ? 0 : 1;
        } else if (clause.text == "left" || clause.text == "right") {
          if (x != y) lex.fail(clause, "'" + clause.text + ":' is only valid for loops");
          slot = clause.text == "left" ? 0 : 1;
        } else {
          lex.fail(clause, "expected 'into', 'left' or 'right'");
        }
        if (given[slot]) lex.fail(where, "duplicate embedding clause for edge '" + name.text + "'");
        lex.expect_punct(':');
        side[slot] = detail::perm_list(lex, vertices[target].group.degree());
        given[slot] = true;
        lex.expect_punct(';');
      }
      lex.expect_punct('}');
      try {
        EmbeddingMap ex(eg, vertices[x].group, side[0]);
        EmbeddingMap ey(eg, vertices[y].group, side[1]);
        edges.push_back(Edge{name.text, x, y, eg, std::move(ex), std::move(ey)});
      } catch (const InputError& e) {
        lex.fail(name, "edge '" + name.text + "': " + e.what());
      }
    } else if (kw.text == "expect") {
      Tok what = lex.expect_word();
      Tok val = lex.next();
      if (val.kind != Tok::kNumber) lex.fail(val, "expected a rational");
      Rational r;
      try {
        r = parse_rational(val.text);
      } catch (const InputError& e) {
        lex.fail(val, e.what());
      }
      if (what.text == "mu") {
        exp_mu = r;
      } else if (what.text == "chi") {
        exp_chi = r;
      } else {
        lex.fail(what, "expected 'mu' or 'chi'");
      }
      lex.accept_punct(';');
    } else {
      lex.fail(kw, "expected 'vertex', 'edge' or 'expect', found '" + kw.text + "'");
    }
  }
  GraphOfGroups g(std::move(vertices), std::move(edges));
  g.expected_mu = exp_mu;
  g.expected_chi = exp_chi;
  return g;
}

/// Inverse of parse_gog (named groups are written by label).
inline std::string format_gog(const GraphOfGroups& g) {
  std::ostringstream os;
  auto group_clause = [](const FiniteGroup& grp) {
    if (!grp.label().empty()) return "group " + grp.label() + ";";
    std::string s = "degree " + std::to_string(grp.degree()) + "; gens ";
    for (std::size_t k = 0; k < grp.generators().size(); ++k) s += (k ? ", " : "") + to_cycles(grp.generators()[k]);
    return s + ";";
  };
  auto list = [](const std::vector<Permutation>& ps) {
    std::string s;
    for (std::size_t k = 0; k < ps.size(); ++k) s += (k ? ", " : "") + to_cycles(ps[k]);
    return s;
  };
  for (const auto& v : g.vertices()) {
    if (!v.group.label().empty())
      os << "vertex " << v.name << " = " << v.group.label() << "\n";
    else
      os << "vertex " << v.name << " { " << group_clause(v.group) << " }\n";
  }
  for (const auto& e : g.edges()) {
    const auto& vx = g.vertices()[e.x].name;
    const auto& vy = g.vertices()[e.y].name;
    os << "edge " << e.name << " " << vx << " " << vy << " { " << group_clause(e.group);
    if (e.is_loop())
      os << " left: " << list(e.into_x.generator_images()) << "; right: " << list(e.into_y.generator_images()) << "; }\n";
    else
      os << " into " << vx << ": " << list(e.into_x.generator_images()) << "; into " << vy << ": "
         << list(e.into_y.generator_images()) << "; }\n";
  }
  if (g.expected_mu) os << "expect mu " << to_string(*g.expected_mu) << ";\n";
  if (g.expected_chi) os << "expect chi " << to_string(*g.expected_chi) << ";\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Constructors

/// G ∗_E H with E embedded by the given generator images.
inline GraphOfGroups amalgam(const FiniteGroup& g, const FiniteGroup& h, const FiniteGroup& e,
                             std::vector<Permutation> into_g, std::vector<Permutation> into_h) {
  std::vector<Vertex> vs{{"A", g}, {"B", h}};
  std::vector<Edge> es{Edge{"e", 0, 1, e, EmbeddingMap(e, g, std::move(into_g)), EmbeddingMap(e, h, std::move(into_h))}};
  return GraphOfGroups(std::move(vs), std::move(es));
}

/// G ∗_⟨x⟩ G with x embedded identically on both sides.
inline GraphOfGroups cyclic_amalgam(const FiniteGroup& g, const Permutation& x) {
  if (!g.contains(x)) throw InputError("element " + to_cycles(x) + " is not in the group");
  FiniteGroup c = cyclic_group(x.order());
  std::vector<Permutation> img;
  if (!c.generators().empty()) img.push_back(x);
  return amalgam(g, g, c, img, img);
}

/// Star graph with trivial edge groups; the first group is the centre.
inline GraphOfGroups free_product(const std::vector<FiniteGroup>& groups) {
  if (groups.empty()) throw InputError("free product of no groups");
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  FiniteGroup t = trivial_group();
  for (std::size_t k = 0; k < groups.size(); ++k) vs.push_back(Vertex{"G" + std::to_string(k + 1), groups[k]});
  for (std::size_t k = 1; k < groups.size(); ++k)
    es.push_back(Edge{"t" + std::to_string(k), 0, k, t, EmbeddingMap(t, groups[0], {}), EmbeddingMap(t, groups[k], {})});
  return GraphOfGroups(std::move(vs), std::move(es));
}

/// One trivial vertex with r trivial loops.
inline GraphOfGroups free_group(std::size_t r) {
  FiniteGroup t = trivial_group();
  std::vector<Vertex> vs{{"v", t}};
  std::vector<Edge> es;
  for (std::size_t k = 0; k < r; ++k)
    es.push_back(Edge{"f" + std::to_string(k + 1), 0, 0, t, EmbeddingMap(t, t, {}), EmbeddingMap(t, t, {})});
  return GraphOfGroups(std::move(vs), std::move(es));
}

enum class FamilyVariant { symmetric, alternating };

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Checks that Γ_{p,k,ℓ} is well defined (x fits on k points); throws InputError.
inline void check_family(std::size_t p, std::size_t k, std::size_t l, FamilyVariant variant) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (l < 1) throw InputError("l must be at least 1");
  if (k < l * p) throw InputError("requires k >= l*p");
  if (variant == FamilyVariant::alternating && p == 2 && l % 2 == 1)
    throw InputError("alternating variant requires p odd or (p = 2 and l even)");
}

/// Range in which the closed form is claimed: k − ℓp ≥ 2.
inline bool family_in_range(std::size_t p, std::size_t k, std::size_t l) { return k >= l * p + 2; }

/// x = (1 … p)(p+1 … 2p)… with l cycles, on k points.
inline Permutation family_element(std::size_t p, std::size_t k, std::size_t l) {
  std::vector<std::vector<Point>> cycles(l);
  for (std::size_t c = 0; c < l; ++c)
    for (std::size_t i = 0; i < p; ++i) cycles[c].push_back(static_cast<Point>(c * p + i));
  return from_cycles(k, cycles);
}

/// Text of S_k ∗_{C_p} S_k (or A_k ∗_{C_p} A_k) with free_rank trivial loops
/// attached; needs no group enumeration, so k may be large.
inline std::string family_gog_text(std::size_t p, std::size_t k, std::size_t l, FamilyVariant variant,
                                   std::size_t free_rank = 0) {
  check_family(p, k, l, variant);
  std::string grp = (variant == FamilyVariant::symmetric ? "Sym(" : "Alt(") + std::to_string(k) + ")";
  std::string x = to_cycles(family_element(p, k, l));
  std::ostringstream os;
  os << "vertex A = " << grp << "\n"
     << "vertex B = " << grp << "\n"
     << "edge c A B { group Cyc(" << p << "); into A: " << x << "; into B: " << x << "; }\n";
  for (std::size_t r = 1; r <= free_rank; ++r) os << "edge f" << r << " A A { group Trivial; left: ; right: ; }\n";
  return os.str();
}

inline GraphOfGroups family_gamma(std::size_t p, std::size_t k, std::size_t l, FamilyVariant variant,
                                  const Caps& caps = {}) {
  check_family(p, k, l, variant);
  FiniteGroup g = variant == FamilyVariant::symmetric ? symmetric_group(k, caps.max_group_order)
                                                      : alternating_group(k, caps.max_group_order);
  return cyclic_amalgam(g, family_element(p, k, l));
}

}  // namespace subgrowth
