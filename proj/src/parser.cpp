#include "noeth/parser.hpp"

#include <cctype>
#include <memory>

#include "noeth/error.hpp"

namespace noeth {

namespace {

struct Loc {
  int line = 1;
  int column = 1;
};

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  Loc loc;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  Loc loc;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), loc});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), loc});
      advance(j - i);
    } else if (std::string_view("+-*/^()[],;|").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), loc});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", loc.line, loc.column);
    }
  }
  out.push_back({Tok::End, "", loc});
  return out;
}

// Syntax tree for polynomial expressions, resolved against a ring later so
// that syntax errors are reported before unknown names.
struct Expr {
  enum Kind { Num, Var, Sum, Prod, Quot, Pow, Neg, Vec } kind;
  Loc loc;
  std::string text{};  // number digits or variable name
  int exponent = 0;
  std::vector<Expr> kids{};
  std::vector<bool> negated{};  // Sum: per-summand sign
};

class Parser {
public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool at_punct(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool at_word(const char* w) const { return peek().kind == Tok::Ident && peek().text == w; }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& msg, Loc loc) const {
    throw ParseError(msg, loc.line, loc.column);
  }
  [[noreturn]] void fail_here(const std::string& msg) const { fail(msg, peek().loc); }

  void expect_punct(const char* p) {
    if (!at_punct(p)) fail_here(std::string("expected '") + p + "'" + found());
    next();
  }

  std::string found() const {
    if (at_end()) return ", found end of input";
    return ", found '" + peek().text + "'";
  }

  std::string ident() {
    if (peek().kind != Tok::Ident) fail_here("expected a name" + found());
    return next().text;
  }

  bool starts_primary() const {
    return peek().kind == Tok::Number || peek().kind == Tok::Ident || at_punct("(") || at_punct("-");
  }

  Expr expr() {
    Expr sum{Expr::Sum, peek().loc};
    bool neg = false;
    if (at_punct("+") || at_punct("-")) {
      Token op = next();
      neg = op.text == "-";
      if (!starts_primary()) fail("expected a term after '" + op.text + "'", op.loc);
    }
    sum.kids.push_back(term());
    sum.negated.push_back(neg);
    while (at_punct("+") || at_punct("-")) {
      Token op = next();
      if (!starts_primary()) fail("expected a term after '" + op.text + "'", op.loc);
      sum.kids.push_back(term());
      sum.negated.push_back(op.text == "-");
    }
    return sum;
  }

  Expr term() {
    Expr prod{Expr::Prod, peek().loc};
    prod.kids.push_back(factor());
    while (true) {
      if (at_punct("*") || at_punct("/")) {
        Token op = next();
        if (!starts_primary()) fail("expected a factor after '" + op.text + "'", op.loc);
        Expr f = factor();
        if (op.text == "/") {
          Expr q{Expr::Quot, op.loc};
          q.kids.push_back(std::move(f));
          prod.kids.push_back(std::move(q));
        } else {
          prod.kids.push_back(std::move(f));
        }
      } else if (peek().kind == Tok::Number || peek().kind == Tok::Ident || at_punct("(")) {
        if (peek().kind == Tok::Ident && is_keyword(peek().text)) break;
        prod.kids.push_back(factor());
      } else {
        break;
      }
    }
    return prod;
  }

  Expr factor() {
    if (at_punct("-")) {
      Expr neg{Expr::Neg, next().loc};
      if (!starts_primary()) fail_here("expected a factor after '-'" + found());
      neg.kids.push_back(factor());
      return neg;
    }
    Expr base = primary();
    if (!at_punct("^")) return base;
    Token op = next();
    if (peek().kind != Tok::Number) fail("malformed exponent after '^'", op.loc);
    Token n = next();
    Expr pow{Expr::Pow, op.loc};
    if (n.text.size() > 6) fail("exponent too large", n.loc);
    pow.exponent = std::stoi(n.text);
    pow.kids.push_back(std::move(base));
    if (at_punct("^")) fail_here("malformed exponent: use parentheses for nested powers");
    return pow;
  }

  Expr primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      Token n = next();
      return Expr{Expr::Num, n.loc, n.text};
    }
    if (t.kind == Tok::Ident) {
      if (is_keyword(t.text)) fail_here("expected a term, found keyword '" + t.text + "'");
      Token n = next();
      return Expr{Expr::Var, n.loc, n.text};
    }
    if (at_punct("(")) {
      next();
      Expr e = expr();
      expect_punct(")");
      return e;
    }
    fail_here("expected a term" + found());
  }

  // A polynomial or a bracketed vector of polynomials.
  Expr element() {
    if (!at_punct("[")) return expr();
    Expr vec{Expr::Vec, next().loc};
    vec.kids.push_back(expr());
    while (at_punct(",")) {
      next();
      vec.kids.push_back(expr());
    }
    expect_punct("]");
    return vec;
  }

  std::vector<Expr> element_list() {
    std::vector<Expr> out{element()};
    while (at_punct(",")) {
      next();
      out.push_back(element());
    }
    return out;
  }

  static bool is_keyword(const std::string& w) {
    return w == "ring" || w == "order" || w == "module_order" || w == "ideal" || w == "module" ||
           w == "component" || w == "center" || w == "dual";
  }

  std::size_t position() const { return pos_; }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---- resolution -----------------------------------------------------------

class Resolver {
public:
  Resolver(RingPtr ring, ModuleOrder order) : ring_(std::move(ring)), order_(order) {}

  Poly scalar(const Expr& e) const {
    const RingPtr scalar_ring = ring_->rank() == 1 ? ring_ : ring_->with_rank(1);
    return eval(e, scalar_ring);
  }

  Poly element(const Expr& e) const {
    if (ring_->rank() == 1) {
      if (e.kind == Expr::Vec) fail("vector given in an ideal", e.loc);
      return eval(e, ring_);
    }
    if (e.kind != Expr::Vec) fail("expected a vector [f1, ..., f" + std::to_string(ring_->rank()) + "]", e.loc);
    if (static_cast<int>(e.kids.size()) != ring_->rank()) {
      fail("rank mismatch: expected " + std::to_string(ring_->rank()) + " entries, found " +
               std::to_string(e.kids.size()),
           e.loc);
    }
    std::vector<Term<Rational>> terms;
    for (std::size_t k = 0; k < e.kids.size(); ++k) {
      const Poly entry = scalar(e.kids[k]);
      for (auto t : entry.terms()) {
        t.mono.pos = static_cast<int>(k);
        terms.push_back(std::move(t));
      }
    }
    return Poly::from_terms(ring_, order_, std::move(terms));
  }

  Rational constant(const Expr& e) const {
    Poly p = scalar(e);
    if (!p.is_constant()) fail("expected a number", e.loc);
    return p.is_zero() ? Rational(0) : p.leading().coeff;
  }

private:
  [[noreturn]] static void fail(const std::string& msg, Loc loc) {
    throw ParseError(msg, loc.line, loc.column);
  }

  Poly eval(const Expr& e, const RingPtr& ring) const {
    const auto n = static_cast<std::size_t>(ring->nvars());
    switch (e.kind) {
      case Expr::Num:
        return make_constant(ring, order_, Rational(mpz_class(e.text)));
      case Expr::Var: {
        const int idx = ring->index_of(e.text);
        if (idx < 0) fail("unknown variable '" + e.text + "'", e.loc);
        Exponents exp(n, 0);
        exp[static_cast<std::size_t>(idx)] = 1;
        return make_monomial(ring, order_, exp);
      }
      case Expr::Sum: {
        Poly acc(ring, order_);
        for (std::size_t i = 0; i < e.kids.size(); ++i) {
          Poly p = eval(e.kids[i], ring);
          acc = e.negated[i] ? acc - p : acc + p;
        }
        return acc;
      }
      case Expr::Prod: {
        Poly acc = make_constant(ring, order_, 1);
        for (const auto& k : e.kids) {
          if (k.kind == Expr::Quot) {
            Poly d = eval(k.kids.front(), ring);
            if (!d.is_constant()) fail("can only divide by a number", k.loc);
            if (d.is_zero()) fail("division by zero", k.loc);
            acc = acc.scaled(Rational(1) / d.leading().coeff);
          } else {
            acc = acc * eval(k, ring);
          }
        }
        return acc;
      }
      case Expr::Pow: {
        Poly base = eval(e.kids.front(), ring);
        Poly acc = make_constant(ring, order_, 1);
        for (int i = 0; i < e.exponent; ++i) acc = acc * base;
        return acc;
      }
      case Expr::Neg:
        return -eval(e.kids.front(), ring);
      case Expr::Quot:
      case Expr::Vec:
        break;
    }
    fail("unexpected expression", e.loc);
  }

  RingPtr ring_;
  ModuleOrder order_;
};

OrderKind simple_kind(const std::string& w, Loc loc) {
  if (w == "lex") return OrderKind::Lex;
  if (w == "deglex") return OrderKind::DegLex;
  if (w == "degrevlex") return OrderKind::DegRevLex;
  throw ParseError("unknown ordering '" + w + "'", loc.line, loc.column);
}

struct RawComponent {
  std::vector<Expr> center;
  std::vector<Expr> gens;
  bool is_module = false;
  Loc loc;
};

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
  Parser p(text);

  std::optional<std::vector<std::string>> xs, ts;
  Loc ring_loc;
  std::optional<OrderKind> kind;
  OrderKind inner_x = OrderKind::Lex, inner_t = OrderKind::Lex;
  Loc order_loc;
  std::optional<Precedence> precedence;
  std::optional<std::vector<Expr>> gens;
  bool is_module = false;
  std::vector<Expr> center;
  std::vector<RawComponent> comps;
  std::vector<std::string> dual;

  auto names = [&]() {
    std::vector<std::string> out{p.ident()};
    while (p.at_punct(",")) {
      p.next();
      out.push_back(p.ident());
    }
    return out;
  };

  while (!p.at_end()) {
    if (p.peek().kind != Tok::Ident) p.fail_here("expected a clause keyword" + p.found());
    const Token kw = p.next();
    const std::string& w = kw.text;
    if (w == "ring") {
      ring_loc = kw.loc;
      xs = names();
      ts = std::vector<std::string>{};
      if (p.at_punct("|")) {
        p.next();
        ts = names();
      }
    } else if (w == "order") {
      order_loc = p.peek().loc;
      const Token o = p.next();
      if (o.kind != Tok::Ident) p.fail("expected an ordering name", o.loc);
      if (o.text == "product") {
        p.expect_punct("(");
        Token a = p.next();
        inner_x = simple_kind(a.text, a.loc);
        p.expect_punct(",");
        Token b = p.next();
        inner_t = simple_kind(b.text, b.loc);
        p.expect_punct(")");
        kind = OrderKind::Product;
      } else {
        kind = simple_kind(o.text, o.loc);
      }
    } else if (w == "module_order") {
      const Token o = p.next();
      if (o.text == "top") {
        precedence = Precedence::TermOverPosition;
      } else if (o.text == "pot") {
        precedence = Precedence::PositionOverTerm;
      } else {
        p.fail("expected 'top' or 'pot'", o.loc);
      }
    } else if (w == "ideal" || w == "module") {
      gens = p.element_list();
      is_module = w == "module";
    } else if (w == "center") {
      center = p.element_list();
    } else if (w == "dual") {
      dual = names();
    } else if (w == "component") {
      RawComponent c;
      c.loc = kw.loc;
      if (p.at_word("center")) {
        p.next();
        c.center.push_back(p.expr());
        while (p.at_punct(",")) {
          p.next();
          c.center.push_back(p.expr());
        }
      }
      if (p.at_word("ideal") || p.at_word("module")) {
        c.is_module = p.next().text == "module";
      } else {
        p.fail_here("expected 'ideal' or 'module'" + p.found());
      }
      c.gens = p.element_list();
      comps.push_back(std::move(c));
    } else {
      p.fail("unknown clause '" + w + "'", kw.loc);
    }
    p.expect_punct(";");
  }

  // Semantic checks.
  if (!xs) throw ParseError("missing ring clause", 1, 1);
  if (!gens && comps.empty()) throw ParseError("missing ideal, module or component clause", 1, 1);
  std::vector<std::string> all = *xs;
  all.insert(all.end(), ts->begin(), ts->end());

  auto rank_of = [](const std::vector<Expr>& es, bool module, Loc loc) {
    if (!module) return 1;
    const std::size_t s = es.front().kind == Expr::Vec ? es.front().kids.size() : 0;
    if (s == 0) throw ParseError("module generators must be vectors", loc.line, loc.column);
    return static_cast<int>(s);
  };
  int rank = 1;
  if (gens) {
    rank = rank_of(*gens, is_module, gens->front().loc);
  } else {
    rank = rank_of(comps.front().gens, comps.front().is_module, comps.front().loc);
  }

  ProblemSpec spec;
  try {
    spec.ring = make_ring(all, static_cast<int>(xs->size()), rank);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), ring_loc.line, ring_loc.column);
  }
  if (kind) {
    if (*kind == OrderKind::Product) {
      if (ts->empty()) {
        throw ParseError("product order requires a parameter block", order_loc.line, order_loc.column);
      }
      spec.order = TermOrder::product(inner_x, inner_t, static_cast<int>(xs->size()));
    } else {
      spec.order = *kind == OrderKind::Lex ? TermOrder::lex()
                   : *kind == OrderKind::DegLex ? TermOrder::deglex()
                                                : TermOrder::degrevlex();
    }
  }
  spec.precedence = precedence;
  spec.is_module = gens ? is_module : comps.front().is_module;

  Resolver r(spec.ring, spec.module_order());
  auto resolve_point = [&](const std::vector<Expr>& es, Loc loc) {
    std::vector<Rational> pt;
    for (const auto& e : es) pt.push_back(r.constant(e));
    if (pt.empty()) pt.assign(static_cast<std::size_t>(spec.ring->nvars()), Rational(0));
    if (static_cast<int>(pt.size()) != spec.ring->nvars()) {
      throw ParseError("center has " + std::to_string(pt.size()) + " coordinates, ring has " +
                           std::to_string(spec.ring->nvars()) + " variables",
                       loc.line, loc.column);
    }
    return pt;
  };

  if (gens) {
    for (const auto& e : *gens) spec.generators.push_back(r.element(e));
  }
  spec.center = resolve_point(center, center.empty() ? Loc{} : center.front().loc);
  for (const auto& c : comps) {
    if (c.is_module != spec.is_module) {
      throw ParseError("components mix ideals and modules", c.loc.line, c.loc.column);
    }
    Component comp;
    for (const auto& e : c.gens) comp.generators.push_back(r.element(e));
    comp.center = resolve_point(c.center, c.loc);
    spec.components.push_back(std::move(comp));
  }
  if (!dual.empty() && static_cast<int>(dual.size()) != spec.ring->nvars()) {
    throw ParseError("dual clause must name one variable per ring variable", 1, 1);
  }
  spec.dual_names = dual.empty() ? spec.ring->names() : dual;
  return spec;
}

Poly parse_polynomial(std::string_view text, RingPtr ring, const ModuleOrder& order) {
  Parser p(text);
  Expr e = p.element();
  if (!p.at_end()) p.fail_here("unexpected trailing input" + p.found());
  return Resolver(std::move(ring), order).element(e);
}

}  // namespace noeth
