// SPDX-License-Identifier: Apache-2.0

#include "dtt/text.hpp"

#include <cctype>
#include <sstream>

namespace dtt {

// ---------------------------------------------------------------------------
// Printing

std::string to_text(Polarity p) { return p == Polarity::Pos ? "+" : "-"; }

namespace {

// Precedence levels: atom > conj > imp.
void print_formula(const Formula& f, int level, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.atom_name();
      return;
    case Formula::Kind::Unit:
      out += f.pol() == Polarity::Pos ? "<+>" : "<->";
      return;
    case Formula::Kind::And: {
      bool paren = level > 1;
      if (paren) out += '(';
      print_formula(f.lhs(), 2, out);
      out += " /\\[";
      out += polarity_char(f.pol());
      out += "] ";
      print_formula(f.rhs(), 1, out);  // right-assoc
      if (paren) out += ')';
      return;
    }
    case Formula::Kind::Imp: {
      bool paren = level > 0;
      if (paren) out += '(';
      print_formula(f.lhs(), 1, out);
      out += " ->[";
      out += polarity_char(f.pol());
      out += "] ";
      print_formula(f.rhs(), 0, out);  // right-assoc
      if (paren) out += ')';
      return;
    }
  }
}

void print_term(const Term& t, bool atom_pos, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out += t.var_name();
      return;
    case Term::Kind::Triv:
      out += "triv";
      return;
    case Term::Kind::Pair:
      out += '(';
      print_term(t.child(0), false, out);
      out += ", ";
      print_term(t.child(1), false, out);
      out += ')';
      return;
    case Term::Kind::CoPair:
      out += '<';
      print_term(t.child(0), false, out);
      out += ", ";
      print_term(t.child(1), false, out);
      out += '>';
      return;
    case Term::Kind::In: {
      bool paren = atom_pos;
      if (paren) out += '(';
      out += t.index() == 1 ? "in1 " : "in2 ";
      print_term(t.child(0), true, out);
      if (paren) out += ')';
      return;
    }
    case Term::Kind::Lam: {
      bool paren = atom_pos;
      if (paren) out += '(';
      out += '\\';
      out += t.binder();
      out += ". ";
      print_term(t.child(0), false, out);
      if (paren) out += ')';
      return;
    }
    case Term::Kind::Cut: {
      bool paren = atom_pos;
      if (paren) out += '(';
      out += "nu ";
      out += t.binder();
      out += " . ";
      print_term(t.child(0), true, out);
      out += " * ";
      print_term(t.child(1), true, out);
      out += " : [";
      print_formula(t.annot().formula, 0, out);
      out += " @ ";
      out += t.annot().node.name;
      out += ']';
      if (paren) out += ')';
      return;
    }
  }
}

void print_lformula(const LFormula& f, int level, std::string& out) {
  switch (f.kind()) {
    case LFormula::Kind::Atom:
      out += f.atom_name();
      return;
    case LFormula::Kind::Top:
      out += "top";
      return;
    case LFormula::Kind::Bot:
      out += "bot";
      return;
    case LFormula::Kind::And:
    case LFormula::Kind::Or: {
      bool paren = level > 1;
      if (paren) out += '(';
      print_lformula(f.lhs(), 2, out);
      out += f.kind() == LFormula::Kind::And ? " /\\ " : " \\/ ";
      print_lformula(f.rhs(), 1, out);
      if (paren) out += ')';
      return;
    }
    case LFormula::Kind::Imp:
    case LFormula::Kind::Sub: {
      bool paren = level > 0;
      if (paren) out += '(';
      print_lformula(f.lhs(), 1, out);
      out += f.kind() == LFormula::Kind::Imp ? " => " : " -< ";
      print_lformula(f.rhs(), 0, out);
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_text(const Formula& f) {
  std::string out;
  print_formula(f, 0, out);
  return out;
}

std::string to_text(const Term& t) {
  std::string out;
  print_term(t, false, out);
  return out;
}

std::string to_text(const Edge& e) {
  std::string out = e.from.name;
  out += " <=[";
  out += polarity_char(e.pol);
  out += "] ";
  out += e.to.name;
  return out;
}

std::string to_text(const Graph& g) {
  if (g.edges.empty()) return ".";
  std::string out;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i) out += ", ";
    out += to_text(g.edges[i]);
  }
  return out;
}

std::string to_text(const Context& c) {
  if (c.entries.empty()) return ".";
  std::string out;
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const auto& e = c.entries[i];
    if (i) out += ", ";
    if (e.var) {
      out += *e.var;
      out += " : ";
    }
    out += polarity_char(e.pol);
    out += ' ';
    print_formula(e.formula, 2, out);
    out += " @ ";
    out += e.node.name;
  }
  return out;
}

std::string to_text(const Sequent& s) {
  std::string out = to_text(s.graph);
  out += " ; ";
  out += to_text(s.ctx);
  out += " |- ";
  out += polarity_char(s.pol);
  out += ' ';
  print_formula(s.formula, 2, out);
  out += " @ ";
  out += s.node.name;
  return out;
}

std::string to_text(const LFormula& f) {
  std::string out;
  print_lformula(f, 0, out);
  return out;
}

std::string to_text(const LSequent& s) {
  std::string out;
  auto side = [&](const std::vector<LEntry>& es) {
    if (es.empty()) {
      out += '.';
      return;
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (i) out += ", ";
      out += es[i].node.name;
      out += " : ";
      print_lformula(es[i].formula, 2, out);
    }
  };
  side(s.left);
  out += " |-[";
  if (s.graph.edges.empty()) {
    out += '.';
  } else {
    for (std::size_t i = 0; i < s.graph.edges.size(); ++i) {
      if (i) out += ", ";
      out += '(';
      out += s.graph.edges[i].from.name;
      out += ", ";
      out += s.graph.edges[i].to.name;
      out += ')';
    }
  }
  out += "] ";
  side(s.right);
  return out;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  Ident, UnitPos, UnitNeg, Arrow, Wedge, Le, Turnstile, Or, DArrow, SubOp,
  LParen, RParen, LBrack, RBrack, Lt, Gt, Comma, Colon, Semi, At, Dot, Star,
  Plus, Minus, Lambda, End,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::UnitPos: return "<+>";
    case Tok::UnitNeg: return "<->";
    case Tok::Arrow: return "->";
    case Tok::Wedge: return "/\\";
    case Tok::Le: return "<=";
    case Tok::Turnstile: return "|-";
    case Tok::Or: return "\\/";
    case Tok::DArrow: return "=>";
    case Tok::SubOp: return "-<";
    case Tok::LParen: return "(";
    case Tok::RParen: return ")";
    case Tok::LBrack: return "[";
    case Tok::RBrack: return "]";
    case Tok::Lt: return "<";
    case Tok::Gt: return ">";
    case Tok::Comma: return ",";
    case Tok::Colon: return ":";
    case Tok::Semi: return ";";
    case Tok::At: return "@";
    case Tok::Dot: return ".";
    case Tok::Star: return "*";
    case Tok::Plus: return "+";
    case Tok::Minus: return "-";
    case Tok::Lambda: return "\\";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_start(char c) { return std::islower((unsigned char)c); }
bool ident_cont(char c) {
  return std::isalnum((unsigned char)c) || c == '_' || c == '%' || c == '\'';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string s) {
    out.push_back({k, std::move(s), line, col});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace((unsigned char)c)) {
      ++col;
      ++i;
      continue;
    }
    auto rest = [&](const char* s) {
      return text.compare(i, std::char_traits<char>::length(s), s) == 0;
    };
    if (rest("<+>")) { push(Tok::UnitPos, "<+>"); i += 3; col += 3; continue; }
    if (rest("<->")) { push(Tok::UnitNeg, "<->"); i += 3; col += 3; continue; }
    if (rest("|-")) { push(Tok::Turnstile, "|-"); i += 2; col += 2; continue; }
    if (rest("->")) { push(Tok::Arrow, "->"); i += 2; col += 2; continue; }
    if (rest("-<")) { push(Tok::SubOp, "-<"); i += 2; col += 2; continue; }
    if (rest("/\\")) { push(Tok::Wedge, "/\\"); i += 2; col += 2; continue; }
    if (rest("\\/")) { push(Tok::Or, "\\/"); i += 2; col += 2; continue; }
    if (rest("<=")) { push(Tok::Le, "<="); i += 2; col += 2; continue; }
    if (rest("=>")) { push(Tok::DArrow, "=>"); i += 2; col += 2; continue; }
    switch (c) {
      case '(': push(Tok::LParen, "("); break;
      case ')': push(Tok::RParen, ")"); break;
      case '[': push(Tok::LBrack, "["); break;
      case ']': push(Tok::RBrack, "]"); break;
      case '<': push(Tok::Lt, "<"); break;
      case '>': push(Tok::Gt, ">"); break;
      case ',': push(Tok::Comma, ","); break;
      case ':': push(Tok::Colon, ":"); break;
      case ';': push(Tok::Semi, ";"); break;
      case '@': push(Tok::At, "@"); break;
      case '.': push(Tok::Dot, "."); break;
      case '*': push(Tok::Star, "*"); break;
      case '+': push(Tok::Plus, "+"); break;
      case '-': push(Tok::Minus, "-"); break;
      case '\\': push(Tok::Lambda, "\\"); break;
      default: {
        if (ident_start(c)) {
          std::size_t j = i + 1;
          while (j < text.size() && ident_cont(text[j])) ++j;
          push(Tok::Ident, text.substr(i, j - i));
          col += int(j - i);
          i = j;
          continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
    }
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }

  Token eat(Tok k) {
    if (!at(k)) fail({tok_name(k)});
    return toks_[pos_++];
  }

  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "unexpected ";
    msg += t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    if (!expected.empty()) {
      msg += "; expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
      }
    }
    throw ParseError(msg, t.line, t.col, std::move(expected));
  }

  void expect_end() {
    if (!at(Tok::End)) fail({"end of input"});
  }

  Polarity polarity() {
    if (accept(Tok::Plus)) return Polarity::Pos;
    if (accept(Tok::Minus)) return Polarity::Neg;
    fail({"+", "-"});
  }

  Polarity bracketed_polarity() {
    eat(Tok::LBrack);
    Polarity p = polarity();
    eat(Tok::RBrack);
    return p;
  }

  NodeId node() { return NodeId{eat(Tok::Ident).text}; }

  // formula := conj ( '->[' p ']' formula )?
  Formula formula() {
    Formula lhs = conj();
    if (accept(Tok::Arrow)) {
      Polarity p = bracketed_polarity();
      return Formula::imp(p, lhs, formula());
    }
    return lhs;
  }

  Formula conj() {
    Formula lhs = formula_atom();
    if (accept(Tok::Wedge)) {
      Polarity p = bracketed_polarity();
      return Formula::conj(p, lhs, conj());
    }
    return lhs;
  }

  Formula formula_atom() {
    if (accept(Tok::UnitPos)) return Formula::unit(Polarity::Pos);
    if (accept(Tok::UnitNeg)) return Formula::unit(Polarity::Neg);
    if (at(Tok::Ident)) return Formula::atom(eat(Tok::Ident).text);
    if (accept(Tok::LParen)) {
      Formula f = formula();
      eat(Tok::RParen);
      return f;
    }
    fail({"atom", "<+>", "<->", "("});
  }

  // term := '\' x '.' term | 'nu' x '.' term '*' term ':' '[' F '@' n ']'
  //       | 'in1' aterm | 'in2' aterm | aterm
  Term term() {
    if (accept(Tok::Lambda)) {
      std::string x = eat(Tok::Ident).text;
      eat(Tok::Dot);
      return Term::lam(x, term());
    }
    if (at(Tok::Ident) && peek().text == "nu") {
      eat(Tok::Ident);
      std::string x = eat(Tok::Ident).text;
      eat(Tok::Dot);
      Term l = term();
      eat(Tok::Star);
      Term r = term();
      eat(Tok::Colon);
      eat(Tok::LBrack);
      Formula f = formula();
      eat(Tok::At);
      NodeId n = node();
      eat(Tok::RBrack);
      return Term::cut(x, l, CutAnnot{f, n}, r);
    }
    if (at(Tok::Ident) && (peek().text == "in1" || peek().text == "in2")) {
      int d = peek().text == "in1" ? 1 : 2;
      eat(Tok::Ident);
      return Term::in(d, term_atom());
    }
    return term_atom();
  }

  Term term_atom() {
    if (at(Tok::Ident)) {
      const std::string& s = peek().text;
      if (s == "triv") {
        eat(Tok::Ident);
        return Term::triv();
      }
      if (s == "nu" || s == "in1" || s == "in2") return term();
      return Term::var(eat(Tok::Ident).text);
    }
    if (at(Tok::Lambda)) return term();
    if (accept(Tok::LParen)) {
      Term a = term();
      if (accept(Tok::Comma)) {
        Term b = term();
        eat(Tok::RParen);
        return Term::pair(a, b);
      }
      eat(Tok::RParen);
      return a;
    }
    if (accept(Tok::Lt)) {
      Term a = term();
      eat(Tok::Comma);
      Term b = term();
      eat(Tok::Gt);
      return Term::copair(a, b);
    }
    fail({"term"});
  }

  Edge edge() {
    NodeId from = node();
    eat(Tok::Le);
    Polarity p = bracketed_polarity();
    NodeId to = node();
    return Edge{from, p, to};
  }

  Graph graph() {
    Graph g;
    if (accept(Tok::Dot)) return g;
    if (at(Tok::Semi)) return g;  // empty side may be left blank in sequents
    g.edges.push_back(edge());
    while (accept(Tok::Comma)) g.edges.push_back(edge());
    return g;
  }

  ContextEntry context_entry() {
    std::optional<std::string> var;
    if (at(Tok::Ident)) {
      // lookahead for `x :` (a variable-labelled entry)
      std::size_t save = pos_;
      std::string name = eat(Tok::Ident).text;
      if (accept(Tok::Colon)) {
        var = name;
      } else {
        pos_ = save;
      }
    }
    Polarity p = polarity();
    Formula f = formula();
    eat(Tok::At);
    NodeId n = node();
    return ContextEntry{var, p, f, n};
  }

  Context context() {
    Context c;
    if (accept(Tok::Dot)) return c;
    if (at(Tok::Turnstile)) return c;
    c.entries.push_back(context_entry());
    while (accept(Tok::Comma)) c.entries.push_back(context_entry());
    return c;
  }

  Sequent sequent() {
    Graph g = graph();
    eat(Tok::Semi);
    Context c = context();
    eat(Tok::Turnstile);
    Polarity p = polarity();
    Formula f = formula();
    eat(Tok::At);
    NodeId n = node();
    return Sequent{std::move(g), std::move(c), p, std::move(f), n};
  }

  // lformula := lconj ( ('=>' | '-<') lformula )?
  LFormula lformula() {
    LFormula lhs = lconj();
    if (accept(Tok::DArrow)) return LFormula::imp(lhs, lformula());
    if (accept(Tok::SubOp)) return LFormula::sub(lhs, lformula());
    return lhs;
  }

  LFormula lconj() {
    LFormula lhs = lformula_atom();
    if (accept(Tok::Wedge)) return LFormula::conj(lhs, lconj());
    if (accept(Tok::Or)) return LFormula::disj(lhs, lconj());
    return lhs;
  }

  LFormula lformula_atom() {
    if (at(Tok::Ident)) {
      const std::string& s = peek().text;
      if (s == "top") {
        eat(Tok::Ident);
        return LFormula::top();
      }
      if (s == "bot") {
        eat(Tok::Ident);
        return LFormula::bot();
      }
      return LFormula::atom(eat(Tok::Ident).text);
    }
    if (accept(Tok::LParen)) {
      LFormula f = lformula();
      eat(Tok::RParen);
      return f;
    }
    fail({"atom", "top", "bot", "("});
  }

  std::vector<LEntry> lcontext() {
    std::vector<LEntry> out;
    if (accept(Tok::Dot)) return out;
    do {
      NodeId n = node();
      eat(Tok::Colon);
      out.push_back(LEntry{n, lformula()});
    } while (accept(Tok::Comma));
    return out;
  }

  LSequent lsequent() {
    LSequent s;
    s.left = lcontext();
    eat(Tok::Turnstile);
    eat(Tok::LBrack);
    if (!accept(Tok::Dot)) {
      if (!at(Tok::RBrack)) {
        do {
          eat(Tok::LParen);
          NodeId a = node();
          eat(Tok::Comma);
          NodeId b = node();
          eat(Tok::RParen);
          s.graph.edges.push_back(LEdge{a, b});
        } while (accept(Tok::Comma));
      }
    }
    eat(Tok::RBrack);
    s.right = lcontext();
    return s;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Polarity parse_polarity(const std::string& text) {
  Parser p(text);
  Polarity r = p.polarity();
  p.expect_end();
  return r;
}

Formula parse_formula(const std::string& text) {
  Parser p(text);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Term parse_term(const std::string& text) {
  Parser p(text);
  Term t = p.term();
  p.expect_end();
  return t;
}

Graph parse_graph(const std::string& text) {
  Parser p(text);
  Graph g = p.graph();
  p.expect_end();
  return g;
}

Context parse_context(const std::string& text) {
  Parser p(text);
  Context c = p.context();
  p.expect_end();
  return c;
}

Sequent parse_sequent(const std::string& text) {
  Parser p(text);
  Sequent s = p.sequent();
  p.expect_end();
  return s;
}

LFormula parse_lformula(const std::string& text) {
  Parser p(text);
  LFormula f = p.lformula();
  p.expect_end();
  return f;
}

LSequent parse_lsequent(const std::string& text) {
  Parser p(text);
  LSequent s = p.lsequent();
  p.expect_end();
  return s;
}

Goal parse_goal(const std::string& text) {
  Parser p(text);
  Sequent s = p.sequent();
  p.eat(Tok::Turnstile);
  Term t = p.term();
  p.expect_end();
  return Goal{std::move(s), std::move(t)};
}

}  // namespace dtt
