// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "dtt/text.hpp"
#include "support/gen.hpp"

using namespace dtt;

TEST_CASE("polarity flip is an involution") {
  CHECK(flip(Polarity::Pos) == Polarity::Neg);
  CHECK(flip(Polarity::Neg) == Polarity::Pos);
  CHECK(flip(flip(Polarity::Pos)) == Polarity::Pos);
  CHECK(flip(flip(Polarity::Neg)) == Polarity::Neg);
}

TEST_CASE("grammar literals") {
  CHECK(parse_formula("<+>") == Formula::unit(Polarity::Pos));
  CHECK(parse_formula("a ->[-] <+>") ==
        Formula::imp(Polarity::Neg, Formula::atom("a"),
                     Formula::unit(Polarity::Pos)));
  CHECK(parse_term("\\x. x") == Term::lam("x", Term::var("x")));
  CHECK(parse_term("triv") == Term::triv());
  CHECK(parse_term("in1 (in2 triv)") == Term::in(1, Term::in(2, Term::triv())));
}

TEST_CASE("precedence: conjunction binds tighter than implication") {
  Formula f = parse_formula("a /\\[+] b ->[+] c");
  CHECK(f.kind() == Formula::Kind::Imp);
  CHECK(f.lhs() == parse_formula("a /\\[+] b"));
  // implication is right associative
  Formula g = parse_formula("a ->[+] b ->[+] c");
  CHECK(g.rhs().kind() == Formula::Kind::Imp);
}

TEST_CASE("cut surface syntax") {
  Term t = parse_term("nu x . triv * x : [a @ n]");
  REQUIRE(t.kind() == Term::Kind::Cut);
  CHECK(t.binder() == "x");
  CHECK(t.annot().formula == Formula::atom("a"));
  CHECK(t.annot().node.name == "n");
  // nested cuts on the left parse unambiguously
  Term u = parse_term("nu x . nu y . y * triv : [b @ m] * x : [a @ n]");
  REQUIRE(u.kind() == Term::Kind::Cut);
  CHECK(u.child(0).kind() == Term::Kind::Cut);
  CHECK(u.annot().formula == Formula::atom("a"));
}

TEST_CASE("sequent parsing, empty sides") {
  Sequent s = parse_sequent(". ; . |- + a @ n");
  CHECK(s.graph.edges.empty());
  CHECK(s.ctx.entries.empty());
  CHECK(s.pol == Polarity::Pos);
  Sequent s2 = parse_sequent("n1 <=[+] n2 ; x : + a @ n1, - b @ n2 |- - b @ n2");
  CHECK(s2.graph.edges.size() == 1);
  CHECK(s2.ctx.entries.size() == 2);
  CHECK(s2.ctx.entries[0].var == std::string("x"));
  CHECK(!s2.ctx.entries[1].var);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula("a ->[+]"), ParseError);
  try {
    parse_formula("a ->[+]");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col >= 7);
    CHECK(!e.expected.empty());
  }
}

TEST_CASE("print-then-parse is the identity on random values") {
  std::vector<std::string> atoms = {"a", "b"};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    gen::Rng r(seed);
    Formula f = gen::random_formula(r, 1 + r.below(8), atoms);
    CHECK(parse_formula(to_text(f)) == f);
    Term t = gen::random_term(r, 1 + r.below(8), {"x", "y"}, atoms);
    CHECK(parse_term(to_text(t)) == t);
    std::vector<NodeId> nodes{NodeId{"n1"}, NodeId{"n2"}, NodeId{"n3"}};
    Graph g = gen::random_graph(r, nodes, 4);
    CHECK(parse_graph(to_text(g)) == g);
    Sequent s{g, Context{}, r.polarity(), f, nodes[r.below(3)]};
    int entries = r.below(3);
    for (int i = 0; i < entries; ++i)
      s.ctx.entries.push_back(ContextEntry{
          r.chance(50) ? std::optional<std::string>("v" + std::to_string(i))
                       : std::nullopt,
          r.polarity(), gen::random_formula(r, 3, atoms), nodes[r.below(3)]});
    CHECK(parse_sequent(to_text(s)) == s);
  }
}

TEST_CASE("substitution basics") {
  Term x = Term::var("x");
  CHECK(subst_term(x, "x", Term::triv()) == Term::triv());
  CHECK(subst_term(Term::lam("x", x), "x", Term::triv()) == Term::lam("x", x));
  // capture avoidance: [y/x](\y. x) renames the binder
  Term t = subst_term(Term::lam("y", Term::var("x")), "x", Term::var("y"));
  REQUIRE(t.kind() == Term::Kind::Lam);
  CHECK(t.binder() != "y");
  CHECK(t.child(0) == Term::var("y"));
}

TEST_CASE("subst_term with the variable itself is alpha-identity") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    gen::Rng r(seed);
    Term t = gen::random_term(r, 1 + r.below(7), {"x", "y"}, {"a"});
    CHECK(alpha_eq(subst_term(t, "x", Term::var("x")), t));
  }
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(Term::lam("x", Term::var("x")), Term::lam("z", Term::var("z"))));
  CHECK(!alpha_eq(Term::lam("x", Term::var("x")), Term::lam("x", Term::triv())));
  CutAnnot ann{Formula::atom("a"), NodeId{"n"}};
  CHECK(alpha_eq(Term::cut("x", Term::var("x"), ann, Term::var("x")),
                 Term::cut("y", Term::var("y"), ann, Term::var("y"))));
  // bound/free mix-ups are rejected
  CHECK(!alpha_eq(Term::lam("x", Term::var("y")), Term::lam("y", Term::var("y"))));
}

TEST_CASE("node substitution") {
  NodeId n1{"n1"}, n2{"n2"}, n3{"n3"}, m{"m"}, k{"k"};
  CHECK(subst_node(n1, n2, n2) == n1);
  CHECK(subst_node(n1, n2, n3) == n3);
  Graph g{{Edge{NodeId{"n"}, Polarity::Pos, k}}};
  Graph g2 = subst_node(m, NodeId{"n"}, g);
  CHECK(g2.edges[0].from == m);
  CHECK(g2.edges[0].to == k);
  // idempotent once the replaced node is gone
  CHECK(subst_node(m, NodeId{"n"}, g2) == g2);
}

TEST_CASE("nodes_of distributes over graph append") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    gen::Rng r(seed);
    std::vector<NodeId> nodes{NodeId{"n1"}, NodeId{"n2"}, NodeId{"n3"},
                              NodeId{"n4"}};
    Graph g1 = gen::random_graph(r, nodes, 3);
    Graph g2 = gen::random_graph(r, nodes, 3);
    auto lhs = nodes_of(g1.concat(g2));
    auto expected = nodes_of(g1);
    for (const auto& n : nodes_of(g2)) expected.insert(n);
    CHECK(lhs == expected);
  }
  CHECK(nodes_of(Graph{}).empty());
  Context c{{ContextEntry{std::string("x"), Polarity::Pos, Formula::atom("a"),
                          NodeId{"n"}}}};
  CHECK(nodes_of(c) == std::set<NodeId>{NodeId{"n"}});
}

TEST_CASE("fresh names avoid the used set") {
  std::set<std::string> used{"x", "x%0", "x%3"};
  std::string f = fresh_name("x", used);
  CHECK(!used.count(f));
  CHECK(f == "x%4");
}

TEST_CASE("L formula and sequent round trips") {
  for (const char* text : {
           "top", "bot", "a /\\ b", "a \\/ b", "a => b", "a -< b",
           "(a => b) -< (top /\\ bot)",
       }) {
    LFormula f = parse_lformula(text);
    CHECK(parse_lformula(to_text(f)) == f);
  }
  LSequent s = parse_lsequent("n : a |-[(n, m)] m : a, k : top");
  CHECK(s.left.size() == 1);
  CHECK(s.graph.edges.size() == 1);
  CHECK(s.right.size() == 2);
  LSequent s2 = parse_lsequent(to_text(s));
  CHECK(to_text(s2) == to_text(s));
  LSequent e = parse_lsequent(". |-[.] .");
  CHECK(e.left.empty());
  CHECK(e.right.empty());
}

TEST_CASE("empty sequent sides may be left blank") {
  Sequent s = parse_sequent("; |- + a @ n");
  CHECK(s.graph.edges.empty());
  CHECK(s.ctx.entries.empty());
  CHECK(to_text(s) == ". ; . |- + a @ n");
}

TEST_CASE("parser rejects garbage without crashing") {
  gen::Rng r(99);
  const std::string alphabet = "abxn +-<>()[]./\\|@:;,*=1%'";
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    int len = r.below(24);
    for (int k = 0; k < len; ++k) s += alphabet[r.below(int(alphabet.size()))];
    for (int which = 0; which < 4; ++which) {
      try {
        switch (which) {
          case 0: (void)parse_formula(s); break;
          case 1: (void)parse_term(s); break;
          case 2: (void)parse_sequent(s); break;
          default: (void)parse_lsequent(s); break;
        }
      } catch (const ParseError&) {
        // expected for most inputs
      }
    }
  }
  CHECK(true);
}
