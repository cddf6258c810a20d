// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "dtt/reduction.hpp"
#include "dtt/text.hpp"
#include "dtt/typing.hpp"
#include "support/gen.hpp"

using namespace dtt;

namespace {

// worked example 1: \z. nu y . (\x. x) * <z, y> : [a ->[+] a @ n]
const char* kAlphaExample =
    "\\z. nu y . (\\x. x) * <z, y> : [a ->[+] a @ n]";
// worked example 2: application of \x.\y.y to triv, triv
const char* kApplyExample =
    "nu z . (\\x. \\y. y) * <triv, <triv, z>> : "
    "[<+> ->[+] (<+> ->[+] <+>) @ n]";

}  // namespace

TEST_CASE("worked reduction: alpha-converting the identity") {
  Term t = parse_term(kAlphaExample);
  auto redexes = step_all(t);
  REQUIRE(redexes.size() == 1);
  CHECK(redexes[0].rule == RuleName::RImp);
  CHECK(position_text(redexes[0].position) == "0");
  Term t2 = redexes[0].result;
  CHECK(alpha_eq(t2, parse_term("\\z. nu y . z * y : [a @ n]")));

  auto redexes2 = step_all(t2);
  REQUIRE(redexes2.size() == 1);
  CHECK(redexes2[0].rule == RuleName::RRet);
  CHECK(alpha_eq(redexes2[0].result, parse_term("\\z. z")));
}

TEST_CASE("worked reduction: function application in three steps") {
  NormalizeResult r = normalize(parse_term(kApplyExample), 100);
  CHECK(!r.budget_exceeded);
  CHECK(r.steps() == 3);
  CHECK(r.trace[0].rule == RuleName::RImp);
  CHECK(r.trace[1].rule == RuleName::RImp);
  CHECK(r.trace[2].rule == RuleName::RRet);
  CHECK(r.term == Term::triv());
}

TEST_CASE("normal forms") {
  CHECK(step_all(Term::triv()).empty());
  NormalizeResult r = normalize(Term::triv(), 0);
  CHECK(!r.budget_exceeded);
  CHECK(r.steps() == 0);
  // nu x . y * z with z != x is normal
  CHECK(is_normal(parse_term("nu x . y * z : [a @ n]")));
  CHECK(!is_normal(parse_term("nu x . y * x : [a @ n]")));
  // the excluded-middle inhabitant is a normal form: its cuts are on variables
  CHECK(is_normal(parse_term(
      "nu x . in1 (nu y . in2 <y, triv> * x : [a /\\[-] (a ->[-] <+>) @ n]) * x "
      ": [a /\\[-] (a ->[-] <+>) @ n]")));
}

TEST_CASE("canonical terms are the non-cut constructors") {
  CHECK(is_canonical(Term::var("x")));
  CHECK(is_canonical(Term::triv()));
  CHECK(is_canonical(parse_term("<triv, triv>")));
  CHECK(!is_canonical(parse_term("nu x . triv * x : [<+> @ n]")));
}

TEST_CASE("RRet requires the bound variable to be absent from the left") {
  Term blocked = parse_term("nu x . (x, triv) * x : [a @ n]");
  for (const auto& r : step_all(blocked)) CHECK(r.rule != RuleName::RRet);
  Term ok = parse_term("nu x . (y, triv) * x : [a @ n]");
  auto redexes = step_all(ok);
  REQUIRE(redexes.size() == 1);
  CHECK(redexes[0].rule == RuleName::RRet);
}

TEST_CASE("all nine contractions fire with their names") {
  auto first_rule = [](const char* s) {
    auto v = step_all(parse_term(s));
    REQUIRE(!v.empty());
    return v[0].rule;
  };
  CHECK(first_rule("nu x . (\\y. y) * <triv, x> : [<+> ->[+] <+> @ n]") ==
        RuleName::RImp);
  CHECK(first_rule("nu x . <triv, x> * (\\y. y) : [<+> ->[-] <+> @ n]") ==
        RuleName::RImpBar);
  CHECK(first_rule("nu x . in1 triv * (x, x) : [<+> /\\[-] <+> @ n]") ==
        RuleName::RAnd1);
  CHECK(first_rule("nu x . in2 triv * (x, x) : [<+> /\\[-] <+> @ n]") ==
        RuleName::RAnd2);
  CHECK(first_rule("nu x . (triv, triv) * in1 x : [<+> /\\[+] <+> @ n]") ==
        RuleName::RAndBar1);
  CHECK(first_rule("nu x . (triv, triv) * in2 x : [<+> /\\[+] <+> @ n]") ==
        RuleName::RAndBar2);
  CHECK(first_rule("nu x . triv * x : [<+> @ n]") == RuleName::RRet);
  CHECK(first_rule(
            "nu x . (nu y . triv * y : [<+> @ n]) * triv : [<+> @ n]") ==
        RuleName::RBetaL);
  CHECK(first_rule(
            "nu x . triv * (nu y . triv * y : [<+> @ n]) : [<+> @ n]") ==
        RuleName::RBetaR);
}

TEST_CASE("cut against cut is not a top-level redex") {
  Term t = parse_term(
      "nu x . (nu y . triv * y : [<+> @ n]) * (nu z . triv * z : [<+> @ n]) "
      ": [<+> @ n]");
  for (const auto& r : step_all(t)) CHECK(!r.position.empty());
}

TEST_CASE("redex results are replayable whole-term rewrites") {
  Term t = parse_term("(nu x . triv * x : [<+> @ n], \\w. nu y . w * y : [b @ n])");
  auto redexes = step_all(t);
  REQUIRE(redexes.size() == 2);
  CHECK(position_text(redexes[0].position) == "0");
  CHECK(position_text(redexes[1].position) == "1.0");
  CHECK(redexes[0].result ==
        parse_term("(triv, \\w. nu y . w * y : [b @ n])"));
  CHECK(redexes[1].result == parse_term("(nu x . triv * x : [<+> @ n], \\w. w)"));
}

TEST_CASE("budget exhaustion is reported with the last term") {
  NormalizeResult r = normalize(parse_term(kApplyExample), 1);
  CHECK(r.budget_exceeded);
  CHECK(r.steps() == 1);
  CHECK(!is_normal(r.term));
}

TEST_CASE("random strategy is deterministic per seed") {
  Term t = parse_term(kApplyExample);
  NormalizeResult a = normalize(t, 100, Strategy::random(7));
  NormalizeResult b = normalize(t, 100, Strategy::random(7));
  REQUIRE(a.steps() == b.steps());
  for (std::size_t i = 0; i < a.steps(); ++i) {
    CHECK(a.trace[i].rule == b.trace[i].rule);
    CHECK(a.trace[i].position == b.trace[i].position);
  }
}

TEST_CASE("confluence probe on the worked example and on normal forms") {
  auto v = confluence_probe(parse_term(kApplyExample), 10, 42, 1000);
  REQUIRE(v.kind == ConfluenceVerdict::Kind::Confluent);
  CHECK(*v.normal_form == Term::triv());

  auto w = confluence_probe(Term::triv(), 5, 1, 10);
  REQUIRE(w.kind == ConfluenceVerdict::Kind::Confluent);
  CHECK(*w.normal_form == Term::triv());
}

TEST_CASE("local confluence on typable terms") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    gen::TypedGen g(seed + 1000);
    TypingGoal goal = g.goal();
    auto redexes = step_all(goal.term);
    for (std::size_t i = 0; i < redexes.size(); ++i)
      for (std::size_t j = i + 1; j < redexes.size(); ++j) {
        NormalizeResult a = normalize(redexes[i].result, 100000);
        NormalizeResult b = normalize(redexes[j].result, 100000);
        REQUIRE(!a.budget_exceeded);
        REQUIRE(!b.budget_exceeded);
        CHECK(alpha_eq(a.term, b.term));
      }
  }
}

TEST_CASE("type preservation on generated goals") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    gen::TypedGen g(seed + 2000);
    TypingGoal goal = g.goal();
    REQUIRE(check(goal).ok());
    for (const auto& redex : step_all(goal.term)) {
      TypingGoal stepped = goal;
      stepped.term = redex.result;
      CHECK_MESSAGE(check(stepped).ok(),
                    "rule ", rule_name(redex.rule), " term ",
                    to_text(goal.term), " -> ", to_text(redex.result));
    }
  }
}

TEST_CASE("untyped self-application diverges into the budget") {
  // u = \y. nu z . y * <y, z>; nu x . u * <u, x> loops forever, so the
  // budget machinery is doing real work on the typed corpus
  const char* u = "\\y. nu z . y * <y, z> : [a @ n]";
  Term omega = parse_term(std::string("nu x . (") + u + ") * <" + u +
                          ", x> : [a ->[+] a @ n]");
  NormalizeResult r = normalize(omega, 500);
  CHECK(r.budget_exceeded);
  CHECK(r.steps() == 500);
}

TEST_CASE("type preservation holds along entire reduction traces") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    gen::TypedGen g(seed * 37 + 5);
    TypingGoal goal = g.goal();
    REQUIRE(check(goal).ok());
    Term cur = goal.term;
    for (int k = 0; k < 100; ++k) {
      auto redexes = step_all(cur);
      if (redexes.empty()) break;
      cur = redexes[0].result;
      TypingGoal stepped = goal;
      stepped.term = cur;
      CHECK(check(stepped).ok());
    }
  }
}
