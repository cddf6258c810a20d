// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "dtt/reachability.hpp"
#include "dtt/text.hpp"
#include "support/gen.hpp"

using namespace dtt;

namespace {
Graph g_of(const std::string& s) { return parse_graph(s); }
NodeId n(const std::string& s) { return NodeId{s}; }
}  // namespace

TEST_CASE("reachability rule instances") {
  CHECK(reaches(g_of("n1 <=[+] n2"), n("n1"), Polarity::Pos, n("n2")));  // axiom
  CHECK(reaches(Graph{}, n("n"), Polarity::Pos, n("n")));                // refl
  CHECK(reaches(Graph{}, n("n"), Polarity::Neg, n("n")));
  CHECK(reaches(g_of("n1 <=[+] n2"), n("n2"), Polarity::Neg, n("n1")));  // flip
  Graph g = g_of("n1 <=[-] n2, n3 <=[+] n2");
  CHECK(reaches(g, n("n3"), Polarity::Pos, n("n1")));
  CHECK(!reaches(g, n("n1"), Polarity::Pos, n("n3")));
}

TEST_CASE("closure oracle basics") {
  auto facts = closure_oracle(Graph{}, {n("n")});
  CHECK(facts.count({n("n"), Polarity::Pos, n("n")}));
  CHECK(facts.count({n("n"), Polarity::Neg, n("n")}));
  CHECK(facts.size() == 2);

  auto f2 = closure_oracle(g_of("a <=[+] b"));
  CHECK(f2.count({n("a"), Polarity::Pos, n("b")}));
  CHECK(f2.count({n("b"), Polarity::Neg, n("a")}));
  CHECK(f2.count({n("a"), Polarity::Pos, n("a")}));

  // closure is symmetric under simultaneous flip and endpoint swap
  for (const auto& [a, p, b] : f2) CHECK(f2.count({b, flip(p), a}));
}

TEST_CASE("reaches agrees with the oracle on random small graphs") {
  std::vector<NodeId> nodes;
  for (int i = 1; i <= 5; ++i) nodes.push_back(n("n" + std::to_string(i)));
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    gen::Rng r(seed);
    Graph g = gen::random_graph(r, nodes, 6);
    std::set<NodeId> extra(nodes.begin(), nodes.end());
    auto facts = closure_oracle(g, extra);
    for (const auto& a : nodes)
      for (const auto& b : nodes)
        for (Polarity p : {Polarity::Pos, Polarity::Neg}) {
          bool fast = reaches(g, a, p, b);
          bool oracle = facts.count({a, p, b}) != 0;
          CHECK(fast == oracle);
        }
  }
}

TEST_CASE("flip involution and transitivity of reaches") {
  std::vector<NodeId> nodes{n("a"), n("b"), n("c"), n("d")};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    gen::Rng r(seed);
    Graph g = gen::random_graph(r, nodes, 5);
    for (const auto& a : nodes)
      for (const auto& b : nodes)
        for (Polarity p : {Polarity::Pos, Polarity::Neg}) {
          CHECK(reaches(g, a, p, b) == reaches(g, b, flip(p), a));
          for (const auto& c : nodes)
            if (reaches(g, a, p, b) && reaches(g, b, p, c))
              CHECK(reaches(g, a, p, c));
        }
  }
}

TEST_CASE("graph weakening preserves reachability") {
  std::vector<NodeId> nodes{n("a"), n("b"), n("c")};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    gen::Rng r(seed);
    Graph g = gen::random_graph(r, nodes, 4);
    Edge extra{nodes[r.below(3)], r.polarity(), nodes[r.below(3)]};
    for (const auto& a : nodes)
      for (const auto& b : nodes)
        for (Polarity p : {Polarity::Pos, Polarity::Neg})
          if (reaches(g, a, p, b)) CHECK(reaches(g.append(extra), a, p, b));
  }
}

TEST_CASE("raise clause by clause") {
  NodeId n1 = n("n1"), n2 = n("n2"), m = n("m"), m2 = n("m2");
  CHECK(raise(n1, n2, Graph{}) == Graph{});
  for (Polarity p : {Polarity::Pos, Polarity::Neg}) {
    CHECK(raise(n1, n2, Graph{{Edge{n1, p, m}}}) == Graph{{Edge{n2, p, m}}});
    CHECK(raise(n1, n2, Graph{{Edge{m, p, n1}}}) == Graph{{Edge{m, p, n2}}});
    CHECK(raise(n1, n2, Graph{{Edge{m, p, m2}}}) == Graph{{Edge{m, p, m2}}});
    // self loop: the source clause applies first and the result is not
    // reprocessed
    CHECK(raise(n1, n2, Graph{{Edge{n1, p, n1}}}) == Graph{{Edge{n2, p, n1}}});
  }
}

TEST_CASE("raising the lower bound") {
  // if G |- n1 <=*[p] n2 and G,G1 |- m <=*[p'] m', then
  // G, raise(n1,n2,G1) |- m <=*[p'] m'.  The raised node must sit at the
  // p-lower end of every G1 edge it touches; edges where it sits at the
  // upper end are outside the lemma (raise keeps their other endpoint).
  std::vector<NodeId> nodes{n("a"), n("b"), n("c"), n("d")};
  auto upper_end = [](const Edge& e, Polarity p) {
    // directed form: + edges run from -> to, - edges run to -> from
    const NodeId& head = e.pol == Polarity::Pos ? e.to : e.from;
    const NodeId& tail = e.pol == Polarity::Pos ? e.from : e.to;
    return p == Polarity::Pos ? head : tail;
  };
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 800; ++seed) {
    gen::Rng r(seed);
    Graph g = gen::random_graph(r, nodes, 3);
    NodeId n1 = nodes[r.below(4)], n2 = nodes[r.below(4)];
    Polarity p = r.polarity();
    if (!reaches(g, n1, p, n2)) continue;
    Graph g1;
    for (const Edge& e : gen::random_graph(r, nodes, 3).edges)
      if (!(upper_end(e, p) == n1)) g1.edges.push_back(e);
    Graph combined = g.concat(g1);
    Graph raised = g.concat(raise(n1, n2, g1));
    for (const auto& a : nodes)
      for (const auto& b : nodes)
        for (Polarity q : {Polarity::Pos, Polarity::Neg})
          if (reaches(combined, a, q, b)) {
            CHECK(reaches(raised, a, q, b));
            ++checked;
          }
  }
  CHECK(checked > 100);
}
