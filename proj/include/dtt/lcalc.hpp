// SPDX-License-Identifier: Apache-2.0
//
// Pinto-Uustalu style labelled sequents: formulas, sequents, derivation
// checking, and the two translations between this calculus and the polarized
// one, together with activations and graph isomorphism.

#ifndef DTT_LCALC_HPP
#define DTT_LCALC_HPP

#include <optional>
#include <string>
#include <vector>

#include "dtt/syntax.hpp"

namespace dtt {

// ---------------------------------------------------------------------------
// L formulas: top, bot, A /\ B, A \/ B, A => B, A -< B (co-implication),
// plus atoms (shared with the polarized language).

class LFormula {
 public:
  enum class Kind { Atom, Top, Bot, And, Or, Imp, Sub };

  LFormula() : LFormula(top()) {}

  static LFormula atom(std::string name);
  static LFormula top();
  static LFormula bot();
  static LFormula conj(LFormula a, LFormula b);
  static LFormula disj(LFormula a, LFormula b);
  static LFormula imp(LFormula a, LFormula b);
  static LFormula sub(LFormula a, LFormula b);  // a -< b

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  LFormula lhs() const { return LFormula(node_->lhs); }
  LFormula rhs() const { return LFormula(node_->rhs); }

  bool operator==(const LFormula& o) const;
  bool operator!=(const LFormula& o) const { return !(*this == o); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> lhs, rhs;
  };
  explicit LFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct LEdge {
  NodeId from, to;
  bool operator==(const LEdge& o) const { return from == o.from && to == o.to; }
};

struct LGraph {
  std::vector<LEdge> edges;
  bool operator==(const LGraph& o) const { return edges == o.edges; }
  bool has_edge(const NodeId& a, const NodeId& b) const;
};

struct LEntry {
  NodeId node;
  LFormula formula;
  bool operator==(const LEntry& o) const {
    return node == o.node && formula == o.formula;
  }
};

// Gamma |-[G] Delta.  Both sides are multisets; order is never significant.
struct LSequent {
  std::vector<LEntry> left;
  LGraph graph;
  std::vector<LEntry> right;
};

std::set<NodeId> nodes_of(const LGraph& g);
std::set<NodeId> nodes_of(const LSequent& s);

// ---------------------------------------------------------------------------
// L derivations

enum class LRule {
  Refl, Trans, Hyp, MonL, MonR,
  TrueL, TrueR, FalseL, FalseR,
  AndL, AndR, DisjL, DisjR,
  ImpL, ImpR, SubL, SubR,
};

const char* l_rule_name(LRule r);
std::optional<LRule> l_rule_from_name(const std::string& s);

struct LWitness {
  std::optional<int> left_index;   // principal formula on the left
  std::optional<int> right_index;  // principal formula on the right
  std::optional<NodeId> node;      // refl node / mon partner / impL-subR node
  std::optional<NodeId> node2;     // trans middle node
  std::optional<NodeId> node3;     // trans target node
  std::optional<NodeId> fresh;     // impR / subL fresh node
};

struct LDerivation {
  LRule rule;
  LSequent conclusion;
  LWitness witness;
  std::vector<LDerivation> children;
};

struct LCheckError {
  std::string message;
  std::vector<int> path;
};

// Validates every node against its rule, including graph-membership side
// conditions and freshness.  Contexts and graphs are compared as multisets.
std::optional<LCheckError> check_l(const LDerivation& d);

// Shallow bounded backward search; used only by the containment tests.
std::optional<LDerivation> prove_l(const LSequent& seq, int depth);

// ---------------------------------------------------------------------------
// Translations

// L to DIL (the D translation).
Formula d_formula(const LFormula& a);
Context d_context(const std::vector<LEntry>& entries, Polarity pol);
Graph d_graph(const LGraph& g);

// DIL to L (the L translation); atoms map to themselves in both directions.
LFormula l_formula(const Formula& a);
std::vector<LEntry> l_context_pos(const Context& c);
std::vector<LEntry> l_context_neg(const Context& c);
LGraph l_graph(const Graph& g);
LSequent l_sequent(const Sequent& s);

// One polarized sequent per right-side formula.  Empty right side is an
// error; callers normalize first (see below).
struct ActivationError {
  std::string message;
};
std::vector<Sequent> activations(const LSequent& s);

// Gamma |-[G] .  becomes  Gamma |-[G] n:bot  for a fresh n.
LSequent normalize_empty_right(const LSequent& s);

// Every edge of each graph occurs in the other either identically or with
// endpoints swapped and polarity flipped.
bool graphs_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace dtt

#endif  // DTT_LCALC_HPP
