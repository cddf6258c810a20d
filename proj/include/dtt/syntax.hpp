// SPDX-License-Identifier: Apache-2.0
//
// Abstract syntax shared by every layer of the toolkit: polarized formulas,
// abstract Kripke graphs, contexts, sequents, and the term language with its
// annotated cuts.  All values are immutable and cheap to copy (shared
// subtrees); structural equality is the equality used throughout.

#ifndef DTT_SYNTAX_HPP
#define DTT_SYNTAX_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace dtt {

// ---------------------------------------------------------------------------
// Polarities

enum class Polarity { Pos, Neg };

constexpr Polarity flip(Polarity p) {
  return p == Polarity::Pos ? Polarity::Neg : Polarity::Pos;
}

inline char polarity_char(Polarity p) { return p == Polarity::Pos ? '+' : '-'; }

// ---------------------------------------------------------------------------
// Formulas
//
// One shared formula type serves DIL, DTT and the translations.  Atoms are
// permitted everywhere; the typing rules simply never introduce or destruct
// them, so atomic hypotheses are usable only through Ax and Cut.

class Formula {
 public:
  enum class Kind { Atom, Unit, Imp, And };

  Formula() : Formula(unit(Polarity::Pos)) {}

  static Formula atom(std::string name);
  static Formula unit(Polarity p);
  static Formula imp(Polarity p, Formula lhs, Formula rhs);
  static Formula conj(Polarity p, Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  Polarity pol() const { return node_->pol; }           // Unit/Imp/And only
  const std::string& atom_name() const { return node_->name; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  int depth() const;  // leaves have depth 1
  void collect_atoms(std::set<std::string>& out) const;

 private:
  struct Node {
    Kind kind;
    Polarity pol;
    std::string name;
    std::shared_ptr<const Node> lhs, rhs;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Nodes, graphs, contexts, sequents

struct NodeId {
  std::string name;
  bool operator==(const NodeId& o) const { return name == o.name; }
  bool operator!=(const NodeId& o) const { return name != o.name; }
  bool operator<(const NodeId& o) const { return name < o.name; }
};

struct Edge {
  NodeId from;
  Polarity pol;
  NodeId to;
  bool operator==(const Edge& o) const {
    return from == o.from && pol == o.pol && to == o.to;
  }
};

// Multiset of polarized edges; stored as an ordered list, but no judgment
// ever depends on the order or on duplicates.
struct Graph {
  std::vector<Edge> edges;

  bool operator==(const Graph& o) const { return edges == o.edges; }
  Graph append(const Edge& e) const {
    Graph g = *this;
    g.edges.push_back(e);
    return g;
  }
  Graph concat(const Graph& o) const {
    Graph g = *this;
    g.edges.insert(g.edges.end(), o.edges.begin(), o.edges.end());
    return g;
  }
};

struct ContextEntry {
  std::optional<std::string> var;  // present for DTT contexts
  Polarity pol;
  Formula formula;
  NodeId node;
  bool operator==(const ContextEntry& o) const {
    return var == o.var && pol == o.pol && formula == o.formula && node == o.node;
  }
};

struct Context {
  std::vector<ContextEntry> entries;

  bool operator==(const Context& o) const { return entries == o.entries; }
  Context append(ContextEntry e) const {
    Context c = *this;
    c.entries.push_back(std::move(e));
    return c;
  }
  std::size_t size() const { return entries.size(); }
};

// G ; Gamma |- p A @ n
struct Sequent {
  Graph graph;
  Context ctx;
  Polarity pol;
  Formula formula;
  NodeId node;

  bool operator==(const Sequent& o) const {
    return graph == o.graph && ctx == o.ctx && pol == o.pol &&
           formula == o.formula && node == o.node;
  }
};

// Exact set of node identifiers occurring in a subject.
std::set<NodeId> nodes_of(const Graph& g);
std::set<NodeId> nodes_of(const Context& c);
std::set<NodeId> nodes_of(const Sequent& s);  // graph + ctx + goal node

// Node substitution [target/replaced]: every occurrence of `replaced`
// becomes `target`.
NodeId subst_node(const NodeId& target, const NodeId& replaced, const NodeId& subject);
Graph subst_node(const NodeId& target, const NodeId& replaced, const Graph& subject);
Context subst_node(const NodeId& target, const NodeId& replaced, const Context& subject);

// ---------------------------------------------------------------------------
// Terms

struct CutAnnot {
  Formula formula;
  NodeId node;
  bool operator==(const CutAnnot& o) const {
    return formula == o.formula && node == o.node;
  }
};

class Term {
 public:
  enum class Kind { Var, Triv, Pair, In, Lam, CoPair, Cut };

  Term() : Term(triv()) {}

  static Term var(std::string name);
  static Term triv();
  static Term pair(Term a, Term b);
  static Term in(int d, Term t);  // d in {1,2}
  static Term lam(std::string x, Term body);
  static Term copair(Term a, Term b);
  static Term cut(std::string x, Term left, CutAnnot annot, Term right);

  Kind kind() const { return node_->kind; }
  const std::string& var_name() const { return node_->name; }    // Var
  const std::string& binder() const { return node_->name; }      // Lam/Cut
  int index() const { return node_->index; }                     // In
  Term child(int i) const;                                       // i-th subterm
  int arity() const;                                             // subterm count
  const CutAnnot& annot() const { return *node_->annot; }        // Cut

  // Structural equality (binder names included).
  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

 private:
  struct Node {
    Kind kind;
    std::string name;  // Var name or binder
    int index = 0;
    std::shared_ptr<const Node> a, b;
    std::optional<CutAnnot> annot;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_vars(const Term& t);

// Fresh-name supply: names follow the base%k scheme where k is a counter
// above every %k suffix seen in `used`.
std::string fresh_name(const std::string& base, const std::set<std::string>& used);
NodeId fresh_node(const std::set<NodeId>& used);

// Capture-avoiding substitution of s for free x in t.
Term subst_term(const Term& t, const std::string& x, const Term& s);

// True iff t1 and t2 differ only in bound-variable names.
bool alpha_eq(const Term& t1, const Term& t2);

// Replace node names inside cut annotations (used by tests exercising the
// node-substitution lemma, where the subject term carries annotations).
Term subst_node_in_annots(const NodeId& target, const NodeId& replaced, const Term& t);

}  // namespace dtt

#endif  // DTT_SYNTAX_HPP
