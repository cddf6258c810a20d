// SPDX-License-Identifier: Apache-2.0

#include "dtt/lcalc.hpp"

#include <algorithm>
#include <stdexcept>

#include "dtt/text.hpp"

namespace dtt {

// ---------------------------------------------------------------------------
// LFormula

LFormula LFormula::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  return LFormula(std::move(n));
}
LFormula LFormula::top() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Top;
  return LFormula(std::move(n));
}
LFormula LFormula::bot() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bot;
  return LFormula(std::move(n));
}

LFormula LFormula::conj(LFormula a, LFormula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return LFormula(std::move(n));
}
LFormula LFormula::disj(LFormula a, LFormula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return LFormula(std::move(n));
}
LFormula LFormula::imp(LFormula a, LFormula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Imp;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return LFormula(std::move(n));
}
LFormula LFormula::sub(LFormula a, LFormula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sub;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return LFormula(std::move(n));
}

bool LFormula::operator==(const LFormula& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Atom:
      return node_->name == o.node_->name;
    case Kind::Top:
    case Kind::Bot:
      return true;
    default:
      return lhs() == o.lhs() && rhs() == o.rhs();
  }
}

bool LGraph::has_edge(const NodeId& a, const NodeId& b) const {
  for (const auto& e : edges)
    if (e.from == a && e.to == b) return true;
  return false;
}

std::set<NodeId> nodes_of(const LGraph& g) {
  std::set<NodeId> out;
  for (const auto& e : g.edges) {
    out.insert(e.from);
    out.insert(e.to);
  }
  return out;
}

std::set<NodeId> nodes_of(const LSequent& s) {
  std::set<NodeId> out = nodes_of(s.graph);
  for (const auto& e : s.left) out.insert(e.node);
  for (const auto& e : s.right) out.insert(e.node);
  return out;
}

// ---------------------------------------------------------------------------
// Rule names

const char* l_rule_name(LRule r) {
  switch (r) {
    case LRule::Refl: return "refl";
    case LRule::Trans: return "trans";
    case LRule::Hyp: return "hyp";
    case LRule::MonL: return "monL";
    case LRule::MonR: return "monR";
    case LRule::TrueL: return "trueL";
    case LRule::TrueR: return "trueR";
    case LRule::FalseL: return "falseL";
    case LRule::FalseR: return "falseR";
    case LRule::AndL: return "andL";
    case LRule::AndR: return "andR";
    case LRule::DisjL: return "disjL";
    case LRule::DisjR: return "disjR";
    case LRule::ImpL: return "impL";
    case LRule::ImpR: return "impR";
    case LRule::SubL: return "subL";
    case LRule::SubR: return "subR";
  }
  return "?";
}

std::optional<LRule> l_rule_from_name(const std::string& s) {
  static const std::pair<const char*, LRule> table[] = {
      {"refl", LRule::Refl},   {"trans", LRule::Trans}, {"hyp", LRule::Hyp},
      {"monL", LRule::MonL},   {"monR", LRule::MonR},   {"trueL", LRule::TrueL},
      {"trueR", LRule::TrueR}, {"falseL", LRule::FalseL},
      {"falseR", LRule::FalseR}, {"andL", LRule::AndL},  {"andR", LRule::AndR},
      {"disjL", LRule::DisjL}, {"disjR", LRule::DisjR}, {"impL", LRule::ImpL},
      {"impR", LRule::ImpR},   {"subL", LRule::SubL},   {"subR", LRule::SubR},
  };
  for (auto& [name, rule] : table)
    if (s == name) return rule;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// check_l

namespace {

std::string lentry_text(const LEntry& e) {
  return e.node.name + ":" + to_text(e.formula);
}

// Multiset canonical form of a context side.
std::vector<std::string> canon_side(const std::vector<LEntry>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(lentry_text(e));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> canon_graph(const LGraph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges) out.push_back(e.from.name + ">" + e.to.name);
  std::sort(out.begin(), out.end());
  return out;
}

bool lsequents_equal(const LSequent& a, const LSequent& b) {
  return canon_side(a.left) == canon_side(b.left) &&
         canon_side(a.right) == canon_side(b.right) &&
         canon_graph(a.graph) == canon_graph(b.graph);
}

std::vector<LEntry> without(const std::vector<LEntry>& es, int index) {
  std::vector<LEntry> out = es;
  out.erase(out.begin() + index);
  return out;
}

std::vector<LEntry> with(std::vector<LEntry> es, LEntry e) {
  es.push_back(std::move(e));
  return es;
}

struct LChecker {
  std::vector<int> path;

  std::optional<LCheckError> fail(std::string msg) {
    return LCheckError{std::move(msg), path};
  }

  std::optional<LCheckError> children(const LDerivation& d,
                                      const std::vector<LSequent>& premises) {
    if (d.children.size() != premises.size())
      return fail(std::string(l_rule_name(d.rule)) + " expects " +
                  std::to_string(premises.size()) + " premises");
    for (std::size_t i = 0; i < premises.size(); ++i) {
      if (!lsequents_equal(d.children[i].conclusion, premises[i])) {
        path.push_back(int(i));
        auto e = fail("premise mismatch: expected \"" + to_text(premises[i]) +
                      "\", found \"" + to_text(d.children[i].conclusion) + "\"");
        path.pop_back();
        return e;
      }
      path.push_back(int(i));
      if (auto e = run(d.children[i])) return e;
      path.pop_back();
    }
    return std::nullopt;
  }

  const LEntry* pick(const std::vector<LEntry>& es, const std::optional<int>& i) {
    if (!i || *i < 0 || std::size_t(*i) >= es.size()) return nullptr;
    return &es[*i];
  }

  std::optional<LCheckError> run(const LDerivation& d) {
    const LSequent& s = d.conclusion;
    const LWitness& w = d.witness;
    switch (d.rule) {
      case LRule::Refl: {
        if (!w.node) return fail("refl needs a node witness");
        LSequent p = s;
        p.graph.edges.push_back(LEdge{*w.node, *w.node});
        return children(d, {p});
      }
      case LRule::Trans: {
        if (!w.node || !w.node2 || !w.node3)
          return fail("trans needs three node witnesses");
        if (!s.graph.has_edge(*w.node, *w.node2) ||
            !s.graph.has_edge(*w.node2, *w.node3))
          return fail("trans side edges are not in the graph");
        LSequent p = s;
        p.graph.edges.push_back(LEdge{*w.node, *w.node3});
        return children(d, {p});
      }
      case LRule::Hyp: {
        const LEntry* l = pick(s.left, w.left_index);
        const LEntry* r = pick(s.right, w.right_index);
        if (!l || !r) return fail("hyp needs left and right indices");
        if (!(l->node == r->node) || l->formula != r->formula)
          return fail("hyp entries do not agree");
        return children(d, {});
      }
      case LRule::MonL: {
        const LEntry* l = pick(s.left, w.left_index);
        if (!l || !w.node) return fail("monL needs a left index and a node");
        if (!s.graph.has_edge(l->node, *w.node))
          return fail("monL edge is not in the graph");
        LSequent p = s;
        p.left = with(p.left, LEntry{*w.node, l->formula});
        return children(d, {p});
      }
      case LRule::MonR: {
        const LEntry* r = pick(s.right, w.right_index);
        if (!r || !w.node) return fail("monR needs a right index and a node");
        if (!s.graph.has_edge(*w.node, r->node))
          return fail("monR edge is not in the graph");
        LSequent p = s;
        p.right = with(p.right, LEntry{*w.node, r->formula});
        return children(d, {p});
      }
      case LRule::TrueL: {
        const LEntry* l = pick(s.left, w.left_index);
        if (!l || l->formula.kind() != LFormula::Kind::Top)
          return fail("trueL needs a left top entry");
        LSequent p = s;
        p.left = without(p.left, *w.left_index);
        return children(d, {p});
      }
      case LRule::TrueR: {
        const LEntry* r = pick(s.right, w.right_index);
        if (!r || r->formula.kind() != LFormula::Kind::Top)
          return fail("trueR needs a right top entry");
        return children(d, {});
      }
      case LRule::FalseL: {
        const LEntry* l = pick(s.left, w.left_index);
        if (!l || l->formula.kind() != LFormula::Kind::Bot)
          return fail("falseL needs a left bot entry");
        return children(d, {});
      }
      case LRule::FalseR: {
        const LEntry* r = pick(s.right, w.right_index);
        if (!r || r->formula.kind() != LFormula::Kind::Bot)
          return fail("falseR needs a right bot entry");
        LSequent p = s;
        p.right = without(p.right, *w.right_index);
        return children(d, {p});
      }
      case LRule::AndL: {
        const LEntry* l = pick(s.left, w.left_index);
        if (!l || l->formula.kind() != LFormula::Kind::And)
          return fail("andL needs a left conjunction");
        LSequent p = s;
        p.left = without(p.left, *w.left_index);
        p.left = with(p.left, LEntry{l->node, l->formula.lhs()});
        p.left = with(p.left, LEntry{l->node, l->formula.rhs()});
        return children(d, {p});
      }
      case LRule::AndR: {
        const LEntry* r = pick(s.right, w.right_index);
        if (!r || r->formula.kind() != LFormula::Kind::And)
          return fail("andR needs a right conjunction");
        LSequent p1 = s, p2 = s;
        p1.right = with(without(s.right, *w.right_index),
                        LEntry{r->node, r->formula.lhs()});
        p2.right = with(without(s.right, *w.right_index),
                        LEntry{r->node, r->formula.rhs()});
        return children(d, {p1, p2});
      }
      case LRule::DisjL: {
        const LEntry* l = pick(s.left, w.left_index);
        if (!l || l->formula.kind() != LFormula::Kind::Or)
          return fail("disjL needs a left disjunction");
        LSequent p1 = s, p2 = s;
        p1.left = with(without(s.left, *w.left_index),
                       LEntry{l->node, l->formula.lhs()});
        p2.left = with(without(s.left, *w.left_index),
                       LEntry{l->node, l->formula.rhs()});
        return children(d, {p1, p2});
      }
      case LRule::DisjR: {
        const LEntry* r = pick(s.right, w.right_index);
        if (!r || r->formula.kind() != LFormula::Kind::Or)
          return fail("disjR needs a right disjunction");
        LSequent p = s;
        p.right = without(p.right, *w.right_index);
        p.right = with(p.right, LEntry{r->node, r->formula.lhs()});
        p.right = with(p.right, LEntry{r->node, r->formula.rhs()});
        return children(d, {p});
      }
      case LRule::ImpL: {
        const LEntry* l = pick(s.left, w.left_index);
        if (!l || l->formula.kind() != LFormula::Kind::Imp)
          return fail("impL needs a left implication");
        if (!w.node) return fail("impL needs a node witness");
        if (!s.graph.has_edge(l->node, *w.node))
          return fail("impL edge is not in the graph");
        LSequent p1 = s, p2 = s;
        p1.left = without(s.left, *w.left_index);
        p1.right = with(s.right, LEntry{*w.node, l->formula.lhs()});
        p2.left = with(without(s.left, *w.left_index),
                       LEntry{*w.node, l->formula.rhs()});
        return children(d, {p1, p2});
      }
      case LRule::ImpR: {
        const LEntry* r = pick(s.right, w.right_index);
        if (!r || r->formula.kind() != LFormula::Kind::Imp)
          return fail("impR needs a right implication");
        if (!w.fresh) return fail("impR needs a fresh-node witness");
        if (nodes_of(s).count(*w.fresh))
          return fail("impR fresh node " + w.fresh->name +
                      " occurs in the sequent");
        LSequent p = s;
        p.graph.edges.push_back(LEdge{r->node, *w.fresh});
        p.left = with(p.left, LEntry{*w.fresh, r->formula.lhs()});
        p.right = with(without(s.right, *w.right_index),
                       LEntry{*w.fresh, r->formula.rhs()});
        return children(d, {p});
      }
      case LRule::SubL: {
        const LEntry* l = pick(s.left, w.left_index);
        if (!l || l->formula.kind() != LFormula::Kind::Sub)
          return fail("subL needs a left co-implication");
        if (!w.fresh) return fail("subL needs a fresh-node witness");
        if (nodes_of(s).count(*w.fresh))
          return fail("subL fresh node " + w.fresh->name +
                      " occurs in the sequent");
        LSequent p = s;
        p.graph.edges.push_back(LEdge{*w.fresh, l->node});
        p.left = with(without(s.left, *w.left_index),
                      LEntry{*w.fresh, l->formula.lhs()});
        p.right = with(p.right, LEntry{*w.fresh, l->formula.rhs()});
        return children(d, {p});
      }
      case LRule::SubR: {
        const LEntry* r = pick(s.right, w.right_index);
        if (!r || r->formula.kind() != LFormula::Kind::Sub)
          return fail("subR needs a right co-implication");
        if (!w.node) return fail("subR needs a node witness");
        if (!s.graph.has_edge(*w.node, r->node))
          return fail("subR edge is not in the graph");
        LSequent p1 = s, p2 = s;
        p1.right = with(without(s.right, *w.right_index),
                        LEntry{*w.node, r->formula.lhs()});
        p2.left = with(s.left, LEntry{*w.node, r->formula.rhs()});
        p2.right = without(s.right, *w.right_index);
        return children(d, {p1, p2});
      }
    }
    return fail("unknown rule");
  }
};

}  // namespace

std::optional<LCheckError> check_l(const LDerivation& d) {
  LChecker c;
  return c.run(d);
}

// ---------------------------------------------------------------------------
// Shallow bounded search for L (containment tests only)

namespace {

std::string canon_lsequent(const LSequent& s) {
  std::string out;
  auto l = canon_side(s.left);
  auto r = canon_side(s.right);
  auto g = canon_graph(s.graph);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  l.erase(std::unique(l.begin(), l.end()), l.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  for (auto& x : l) out += x + "|";
  out += ";";
  for (auto& x : g) out += x + "|";
  out += ";";
  for (auto& x : r) out += x + "|";
  return out;
}

struct LProver {
  std::set<std::string> on_branch;
  long fresh_counter = 0;

  NodeId alloc_fresh() { return NodeId{"n%" + std::to_string(fresh_counter++)}; }

  std::optional<LDerivation> search(const LSequent& s, int depth) {
    if (depth <= 0) return std::nullopt;
    std::string key = canon_lsequent(s);
    if (on_branch.count(key)) return std::nullopt;
    on_branch.insert(key);
    auto out = dispatch(s, depth);
    on_branch.erase(key);
    return out;
  }

  std::optional<LDerivation> dispatch(const LSequent& s, int depth) {
    // closures
    for (std::size_t i = 0; i < s.left.size(); ++i) {
      for (std::size_t j = 0; j < s.right.size(); ++j)
        if (s.left[i].node == s.right[j].node &&
            s.left[i].formula == s.right[j].formula) {
          LWitness w;
          w.left_index = int(i);
          w.right_index = int(j);
          return LDerivation{LRule::Hyp, s, w, {}};
        }
      if (s.left[i].formula.kind() == LFormula::Kind::Bot) {
        LWitness w;
        w.left_index = int(i);
        return LDerivation{LRule::FalseL, s, w, {}};
      }
    }
    for (std::size_t j = 0; j < s.right.size(); ++j)
      if (s.right[j].formula.kind() == LFormula::Kind::Top) {
        LWitness w;
        w.right_index = int(j);
        return LDerivation{LRule::TrueR, s, w, {}};
      }

    // right decompositions
    for (std::size_t j = 0; j < s.right.size(); ++j) {
      const LEntry& r = s.right[j];
      LWitness w;
      w.right_index = int(j);
      switch (r.formula.kind()) {
        case LFormula::Kind::And: {
          LSequent p1 = s, p2 = s;
          p1.right = with(without(s.right, int(j)), LEntry{r.node, r.formula.lhs()});
          p2.right = with(without(s.right, int(j)), LEntry{r.node, r.formula.rhs()});
          if (auto d1 = search(p1, depth - 1))
            if (auto d2 = search(p2, depth - 1))
              return LDerivation{LRule::AndR, s, w, {*d1, *d2}};
          break;
        }
        case LFormula::Kind::Or: {
          LSequent p = s;
          p.right = without(p.right, int(j));
          p.right = with(p.right, LEntry{r.node, r.formula.lhs()});
          p.right = with(p.right, LEntry{r.node, r.formula.rhs()});
          if (auto d1 = search(p, depth - 1))
            return LDerivation{LRule::DisjR, s, w, {*d1}};
          break;
        }
        case LFormula::Kind::Imp: {
          NodeId fresh = alloc_fresh();
          LWitness w2 = w;
          w2.fresh = fresh;
          LSequent p = s;
          p.graph.edges.push_back(LEdge{r.node, fresh});
          p.left = with(p.left, LEntry{fresh, r.formula.lhs()});
          p.right = with(without(s.right, int(j)), LEntry{fresh, r.formula.rhs()});
          if (auto d1 = search(p, depth - 1))
            return LDerivation{LRule::ImpR, s, w2, {*d1}};
          --fresh_counter;
          break;
        }
        case LFormula::Kind::Sub: {
          for (const auto& e : s.graph.edges) {
            if (!(e.to == r.node)) continue;
            LWitness w2 = w;
            w2.node = e.from;
            LSequent p1 = s, p2 = s;
            p1.right = with(without(s.right, int(j)), LEntry{e.from, r.formula.lhs()});
            p2.left = with(s.left, LEntry{e.from, r.formula.rhs()});
            p2.right = without(s.right, int(j));
            if (auto d1 = search(p1, depth - 1))
              if (auto d2 = search(p2, depth - 1))
                return LDerivation{LRule::SubR, s, w2, {*d1, *d2}};
          }
          break;
        }
        default:
          break;
      }
    }

    // left decompositions
    for (std::size_t i = 0; i < s.left.size(); ++i) {
      const LEntry& l = s.left[i];
      LWitness w;
      w.left_index = int(i);
      switch (l.formula.kind()) {
        case LFormula::Kind::Top: {
          LSequent p = s;
          p.left = without(p.left, int(i));
          if (auto d1 = search(p, depth - 1))
            return LDerivation{LRule::TrueL, s, w, {*d1}};
          break;
        }
        case LFormula::Kind::And: {
          LSequent p = s;
          p.left = without(p.left, int(i));
          p.left = with(p.left, LEntry{l.node, l.formula.lhs()});
          p.left = with(p.left, LEntry{l.node, l.formula.rhs()});
          if (auto d1 = search(p, depth - 1))
            return LDerivation{LRule::AndL, s, w, {*d1}};
          break;
        }
        case LFormula::Kind::Or: {
          LSequent p1 = s, p2 = s;
          p1.left = with(without(s.left, int(i)), LEntry{l.node, l.formula.lhs()});
          p2.left = with(without(s.left, int(i)), LEntry{l.node, l.formula.rhs()});
          if (auto d1 = search(p1, depth - 1))
            if (auto d2 = search(p2, depth - 1))
              return LDerivation{LRule::DisjL, s, w, {*d1, *d2}};
          break;
        }
        case LFormula::Kind::Imp: {
          for (const auto& e : s.graph.edges) {
            if (!(e.from == l.node)) continue;
            LWitness w2 = w;
            w2.node = e.to;
            LSequent p1 = s, p2 = s;
            p1.left = without(s.left, int(i));
            p1.right = with(s.right, LEntry{e.to, l.formula.lhs()});
            p2.left = with(without(s.left, int(i)), LEntry{e.to, l.formula.rhs()});
            if (auto d1 = search(p1, depth - 1))
              if (auto d2 = search(p2, depth - 1))
                return LDerivation{LRule::ImpL, s, w2, {*d1, *d2}};
          }
          break;
        }
        case LFormula::Kind::Sub: {
          NodeId fresh = alloc_fresh();
          LWitness w2 = w;
          w2.fresh = fresh;
          LSequent p = s;
          p.graph.edges.push_back(LEdge{fresh, l.node});
          p.left = with(without(s.left, int(i)), LEntry{fresh, l.formula.lhs()});
          p.right = with(p.right, LEntry{fresh, l.formula.rhs()});
          if (auto d1 = search(p, depth - 1))
            return LDerivation{LRule::SubL, s, w2, {*d1}};
          --fresh_counter;
          break;
        }
        default:
          break;
      }
    }

    // monotonicity along existing edges (new entries only)
    for (std::size_t i = 0; i < s.left.size(); ++i)
      for (const auto& e : s.graph.edges) {
        if (!(e.from == s.left[i].node) || e.from == e.to) continue;
        LEntry moved{e.to, s.left[i].formula};
        bool present = false;
        for (const auto& x : s.left) present = present || x == moved;
        if (present) continue;
        LWitness w;
        w.left_index = int(i);
        w.node = e.to;
        LSequent p = s;
        p.left = with(p.left, moved);
        if (auto d1 = search(p, depth - 1))
          return LDerivation{LRule::MonL, s, w, {*d1}};
      }
    for (std::size_t j = 0; j < s.right.size(); ++j)
      for (const auto& e : s.graph.edges) {
        if (!(e.to == s.right[j].node) || e.from == e.to) continue;
        LEntry moved{e.from, s.right[j].formula};
        bool present = false;
        for (const auto& x : s.right) present = present || x == moved;
        if (present) continue;
        LWitness w;
        w.right_index = int(j);
        w.node = e.from;
        LSequent p = s;
        p.right = with(p.right, moved);
        if (auto d1 = search(p, depth - 1))
          return LDerivation{LRule::MonR, s, w, {*d1}};
      }

    // refl over sequent nodes, then trans over edge pairs (new edges only)
    for (const NodeId& n : nodes_of(s)) {
      if (s.graph.has_edge(n, n)) continue;
      LWitness w;
      w.node = n;
      LSequent p = s;
      p.graph.edges.push_back(LEdge{n, n});
      if (auto d1 = search(p, depth - 1))
        return LDerivation{LRule::Refl, s, w, {*d1}};
    }
    for (const auto& e1 : s.graph.edges)
      for (const auto& e2 : s.graph.edges) {
        if (!(e1.to == e2.from) || s.graph.has_edge(e1.from, e2.to)) continue;
        LWitness w;
        w.node = e1.from;
        w.node2 = e1.to;
        w.node3 = e2.to;
        LSequent p = s;
        p.graph.edges.push_back(LEdge{e1.from, e2.to});
        if (auto d1 = search(p, depth - 1))
          return LDerivation{LRule::Trans, s, w, {*d1}};
      }
    return std::nullopt;
  }
};

}  // namespace

std::optional<LDerivation> prove_l(const LSequent& seq, int depth) {
  LProver p;
  std::set<std::string> names;
  for (const auto& n : nodes_of(seq)) names.insert(n.name);
  std::string probe = fresh_name("n", names);
  p.fresh_counter = std::stol(probe.substr(probe.rfind('%') + 1));
  return p.search(seq, depth);
}

// ---------------------------------------------------------------------------
// Translations

Formula d_formula(const LFormula& a) {
  switch (a.kind()) {
    case LFormula::Kind::Atom:
      return Formula::atom(a.atom_name());
    case LFormula::Kind::Top:
      return Formula::unit(Polarity::Pos);
    case LFormula::Kind::Bot:
      return Formula::unit(Polarity::Neg);
    case LFormula::Kind::And:
      return Formula::conj(Polarity::Pos, d_formula(a.lhs()), d_formula(a.rhs()));
    case LFormula::Kind::Or:
      return Formula::conj(Polarity::Neg, d_formula(a.lhs()), d_formula(a.rhs()));
    case LFormula::Kind::Imp:
      return Formula::imp(Polarity::Pos, d_formula(a.lhs()), d_formula(a.rhs()));
    case LFormula::Kind::Sub:
      // B -< A  becomes  D(A) ->[-] D(B)
      return Formula::imp(Polarity::Neg, d_formula(a.rhs()), d_formula(a.lhs()));
  }
  throw std::logic_error("d_formula");
}

Context d_context(const std::vector<LEntry>& entries, Polarity pol) {
  Context out;
  for (const auto& e : entries)
    out.entries.push_back(ContextEntry{{}, pol, d_formula(e.formula), e.node});
  return out;
}

Graph d_graph(const LGraph& g) {
  Graph out;
  for (const auto& e : g.edges)
    out.edges.push_back(Edge{e.from, Polarity::Pos, e.to});
  return out;
}

LFormula l_formula(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return LFormula::atom(a.atom_name());
    case Formula::Kind::Unit:
      return a.pol() == Polarity::Pos ? LFormula::top() : LFormula::bot();
    case Formula::Kind::And:
      return a.pol() == Polarity::Pos
                 ? LFormula::conj(l_formula(a.lhs()), l_formula(a.rhs()))
                 : LFormula::disj(l_formula(a.lhs()), l_formula(a.rhs()));
    case Formula::Kind::Imp:
      if (a.pol() == Polarity::Pos)
        return LFormula::imp(l_formula(a.lhs()), l_formula(a.rhs()));
      // B ->[-] A  becomes  L(A) -< L(B)
      return LFormula::sub(l_formula(a.rhs()), l_formula(a.lhs()));
  }
  throw std::logic_error("l_formula");
}

std::vector<LEntry> l_context_pos(const Context& c) {
  std::vector<LEntry> out;
  for (const auto& e : c.entries)
    if (e.pol == Polarity::Pos) out.push_back(LEntry{e.node, l_formula(e.formula)});
  return out;
}

std::vector<LEntry> l_context_neg(const Context& c) {
  std::vector<LEntry> out;
  for (const auto& e : c.entries)
    if (e.pol == Polarity::Neg) out.push_back(LEntry{e.node, l_formula(e.formula)});
  return out;
}

LGraph l_graph(const Graph& g) {
  LGraph out;
  for (const auto& e : g.edges) {
    if (e.pol == Polarity::Pos)
      out.edges.push_back(LEdge{e.from, e.to});
    else
      out.edges.push_back(LEdge{e.to, e.from});
  }
  return out;
}

LSequent l_sequent(const Sequent& s) {
  LSequent out;
  out.graph = l_graph(s.graph);
  out.left = l_context_pos(s.ctx);
  out.right = l_context_neg(s.ctx);
  if (s.pol == Polarity::Pos)
    out.right.insert(out.right.begin(), LEntry{s.node, l_formula(s.formula)});
  else
    out.left.push_back(LEntry{s.node, l_formula(s.formula)});
  return out;
}

std::vector<Sequent> activations(const LSequent& s) {
  if (s.right.empty())
    throw std::invalid_argument("activation requires a non-empty right side");
  std::vector<Sequent> out;
  for (std::size_t k = 0; k < s.right.size(); ++k) {
    Sequent a;
    a.graph = d_graph(s.graph);
    a.ctx = d_context(s.left, Polarity::Pos);
    std::vector<LEntry> rest = s.right;
    rest.erase(rest.begin() + k);
    Context neg = d_context(rest, Polarity::Neg);
    a.ctx.entries.insert(a.ctx.entries.end(), neg.entries.begin(),
                         neg.entries.end());
    a.pol = Polarity::Pos;
    a.formula = d_formula(s.right[k].formula);
    a.node = s.right[k].node;
    out.push_back(std::move(a));
  }
  return out;
}

LSequent normalize_empty_right(const LSequent& s) {
  if (!s.right.empty()) return s;
  LSequent out = s;
  out.right.push_back(LEntry{fresh_node(nodes_of(s)), LFormula::bot()});
  return out;
}

bool graphs_isomorphic(const Graph& g1, const Graph& g2) {
  auto covered = [](const Edge& e, const Graph& g) {
    for (const auto& o : g.edges) {
      if (o == e) return true;
      if (o.from == e.to && o.to == e.from && o.pol == flip(e.pol)) return true;
    }
    return false;
  };
  for (const auto& e : g1.edges)
    if (!covered(e, g2)) return false;
  for (const auto& e : g2.edges)
    if (!covered(e, g1)) return false;
  return true;
}

}  // namespace dtt
