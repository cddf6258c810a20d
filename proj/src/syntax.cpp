// SPDX-License-Identifier: Apache-2.0

#include "dtt/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace dtt {

// ---------------------------------------------------------------------------
// Formula

Formula Formula::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->pol = Polarity::Pos;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::unit(Polarity p) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Unit;
  n->pol = p;
  return Formula(std::move(n));
}

Formula Formula::imp(Polarity p, Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Imp;
  n->pol = p;
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Formula(std::move(n));
}

Formula Formula::conj(Polarity p, Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->pol = p;
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Formula(std::move(n));
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Atom:
      return node_->name == o.node_->name;
    case Kind::Unit:
      return node_->pol == o.node_->pol;
    case Kind::Imp:
    case Kind::And:
      return node_->pol == o.node_->pol && lhs() == o.lhs() && rhs() == o.rhs();
  }
  return false;
}

int Formula::depth() const {
  switch (node_->kind) {
    case Kind::Atom:
    case Kind::Unit:
      return 1;
    default:
      return 1 + std::max(lhs().depth(), rhs().depth());
  }
}

void Formula::collect_atoms(std::set<std::string>& out) const {
  switch (node_->kind) {
    case Kind::Atom:
      out.insert(node_->name);
      return;
    case Kind::Unit:
      return;
    default:
      lhs().collect_atoms(out);
      rhs().collect_atoms(out);
  }
}

// ---------------------------------------------------------------------------
// Nodes of graphs / contexts

std::set<NodeId> nodes_of(const Graph& g) {
  std::set<NodeId> out;
  for (const auto& e : g.edges) {
    out.insert(e.from);
    out.insert(e.to);
  }
  return out;
}

std::set<NodeId> nodes_of(const Context& c) {
  std::set<NodeId> out;
  for (const auto& e : c.entries) out.insert(e.node);
  return out;
}

std::set<NodeId> nodes_of(const Sequent& s) {
  std::set<NodeId> out = nodes_of(s.graph);
  for (const auto& e : s.ctx.entries) out.insert(e.node);
  out.insert(s.node);
  return out;
}

NodeId subst_node(const NodeId& target, const NodeId& replaced, const NodeId& n) {
  return n == replaced ? target : n;
}

Graph subst_node(const NodeId& target, const NodeId& replaced, const Graph& g) {
  Graph out;
  out.edges.reserve(g.edges.size());
  for (const auto& e : g.edges)
    out.edges.push_back({subst_node(target, replaced, e.from), e.pol,
                         subst_node(target, replaced, e.to)});
  return out;
}

Context subst_node(const NodeId& target, const NodeId& replaced, const Context& c) {
  Context out;
  out.entries.reserve(c.entries.size());
  for (const auto& e : c.entries)
    out.entries.push_back({e.var, e.pol, e.formula, subst_node(target, replaced, e.node)});
  return out;
}

// ---------------------------------------------------------------------------
// Terms

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::triv() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Triv;
  return Term(std::move(n));
}

Term Term::pair(Term a, Term b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pair;
  n->a = a.node_;
  n->b = b.node_;
  return Term(std::move(n));
}

Term Term::in(int d, Term t) {
  assert(d == 1 || d == 2);
  auto n = std::make_shared<Node>();
  n->kind = Kind::In;
  n->index = d;
  n->a = t.node_;
  return Term(std::move(n));
}

Term Term::lam(std::string x, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lam;
  n->name = std::move(x);
  n->a = body.node_;
  return Term(std::move(n));
}

Term Term::copair(Term a, Term b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::CoPair;
  n->a = a.node_;
  n->b = b.node_;
  return Term(std::move(n));
}

Term Term::cut(std::string x, Term left, CutAnnot annot, Term right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Cut;
  n->name = std::move(x);
  n->a = left.node_;
  n->b = right.node_;
  n->annot = std::move(annot);
  return Term(std::move(n));
}

Term Term::child(int i) const {
  if (i == 0 && node_->a) return Term(node_->a);
  if (i == 1 && node_->b) return Term(node_->b);
  throw std::out_of_range("Term::child");
}

int Term::arity() const {
  switch (node_->kind) {
    case Kind::Var:
    case Kind::Triv:
      return 0;
    case Kind::In:
    case Kind::Lam:
      return 1;
    default:
      return 2;
  }
}

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Var:
      return node_->name == o.node_->name;
    case Kind::Triv:
      return true;
    case Kind::Pair:
    case Kind::CoPair:
      return child(0) == o.child(0) && child(1) == o.child(1);
    case Kind::In:
      return node_->index == o.node_->index && child(0) == o.child(0);
    case Kind::Lam:
      return node_->name == o.node_->name && child(0) == o.child(0);
    case Kind::Cut:
      return node_->name == o.node_->name && *node_->annot == *o.node_->annot &&
             child(0) == o.child(0) && child(1) == o.child(1);
  }
  return false;
}

namespace {

void free_vars_rec(const Term& t, std::set<std::string>& bound,
                   std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (!bound.count(t.var_name())) out.insert(t.var_name());
      return;
    case Term::Kind::Triv:
      return;
    case Term::Kind::Pair:
    case Term::Kind::CoPair:
      free_vars_rec(t.child(0), bound, out);
      free_vars_rec(t.child(1), bound, out);
      return;
    case Term::Kind::In:
      free_vars_rec(t.child(0), bound, out);
      return;
    case Term::Kind::Lam: {
      bool fresh = bound.insert(t.binder()).second;
      free_vars_rec(t.child(0), bound, out);
      if (fresh) bound.erase(t.binder());
      return;
    }
    case Term::Kind::Cut: {
      bool fresh = bound.insert(t.binder()).second;
      free_vars_rec(t.child(0), bound, out);
      free_vars_rec(t.child(1), bound, out);
      if (fresh) bound.erase(t.binder());
      return;
    }
  }
}

// All variable names appearing anywhere in a term, bound or free.
void all_names_rec(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out.insert(t.var_name());
      return;
    case Term::Kind::Triv:
      return;
    case Term::Kind::Lam:
    case Term::Kind::Cut:
      out.insert(t.binder());
      break;
    default:
      break;
  }
  for (int i = 0; i < t.arity(); ++i) all_names_rec(t.child(i), out);
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> bound, out;
  free_vars_rec(t, bound, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  std::string stem = base.substr(0, base.find('%'));
  if (stem.empty()) stem = "x";
  long counter = 0;
  for (const auto& name : used) {
    auto pos = name.rfind('%');
    if (pos == std::string::npos) continue;
    try {
      long k = std::stol(name.substr(pos + 1));
      counter = std::max(counter, k + 1);
    } catch (...) {
    }
  }
  std::string candidate = stem + "%" + std::to_string(counter);
  while (used.count(candidate)) {
    ++counter;
    candidate = stem + "%" + std::to_string(counter);
  }
  return candidate;
}

NodeId fresh_node(const std::set<NodeId>& used) {
  std::set<std::string> names;
  for (const auto& n : used) names.insert(n.name);
  return NodeId{fresh_name("n", names)};
}

Term subst_term(const Term& t, const std::string& x, const Term& s) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.var_name() == x ? s : t;
    case Term::Kind::Triv:
      return t;
    case Term::Kind::Pair:
      return Term::pair(subst_term(t.child(0), x, s), subst_term(t.child(1), x, s));
    case Term::Kind::CoPair:
      return Term::copair(subst_term(t.child(0), x, s), subst_term(t.child(1), x, s));
    case Term::Kind::In:
      return Term::in(t.index(), subst_term(t.child(0), x, s));
    case Term::Kind::Lam: {
      if (t.binder() == x) return t;
      std::set<std::string> fv_s = free_vars(s);
      if (fv_s.count(t.binder()) && free_vars(t.child(0)).count(x)) {
        std::set<std::string> used = fv_s;
        all_names_rec(t.child(0), used);
        used.insert(x);
        std::string y = fresh_name(t.binder(), used);
        Term body = subst_term(t.child(0), t.binder(), Term::var(y));
        return Term::lam(y, subst_term(body, x, s));
      }
      return Term::lam(t.binder(), subst_term(t.child(0), x, s));
    }
    case Term::Kind::Cut: {
      if (t.binder() == x) return t;
      std::set<std::string> fv_s = free_vars(s);
      bool x_free = free_vars(t.child(0)).count(x) || free_vars(t.child(1)).count(x);
      if (fv_s.count(t.binder()) && x_free) {
        std::set<std::string> used = fv_s;
        all_names_rec(t.child(0), used);
        all_names_rec(t.child(1), used);
        used.insert(x);
        std::string y = fresh_name(t.binder(), used);
        Term l = subst_term(t.child(0), t.binder(), Term::var(y));
        Term r = subst_term(t.child(1), t.binder(), Term::var(y));
        return Term::cut(y, subst_term(l, x, s), t.annot(), subst_term(r, x, s));
      }
      return Term::cut(t.binder(), subst_term(t.child(0), x, s), t.annot(),
                       subst_term(t.child(1), x, s));
    }
  }
  return t;
}

namespace {

bool alpha_rec(const Term& a, const Term& b,
               std::map<std::string, std::string>& ab,
               std::map<std::string, std::string>& ba) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: {
      auto ia = ab.find(a.var_name());
      auto ib = ba.find(b.var_name());
      if (ia == ab.end() && ib == ba.end()) return a.var_name() == b.var_name();
      if (ia == ab.end() || ib == ba.end()) return false;
      return ia->second == b.var_name() && ib->second == a.var_name();
    }
    case Term::Kind::Triv:
      return true;
    case Term::Kind::Pair:
    case Term::Kind::CoPair:
      return alpha_rec(a.child(0), b.child(0), ab, ba) &&
             alpha_rec(a.child(1), b.child(1), ab, ba);
    case Term::Kind::In:
      return a.index() == b.index() && alpha_rec(a.child(0), b.child(0), ab, ba);
    case Term::Kind::Lam:
    case Term::Kind::Cut: {
      auto save_a = ab.find(a.binder()) != ab.end()
                        ? std::optional<std::string>(ab[a.binder()])
                        : std::nullopt;
      auto save_b = ba.find(b.binder()) != ba.end()
                        ? std::optional<std::string>(ba[b.binder()])
                        : std::nullopt;
      ab[a.binder()] = b.binder();
      ba[b.binder()] = a.binder();
      bool ok;
      if (a.kind() == Term::Kind::Lam) {
        ok = alpha_rec(a.child(0), b.child(0), ab, ba);
      } else {
        ok = a.annot() == b.annot() &&
             alpha_rec(a.child(0), b.child(0), ab, ba) &&
             alpha_rec(a.child(1), b.child(1), ab, ba);
      }
      if (save_a)
        ab[a.binder()] = *save_a;
      else
        ab.erase(a.binder());
      if (save_b)
        ba[b.binder()] = *save_b;
      else
        ba.erase(b.binder());
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const Term& t1, const Term& t2) {
  std::map<std::string, std::string> ab, ba;
  return alpha_rec(t1, t2, ab, ba);
}

Term subst_node_in_annots(const NodeId& target, const NodeId& replaced, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Triv:
      return t;
    case Term::Kind::Pair:
      return Term::pair(subst_node_in_annots(target, replaced, t.child(0)),
                        subst_node_in_annots(target, replaced, t.child(1)));
    case Term::Kind::CoPair:
      return Term::copair(subst_node_in_annots(target, replaced, t.child(0)),
                          subst_node_in_annots(target, replaced, t.child(1)));
    case Term::Kind::In:
      return Term::in(t.index(), subst_node_in_annots(target, replaced, t.child(0)));
    case Term::Kind::Lam:
      return Term::lam(t.binder(), subst_node_in_annots(target, replaced, t.child(0)));
    case Term::Kind::Cut: {
      CutAnnot a{t.annot().formula, subst_node(target, replaced, t.annot().node)};
      return Term::cut(t.binder(), subst_node_in_annots(target, replaced, t.child(0)),
                       a, subst_node_in_annots(target, replaced, t.child(1)));
    }
  }
  return t;
}

}  // namespace dtt
