// SPDX-License-Identifier: Apache-2.0

#include "dtt/typing.hpp"

#include <algorithm>

#include "dtt/reachability.hpp"
#include "dtt/text.hpp"

namespace dtt {

const char* typing_rule_name(TypingRule r) {
  switch (r) {
    case TypingRule::Ax: return "Ax";
    case TypingRule::Unit: return "Unit";
    case TypingRule::And: return "And";
    case TypingRule::AndBar: return "AndBar";
    case TypingRule::Imp: return "Imp";
    case TypingRule::ImpBar: return "ImpBar";
    case TypingRule::Cut: return "Cut";
  }
  return "?";
}

std::string TypeError::where() const {
  if (path.empty()) return "at the root";
  std::string out = "at path ";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

namespace {

struct Checker {
  std::vector<int> path;

  CheckResult fail(std::string msg) {
    return CheckResult{std::nullopt, TypeError{std::move(msg), path}};
  }

  // Candidate witness nodes in first-occurrence order: graph, context, goal.
  static std::vector<NodeId> witness_candidates(const TypingGoal& g) {
    std::vector<NodeId> out;
    auto add = [&](const NodeId& n) {
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    };
    for (const auto& e : g.graph.edges) {
      add(e.from);
      add(e.to);
    }
    for (const auto& e : g.ctx.entries) add(e.node);
    add(g.node);
    return out;
  }

  // Fresh node outside everything the goal mentions, including annotations.
  static NodeId alloc_fresh(const TypingGoal& g) {
    std::set<NodeId> used = nodes_of(g.graph);
    for (const auto& e : g.ctx.entries) used.insert(e.node);
    used.insert(g.node);
    collect_annot_nodes(g.term, used);
    return fresh_node(used);
  }

  static void collect_annot_nodes(const Term& t, std::set<NodeId>& out) {
    if (t.kind() == Term::Kind::Cut) out.insert(t.annot().node);
    for (int i = 0; i < t.arity(); ++i) collect_annot_nodes(t.child(i), out);
  }

  static std::set<std::string> ctx_vars(const Context& c) {
    std::set<std::string> out;
    for (const auto& e : c.entries)
      if (e.var) out.insert(*e.var);
    return out;
  }

  // Renames the binder when it shadows a context variable, so the extended
  // context keeps its names pairwise distinct.
  static std::pair<std::string, Term> unshadow(const std::string& binder,
                                               const Term& body,
                                               const Context& ctx) {
    std::set<std::string> vars = ctx_vars(ctx);
    if (!vars.count(binder)) return {binder, body};
    std::set<std::string> used = vars;
    for (const auto& v : free_vars(body)) used.insert(v);
    std::string fresh = fresh_name(binder, used);
    return {fresh, subst_term(body, binder, Term::var(fresh))};
  }

  CheckResult run(const TypingGoal& g) {
    switch (g.term.kind()) {
      case Term::Kind::Var: {
        const std::string& x = g.term.var_name();
        for (std::size_t i = 0; i < g.ctx.entries.size(); ++i) {
          const auto& e = g.ctx.entries[i];
          if (!e.var || *e.var != x) continue;
          if (e.pol != g.pol || e.formula != g.formula)
            return fail("variable " + x + " has type " + to_text(e.pol) + " " +
                        to_text(e.formula) + " @ " + e.node.name +
                        " which does not match the goal " + to_text(g.pol) + " " +
                        to_text(g.formula));
          if (!reaches(g.graph, e.node, g.pol, g.node))
            return fail("node " + e.node.name + " does not reach " + g.node.name +
                        " at polarity " + to_text(g.pol));
          TypingTrace t{TypingRule::Ax, g, int(i), {}, {}, {}, {}};
          return CheckResult{std::move(t), std::nullopt};
        }
        return fail("unbound variable " + x);
      }
      case Term::Kind::Triv: {
        if (g.formula.kind() != Formula::Kind::Unit || g.formula.pol() != g.pol)
          return fail("triv requires the goal " + to_text(g.pol) + " <" +
                      to_text(g.pol) + ">, got " + to_text(g.pol) + " " +
                      to_text(g.formula));
        TypingTrace t{TypingRule::Unit, g, {}, {}, {}, {}, {}};
        return CheckResult{std::move(t), std::nullopt};
      }
      case Term::Kind::Pair: {
        if (g.formula.kind() != Formula::Kind::And || g.formula.pol() != g.pol)
          return fail("pair requires a goal conjunction at the goal polarity");
        TypingTrace t{TypingRule::And, g, {}, {}, {}, {}, {}};
        for (int i = 0; i < 2; ++i) {
          path.push_back(i);
          TypingGoal sub{g.graph, g.ctx, g.term.child(i), g.pol,
                         i == 0 ? g.formula.lhs() : g.formula.rhs(), g.node};
          CheckResult r = run(sub);
          path.pop_back();
          if (!r.ok()) return r;
          t.children.push_back(std::move(*r.trace));
        }
        return CheckResult{std::move(t), std::nullopt};
      }
      case Term::Kind::In: {
        if (g.formula.kind() != Formula::Kind::And ||
            g.formula.pol() != flip(g.pol))
          return fail("injection requires a goal conjunction at the flipped polarity");
        int d = g.term.index();
        path.push_back(0);
        TypingGoal sub{g.graph, g.ctx, g.term.child(0), g.pol,
                       d == 1 ? g.formula.lhs() : g.formula.rhs(), g.node};
        CheckResult r = run(sub);
        path.pop_back();
        if (!r.ok()) return r;
        TypingTrace t{TypingRule::AndBar, g, {}, {}, {}, {}, {}};
        t.children.push_back(std::move(*r.trace));
        return CheckResult{std::move(t), std::nullopt};
      }
      case Term::Kind::Lam: {
        if (g.formula.kind() != Formula::Kind::Imp || g.formula.pol() != g.pol)
          return fail("lambda requires a goal implication at the goal polarity");
        NodeId fresh = alloc_fresh(g);
        auto [x, body] = unshadow(g.term.binder(), g.term.child(0), g.ctx);
        Graph g2 = g.graph.append(Edge{g.node, g.pol, fresh});
        Context c2 = g.ctx.append(ContextEntry{x, g.pol, g.formula.lhs(), fresh});
        path.push_back(0);
        CheckResult r = run(TypingGoal{std::move(g2), std::move(c2), body, g.pol,
                                       g.formula.rhs(), fresh});
        path.pop_back();
        if (!r.ok()) return r;
        TypingTrace t{TypingRule::Imp, g, {}, fresh, {}, x, {}};
        t.children.push_back(std::move(*r.trace));
        return CheckResult{std::move(t), std::nullopt};
      }
      case Term::Kind::CoPair: {
        if (g.formula.kind() != Formula::Kind::Imp ||
            g.formula.pol() != flip(g.pol))
          return fail("copair requires a goal implication at the flipped polarity");
        std::optional<TypeError> last;
        for (const NodeId& cand : witness_candidates(g)) {
          if (!reaches(g.graph, g.node, flip(g.pol), cand)) continue;
          path.push_back(0);
          CheckResult r0 = run(TypingGoal{g.graph, g.ctx, g.term.child(0),
                                          flip(g.pol), g.formula.lhs(), cand});
          path.pop_back();
          if (!r0.ok()) {
            last = r0.error;
            continue;
          }
          path.push_back(1);
          CheckResult r1 = run(TypingGoal{g.graph, g.ctx, g.term.child(1), g.pol,
                                          g.formula.rhs(), cand});
          path.pop_back();
          if (!r1.ok()) {
            last = r1.error;
            continue;
          }
          TypingTrace t{TypingRule::ImpBar, g, {}, {}, cand, {}, {}};
          t.children.push_back(std::move(*r0.trace));
          t.children.push_back(std::move(*r1.trace));
          return CheckResult{std::move(t), std::nullopt};
        }
        std::string msg = "no witness node admits both copair components";
        if (last) msg += " (last failure: " + last->message + ")";
        return fail(std::move(msg));
      }
      case Term::Kind::Cut: {
        const CutAnnot& ann = g.term.annot();
        // Rename the binder if needed, in both components at once.
        std::string x = g.term.binder();
        Term left = g.term.child(0), right = g.term.child(1);
        std::set<std::string> vars = ctx_vars(g.ctx);
        if (vars.count(x)) {
          std::set<std::string> used = vars;
          for (const auto& v : free_vars(left)) used.insert(v);
          for (const auto& v : free_vars(right)) used.insert(v);
          std::string y = fresh_name(x, used);
          left = subst_term(left, x, Term::var(y));
          right = subst_term(right, x, Term::var(y));
          x = y;
        }
        Context c2 = g.ctx.append(ContextEntry{x, flip(g.pol), g.formula, g.node});
        path.push_back(0);
        CheckResult rl = run(TypingGoal{g.graph, c2, left, Polarity::Pos,
                                        ann.formula, ann.node});
        path.pop_back();
        if (!rl.ok()) return rl;
        path.push_back(1);
        CheckResult rr = run(TypingGoal{g.graph, c2, right, Polarity::Neg,
                                        ann.formula, ann.node});
        path.pop_back();
        if (!rr.ok()) return rr;
        TypingTrace t{TypingRule::Cut, g, {}, {}, {}, x, {}};
        t.children.push_back(std::move(*rl.trace));
        t.children.push_back(std::move(*rr.trace));
        return CheckResult{std::move(t), std::nullopt};
      }
    }
    return fail("unhandled term");
  }
};

}  // namespace

CheckResult check(const TypingGoal& goal) {
  std::set<std::string> seen;
  for (const auto& e : goal.ctx.entries) {
    if (!e.var)
      return CheckResult{std::nullopt,
                         TypeError{"typing context entry lacks a variable", {}}};
    if (!seen.insert(*e.var).second)
      return CheckResult{std::nullopt,
                         TypeError{"duplicate context variable " + *e.var, {}}};
  }
  Checker c;
  return c.run(goal);
}

namespace {

bool replay_node(const TypingTrace& t);

bool replay_children(const TypingTrace& t, const std::vector<TypingGoal>& expect) {
  if (t.children.size() != expect.size()) return false;
  for (std::size_t i = 0; i < expect.size(); ++i) {
    const TypingGoal& want = expect[i];
    const TypingGoal& got = t.children[i].goal;
    if (!(sequent_of(want) == sequent_of(got)) || want.term != got.term)
      return false;
    if (!replay_node(t.children[i])) return false;
  }
  return true;
}

bool replay_node(const TypingTrace& t) {
  const TypingGoal& g = t.goal;
  switch (t.rule) {
    case TypingRule::Ax: {
      if (!t.ctx_index || *t.ctx_index < 0 ||
          std::size_t(*t.ctx_index) >= g.ctx.entries.size())
        return false;
      const auto& e = g.ctx.entries[*t.ctx_index];
      return e.var && *e.var == g.term.var_name() && e.pol == g.pol &&
             e.formula == g.formula && reaches(g.graph, e.node, g.pol, g.node) &&
             t.children.empty();
    }
    case TypingRule::Unit:
      return g.term.kind() == Term::Kind::Triv &&
             g.formula.kind() == Formula::Kind::Unit &&
             g.formula.pol() == g.pol && t.children.empty();
    case TypingRule::And: {
      if (g.term.kind() != Term::Kind::Pair ||
          g.formula.kind() != Formula::Kind::And || g.formula.pol() != g.pol)
        return false;
      return replay_children(
          t, {TypingGoal{g.graph, g.ctx, g.term.child(0), g.pol, g.formula.lhs(), g.node},
              TypingGoal{g.graph, g.ctx, g.term.child(1), g.pol, g.formula.rhs(), g.node}});
    }
    case TypingRule::AndBar: {
      if (g.term.kind() != Term::Kind::In ||
          g.formula.kind() != Formula::Kind::And ||
          g.formula.pol() != flip(g.pol))
        return false;
      Formula comp = g.term.index() == 1 ? g.formula.lhs() : g.formula.rhs();
      return replay_children(
          t, {TypingGoal{g.graph, g.ctx, g.term.child(0), g.pol, comp, g.node}});
    }
    case TypingRule::Imp: {
      if (g.term.kind() != Term::Kind::Lam ||
          g.formula.kind() != Formula::Kind::Imp || g.formula.pol() != g.pol ||
          !t.fresh || !t.binder)
        return false;
      std::set<NodeId> used = nodes_of(g.graph);
      for (const auto& e : g.ctx.entries) used.insert(e.node);
      if (used.count(*t.fresh)) return false;  // fresh-node hygiene
      Term body = g.term.binder() == *t.binder
                      ? g.term.child(0)
                      : subst_term(g.term.child(0), g.term.binder(),
                                   Term::var(*t.binder));
      Graph g2 = g.graph.append(Edge{g.node, g.pol, *t.fresh});
      Context c2 =
          g.ctx.append(ContextEntry{*t.binder, g.pol, g.formula.lhs(), *t.fresh});
      return replay_children(
          t, {TypingGoal{g2, c2, body, g.pol, g.formula.rhs(), *t.fresh}});
    }
    case TypingRule::ImpBar: {
      if (g.term.kind() != Term::Kind::CoPair ||
          g.formula.kind() != Formula::Kind::Imp ||
          g.formula.pol() != flip(g.pol) || !t.witness)
        return false;
      if (!reaches(g.graph, g.node, flip(g.pol), *t.witness)) return false;
      return replay_children(
          t, {TypingGoal{g.graph, g.ctx, g.term.child(0), flip(g.pol),
                         g.formula.lhs(), *t.witness},
              TypingGoal{g.graph, g.ctx, g.term.child(1), g.pol, g.formula.rhs(),
                         *t.witness}});
    }
    case TypingRule::Cut: {
      if (g.term.kind() != Term::Kind::Cut || !t.binder) return false;
      const CutAnnot& ann = g.term.annot();
      Term left = g.term.child(0), right = g.term.child(1);
      if (g.term.binder() != *t.binder) {
        left = subst_term(left, g.term.binder(), Term::var(*t.binder));
        right = subst_term(right, g.term.binder(), Term::var(*t.binder));
      }
      Context c2 = g.ctx.append(ContextEntry{*t.binder, flip(g.pol), g.formula, g.node});
      return replay_children(
          t, {TypingGoal{g.graph, c2, left, Polarity::Pos, ann.formula, ann.node},
              TypingGoal{g.graph, c2, right, Polarity::Neg, ann.formula, ann.node}});
    }
  }
  return false;
}

}  // namespace

bool replay(const TypingTrace& trace) { return replay_node(trace); }

// ---------------------------------------------------------------------------
// Classical typing

ClassicalContext erase_worlds(const Context& ctx) {
  ClassicalContext out;
  out.entries.reserve(ctx.entries.size());
  for (const auto& e : ctx.entries)
    out.entries.push_back({e.var.value_or(""), e.pol, e.formula});
  return out;
}

namespace {

struct ClassicalChecker {
  std::vector<int> path;

  ClassicalResult fail(std::string msg) {
    return ClassicalResult{false, TypeError{std::move(msg), path}};
  }
  static ClassicalResult ok() { return ClassicalResult{true, std::nullopt}; }

  ClassicalResult run(const ClassicalContext& ctx, const Term& t, Polarity p,
                      const Formula& a) {
    switch (t.kind()) {
      case Term::Kind::Var: {
        // innermost binding wins
        for (auto it = ctx.entries.rbegin(); it != ctx.entries.rend(); ++it)
          if (it->var == t.var_name())
            return it->pol == p && it->formula == a
                       ? ok()
                       : fail("variable type mismatch for " + t.var_name());
        return fail("unbound variable " + t.var_name());
      }
      case Term::Kind::Triv:
        return a.kind() == Formula::Kind::Unit && a.pol() == p
                   ? ok()
                   : fail("triv at a non-unit goal");
      case Term::Kind::Pair: {
        if (a.kind() != Formula::Kind::And || a.pol() != p)
          return fail("pair at a non-matching goal");
        return both(ctx, t, p, a.lhs(), p, a.rhs());
      }
      case Term::Kind::In: {
        if (a.kind() != Formula::Kind::And || a.pol() != flip(p))
          return fail("injection at a non-matching goal");
        path.push_back(0);
        ClassicalResult r =
            run(ctx, t.child(0), p, t.index() == 1 ? a.lhs() : a.rhs());
        path.pop_back();
        return r;
      }
      case Term::Kind::Lam: {
        if (a.kind() != Formula::Kind::Imp || a.pol() != p)
          return fail("lambda at a non-matching goal");
        ClassicalContext c2 = ctx;
        c2.entries.push_back({t.binder(), p, a.lhs()});
        path.push_back(0);
        ClassicalResult r = run(c2, t.child(0), p, a.rhs());
        path.pop_back();
        return r;
      }
      case Term::Kind::CoPair: {
        if (a.kind() != Formula::Kind::Imp || a.pol() != flip(p))
          return fail("copair at a non-matching goal");
        return both(ctx, t, flip(p), a.lhs(), p, a.rhs());
      }
      case Term::Kind::Cut: {
        ClassicalContext c2 = ctx;
        c2.entries.push_back({t.binder(), flip(p), a});
        const Formula& b = t.annot().formula;
        path.push_back(0);
        ClassicalResult rl = run(c2, t.child(0), Polarity::Pos, b);
        path.pop_back();
        if (!rl.ok) return rl;
        path.push_back(1);
        ClassicalResult rr = run(c2, t.child(1), Polarity::Neg, b);
        path.pop_back();
        return rr;
      }
    }
    return fail("unhandled term");
  }

  ClassicalResult both(const ClassicalContext& ctx, const Term& t, Polarity p0,
                       const Formula& a0, Polarity p1, const Formula& a1) {
    path.push_back(0);
    ClassicalResult r0 = run(ctx, t.child(0), p0, a0);
    path.pop_back();
    if (!r0.ok) return r0;
    path.push_back(1);
    ClassicalResult r1 = run(ctx, t.child(1), p1, a1);
    path.pop_back();
    return r1;
  }
};

}  // namespace

ClassicalResult classical_check(const ClassicalContext& ctx, const Term& t,
                                Polarity pol, const Formula& a) {
  ClassicalChecker c;
  return c.run(ctx, t, pol, a);
}

// ---------------------------------------------------------------------------
// Case eliminator

Term elaborate_case(const Term& scrutinee, const std::string& x, const Term& t1,
                    const Term& t2, Polarity pol, const Formula& a,
                    const Formula& b, const Formula& c, const NodeId& n) {
  std::set<std::string> used = free_vars(scrutinee);
  for (const auto& v : free_vars(t1)) used.insert(v);
  for (const auto& v : free_vars(t2)) used.insert(v);
  used.insert(x);
  std::string z0 = fresh_name("z", used);
  used.insert(z0);
  std::string z1 = fresh_name("z", used);
  used.insert(z1);
  std::string z2 = fresh_name("z", used);

  Term inner = Term::cut(z2, scrutinee, CutAnnot{Formula::conj(flip(pol), a, b), n},
                         Term::pair(Term::var(z1), Term::var(z2)));
  Term right_branch = Term::cut(x, t2, CutAnnot{c, n}, Term::var(z0));
  Term mid = Term::cut(z1, inner, CutAnnot{b, n}, right_branch);
  Term left_branch = Term::cut(x, t1, CutAnnot{c, n}, Term::var(z0));
  return Term::cut(z0, mid, CutAnnot{a, n}, left_branch);
}

}  // namespace dtt
