// SPDX-License-Identifier: Apache-2.0

#include "dtt/reduction.hpp"

#include <random>

namespace dtt {

const char* rule_name(RuleName r) {
  switch (r) {
    case RuleName::RImp: return "RImp";
    case RuleName::RImpBar: return "RImpBar";
    case RuleName::RAnd1: return "RAnd1";
    case RuleName::RAnd2: return "RAnd2";
    case RuleName::RAndBar1: return "RAndBar1";
    case RuleName::RAndBar2: return "RAndBar2";
    case RuleName::RRet: return "RRet";
    case RuleName::RBetaL: return "RBetaL";
    case RuleName::RBetaR: return "RBetaR";
  }
  return "?";
}

std::string position_text(const std::vector<int>& pos) {
  if (pos.empty()) return ".";
  std::string out;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(pos[i]);
  }
  return out;
}

bool is_canonical(const Term& t) { return t.kind() != Term::Kind::Cut; }

namespace {

// Annotation for a contractum cut: the value rules consume one layer of the
// cut formula, so the recorded formula is projected alongside.  Terms whose
// annotation does not match the redex shape keep it unchanged (such terms
// are untypable anyway); the node is always kept.
CutAnnot project_imp(const CutAnnot& ann) {
  if (ann.formula.kind() == Formula::Kind::Imp)
    return CutAnnot{ann.formula.rhs(), ann.node};
  return ann;
}

CutAnnot project_and(const CutAnnot& ann, int d) {
  if (ann.formula.kind() == Formula::Kind::And)
    return CutAnnot{d == 1 ? ann.formula.lhs() : ann.formula.rhs(), ann.node};
  return ann;
}

// Top-level contractions of a cut, in rule order.
std::vector<std::pair<RuleName, Term>> top_steps(const Term& t) {
  std::vector<std::pair<RuleName, Term>> out;
  if (t.kind() != Term::Kind::Cut) return out;
  const std::string& x = t.binder();
  Term l = t.child(0), r = t.child(1);
  const CutAnnot& ann = t.annot();

  if (l.kind() == Term::Kind::Lam && r.kind() == Term::Kind::CoPair) {
    // nu x. (\y.t1) * <t2,t3>  ~>  nu x. [t2/y]t1 * t3
    Term t1 = subst_term(l.child(0), l.binder(), r.child(0));
    out.push_back({RuleName::RImp,
                   Term::cut(x, t1, project_imp(ann), r.child(1))});
  }
  if (l.kind() == Term::Kind::CoPair && r.kind() == Term::Kind::Lam) {
    // nu x. <t1,t2> * (\y.t3)  ~>  nu x. t2 * [t1/y]t3
    Term t3 = subst_term(r.child(0), r.binder(), l.child(0));
    out.push_back({RuleName::RImpBar,
                   Term::cut(x, l.child(1), project_imp(ann), t3)});
  }
  if (l.kind() == Term::Kind::In && r.kind() == Term::Kind::Pair) {
    // nu x. (in_d t) * (t1,t2)  ~>  nu x. t * t_d
    int d = l.index();
    out.push_back({d == 1 ? RuleName::RAnd1 : RuleName::RAnd2,
                   Term::cut(x, l.child(0), project_and(ann, d), r.child(d - 1))});
  }
  if (l.kind() == Term::Kind::Pair && r.kind() == Term::Kind::In) {
    // nu x. (t1,t2) * (in_d t)  ~>  nu x. t_d * t
    int d = r.index();
    out.push_back({d == 1 ? RuleName::RAndBar1 : RuleName::RAndBar2,
                   Term::cut(x, l.child(d - 1), project_and(ann, d), r.child(0))});
  }
  if (r.kind() == Term::Kind::Var && r.var_name() == x && !free_vars(l).count(x)) {
    out.push_back({RuleName::RRet, l});
  }
  if (l.kind() == Term::Kind::Cut && is_canonical(r)) {
    // nu x. (nu y. t1 * t2) * c  ~>  nu x. [c/y]t1 * [c/y]t2
    out.push_back({RuleName::RBetaL,
                   Term::cut(x, subst_term(l.child(0), l.binder(), r), l.annot(),
                             subst_term(l.child(1), l.binder(), r))});
  }
  if (is_canonical(l) && r.kind() == Term::Kind::Cut) {
    // nu x. c * (nu y. t1 * t2)  ~>  nu x. [c/y]t1 * [c/y]t2
    out.push_back({RuleName::RBetaR,
                   Term::cut(x, subst_term(r.child(0), r.binder(), l), r.annot(),
                             subst_term(r.child(1), r.binder(), l))});
  }
  return out;
}

Term plug(const Term& t, const std::vector<int>& pos, std::size_t i,
          const Term& replacement) {
  if (i == pos.size()) return replacement;
  int k = pos[i];
  Term sub = plug(t.child(k), pos, i + 1, replacement);
  switch (t.kind()) {
    case Term::Kind::Pair:
      return k == 0 ? Term::pair(sub, t.child(1)) : Term::pair(t.child(0), sub);
    case Term::Kind::CoPair:
      return k == 0 ? Term::copair(sub, t.child(1))
                    : Term::copair(t.child(0), sub);
    case Term::Kind::In:
      return Term::in(t.index(), sub);
    case Term::Kind::Lam:
      return Term::lam(t.binder(), sub);
    case Term::Kind::Cut:
      return k == 0 ? Term::cut(t.binder(), sub, t.annot(), t.child(1))
                    : Term::cut(t.binder(), t.child(0), t.annot(), sub);
    default:
      return replacement;  // unreachable for valid positions
  }
}

void collect(const Term& root, const Term& t, std::vector<int>& pos,
             std::vector<Redex>& out) {
  for (auto& [rule, contractum] : top_steps(t))
    out.push_back({pos, rule, plug(root, pos, 0, contractum)});
  for (int i = 0; i < t.arity(); ++i) {
    pos.push_back(i);
    collect(root, t.child(i), pos, out);
    pos.pop_back();
  }
}

}  // namespace

std::vector<Redex> step_all(const Term& t) {
  std::vector<Redex> out;
  std::vector<int> pos;
  collect(t, t, pos, out);
  return out;
}

bool is_normal(const Term& t) { return step_all(t).empty(); }

NormalizeResult normalize(const Term& t, std::size_t max_steps,
                          const Strategy& strategy) {
  NormalizeResult res{t, {}, false};
  std::mt19937_64 rng(strategy.seed);
  while (true) {
    std::vector<Redex> redexes = step_all(res.term);
    if (redexes.empty()) return res;
    if (res.trace.size() >= max_steps) {
      res.budget_exceeded = true;
      return res;
    }
    std::size_t pick = 0;
    if (strategy.kind == Strategy::Kind::Random)
      pick = std::size_t(rng() % redexes.size());
    res.term = redexes[pick].result;
    res.trace.push_back(std::move(redexes[pick]));
  }
}

ConfluenceVerdict confluence_probe(const Term& t, int samples, std::uint64_t seed,
                                   std::size_t max_steps) {
  std::vector<Term> forms;
  auto add_form = [&](const Term& nf) {
    for (const auto& f : forms)
      if (alpha_eq(f, nf)) return;
    forms.push_back(nf);
  };

  NormalizeResult lo = normalize(t, max_steps, Strategy::lo());
  if (lo.budget_exceeded)
    return ConfluenceVerdict{ConfluenceVerdict::Kind::BudgetExceeded, {}, {}};
  add_form(lo.term);

  for (int i = 0; i < samples; ++i) {
    NormalizeResult r = normalize(t, max_steps, Strategy::random(seed + i));
    if (r.budget_exceeded)
      return ConfluenceVerdict{ConfluenceVerdict::Kind::BudgetExceeded, {}, {}};
    add_form(r.term);
  }
  if (forms.size() == 1)
    return ConfluenceVerdict{ConfluenceVerdict::Kind::Confluent, forms[0], {}};
  return ConfluenceVerdict{ConfluenceVerdict::Kind::Diverged, {}, forms};
}

}  // namespace dtt
