// SPDX-License-Identifier: Apache-2.0

#include "dtt/dil.hpp"

#include <algorithm>
#include <stdexcept>

#include "dtt/reachability.hpp"
#include "dtt/text.hpp"

namespace dtt {

const char* dil_rule_name(DilRule r) {
  switch (r) {
    case DilRule::Ax: return "ax";
    case DilRule::Unit: return "unit";
    case DilRule::And: return "and";
    case DilRule::AndBar: return "andBar";
    case DilRule::Imp: return "imp";
    case DilRule::ImpBar: return "impBar";
    case DilRule::Cut: return "cut";
    case DilRule::AxCut: return "axCut";
    case DilRule::AxCutBar: return "axCutBar";
  }
  return "?";
}

std::optional<DilRule> dil_rule_from_name(const std::string& s) {
  static const std::pair<const char*, DilRule> table[] = {
      {"ax", DilRule::Ax},         {"unit", DilRule::Unit},
      {"and", DilRule::And},       {"andBar", DilRule::AndBar},
      {"imp", DilRule::Imp},       {"impBar", DilRule::ImpBar},
      {"cut", DilRule::Cut},       {"axCut", DilRule::AxCut},
      {"axCutBar", DilRule::AxCutBar},
  };
  for (auto& [name, rule] : table)
    if (s == name) return rule;
  return std::nullopt;
}

std::string DilCheckError::where() const {
  if (path.empty()) return "at the root";
  std::string out = "at path ";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

namespace {

// Context entries compare by polarity, formula and node; variable labels are
// immaterial to the logic.
bool entries_equal(const Context& a, const Context& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto& x = a.entries[i];
    const auto& y = b.entries[i];
    if (x.pol != y.pol || !(x.formula == y.formula) || !(x.node == y.node))
      return false;
  }
  return true;
}

bool sequents_equal(const Sequent& a, const Sequent& b) {
  return a.graph == b.graph && entries_equal(a.ctx, b.ctx) && a.pol == b.pol &&
         a.formula == b.formula && a.node == b.node;
}

struct DilChecker {
  DilMode mode;
  std::vector<int> path;

  std::optional<DilCheckError> fail(std::string msg) {
    return DilCheckError{std::move(msg), path};
  }

  std::optional<DilCheckError> check_children(
      const DilDerivation& d, const std::vector<Sequent>& premises) {
    if (d.children.size() != premises.size())
      return fail(std::string(dil_rule_name(d.rule)) + " expects " +
                  std::to_string(premises.size()) + " premises, has " +
                  std::to_string(d.children.size()));
    for (std::size_t i = 0; i < premises.size(); ++i) {
      if (!sequents_equal(d.children[i].conclusion, premises[i])) {
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

  std::optional<DilCheckError> run(const DilDerivation& d) {
    const Sequent& s = d.conclusion;
    switch (d.rule) {
      case DilRule::Ax: {
        if (!d.witness.index) return fail("ax needs a context index witness");
        int i = *d.witness.index;
        if (i < 0 || std::size_t(i) >= s.ctx.entries.size())
          return fail("ax index out of range");
        const auto& e = s.ctx.entries[i];
        if (e.pol != s.pol || e.formula != s.formula)
          return fail("ax entry does not match the goal formula/polarity");
        if (!reaches(s.graph, e.node, s.pol, s.node))
          return fail("ax entry node " + e.node.name + " does not reach " +
                      s.node.name);
        return check_children(d, {});
      }
      case DilRule::Unit: {
        if (s.formula.kind() != Formula::Kind::Unit || s.formula.pol() != s.pol)
          return fail("unit requires the goal <p> at polarity p");
        return check_children(d, {});
      }
      case DilRule::And: {
        if (s.formula.kind() != Formula::Kind::And || s.formula.pol() != s.pol)
          return fail("and requires a conjunction at the goal polarity");
        Sequent p1 = s, p2 = s;
        p1.formula = s.formula.lhs();
        p2.formula = s.formula.rhs();
        return check_children(d, {p1, p2});
      }
      case DilRule::AndBar: {
        if (s.formula.kind() != Formula::Kind::And ||
            s.formula.pol() != flip(s.pol))
          return fail("andBar requires a conjunction at the flipped polarity");
        if (!d.witness.d || (*d.witness.d != 1 && *d.witness.d != 2))
          return fail("andBar needs a component witness d in {1,2}");
        Sequent p = s;
        p.formula = *d.witness.d == 1 ? s.formula.lhs() : s.formula.rhs();
        return check_children(d, {p});
      }
      case DilRule::Imp: {
        if (s.formula.kind() != Formula::Kind::Imp || s.formula.pol() != s.pol)
          return fail("imp requires an implication at the goal polarity");
        if (!d.witness.fresh) return fail("imp needs a fresh-node witness");
        const NodeId& n2 = *d.witness.fresh;
        std::set<NodeId> used = nodes_of(s.graph);
        for (const auto& e : s.ctx.entries) used.insert(e.node);
        if (used.count(n2))
          return fail("imp fresh node " + n2.name +
                      " already occurs in the graph or context");
        Sequent p;
        p.graph = s.graph.append(Edge{s.node, s.pol, n2});
        p.ctx = s.ctx.append(ContextEntry{{}, s.pol, s.formula.lhs(), n2});
        p.pol = s.pol;
        p.formula = s.formula.rhs();
        p.node = n2;
        return check_children(d, {p});
      }
      case DilRule::ImpBar: {
        if (s.formula.kind() != Formula::Kind::Imp ||
            s.formula.pol() != flip(s.pol))
          return fail("impBar requires an implication at the flipped polarity");
        if (!d.witness.node) return fail("impBar needs a node witness");
        const NodeId& n2 = *d.witness.node;
        if (!reaches(s.graph, s.node, flip(s.pol), n2))
          return fail("impBar witness " + n2.name + " is not reachable from " +
                      s.node.name);
        Sequent p1 = s, p2 = s;
        p1.pol = flip(s.pol);
        p1.formula = s.formula.lhs();
        p1.node = n2;
        p2.formula = s.formula.rhs();
        p2.node = n2;
        return check_children(d, {p1, p2});
      }
      case DilRule::Cut: {
        if (mode == DilMode::AxiomCut)
          return fail("general cut is not permitted in axiom-cut mode");
        if (!d.witness.cut_formula || !d.witness.cut_node)
          return fail("cut needs a cut formula and node");
        Sequent p1, p2;
        p1.graph = p2.graph = s.graph;
        p1.ctx = p2.ctx =
            s.ctx.append(ContextEntry{{}, flip(s.pol), s.formula, s.node});
        p1.pol = Polarity::Pos;
        p2.pol = Polarity::Neg;
        p1.formula = p2.formula = *d.witness.cut_formula;
        p1.node = p2.node = *d.witness.cut_node;
        return check_children(d, {p1, p2});
      }
      case DilRule::AxCut:
      case DilRule::AxCutBar: {
        if (!d.witness.cut_formula || !d.witness.cut_node || !d.witness.index)
          return fail("restricted cut needs an index, formula and node");
        Context ext =
            s.ctx.append(ContextEntry{{}, flip(s.pol), s.formula, s.node});
        int i = *d.witness.index;
        if (i < 0 || std::size_t(i) >= ext.entries.size())
          return fail("restricted-cut index out of range");
        const auto& e = ext.entries[i];
        Polarity want = d.rule == DilRule::AxCut ? s.pol : flip(s.pol);
        if (e.pol != want)
          return fail(std::string(dil_rule_name(d.rule)) +
                      " entry polarity must be " + to_text(want));
        if (e.formula != *d.witness.cut_formula || !(e.node == *d.witness.cut_node))
          return fail("restricted-cut entry does not carry the recorded cut data");
        Sequent p;
        p.graph = s.graph;
        p.ctx = ext;
        p.pol = flip(e.pol);
        p.formula = e.formula;
        p.node = e.node;
        return check_children(d, {p});
      }
    }
    return fail("unknown rule");
  }
};

}  // namespace

std::optional<DilCheckError> check_dil(const DilDerivation& d, DilMode mode) {
  DilChecker c{mode, {}};
  return c.run(d);
}

// ---------------------------------------------------------------------------
// Bounded backward search (axiom-cut mode)

namespace {

std::string canonical_sequent(const Sequent& s) {
  std::vector<std::string> edges;
  for (const auto& e : s.graph.edges) edges.push_back(to_text(e));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::string> entries;
  for (const auto& e : s.ctx.entries) {
    std::string t = to_text(e.pol);
    t += ' ';
    t += to_text(e.formula);
    t += '@';
    t += e.node.name;
    entries.push_back(std::move(t));
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  std::string out;
  for (auto& e : edges) out += e + "|";
  out += ";";
  for (auto& e : entries) out += e + "|";
  out += "|-";
  out += to_text(s.pol);
  out += to_text(s.formula);
  out += "@";
  out += s.node.name;
  return out;
}

struct Prover {
  int node_budget;          // fresh nodes remaining
  long fresh_counter = 0;   // next %k suffix
  std::set<std::string> on_branch;

  NodeId alloc_fresh() { return NodeId{"n%" + std::to_string(fresh_counter++)}; }

  std::vector<NodeId> witness_candidates(const Sequent& s) const {
    std::vector<NodeId> out;
    auto add = [&](const NodeId& n) {
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    };
    for (const auto& e : s.graph.edges) {
      add(e.from);
      add(e.to);
    }
    for (const auto& e : s.ctx.entries) add(e.node);
    add(s.node);
    return out;
  }

  std::optional<DilDerivation> search(const Sequent& s, int depth) {
    if (depth <= 0) return std::nullopt;
    std::string key = canonical_sequent(s);
    if (on_branch.count(key)) return std::nullopt;
    on_branch.insert(key);
    auto out = dispatch(s, depth);
    on_branch.erase(key);
    return out;
  }

  std::optional<DilDerivation> dispatch(const Sequent& s, int depth) {
    // ax
    for (std::size_t i = 0; i < s.ctx.entries.size(); ++i) {
      const auto& e = s.ctx.entries[i];
      if (e.pol == s.pol && e.formula == s.formula &&
          reaches(s.graph, e.node, s.pol, s.node)) {
        DilWitness w;
        w.index = int(i);
        return DilDerivation{DilRule::Ax, s, w, {}};
      }
    }
    // unit
    if (s.formula.kind() == Formula::Kind::Unit && s.formula.pol() == s.pol)
      return DilDerivation{DilRule::Unit, s, {}, {}};
    // and
    if (s.formula.kind() == Formula::Kind::And && s.formula.pol() == s.pol) {
      Sequent p1 = s, p2 = s;
      p1.formula = s.formula.lhs();
      p2.formula = s.formula.rhs();
      if (auto d1 = search(p1, depth - 1))
        if (auto d2 = search(p2, depth - 1))
          return DilDerivation{DilRule::And, s, {}, {*d1, *d2}};
    }
    // andBar
    if (s.formula.kind() == Formula::Kind::And && s.formula.pol() == flip(s.pol)) {
      for (int comp = 1; comp <= 2; ++comp) {
        Sequent p = s;
        p.formula = comp == 1 ? s.formula.lhs() : s.formula.rhs();
        if (auto d1 = search(p, depth - 1)) {
          DilWitness w;
          w.d = comp;
          return DilDerivation{DilRule::AndBar, s, w, {*d1}};
        }
      }
    }
    // imp
    if (s.formula.kind() == Formula::Kind::Imp && s.formula.pol() == s.pol &&
        node_budget > 0) {
      NodeId n2 = alloc_fresh();
      --node_budget;
      Sequent p;
      p.graph = s.graph.append(Edge{s.node, s.pol, n2});
      p.ctx = s.ctx.append(ContextEntry{{}, s.pol, s.formula.lhs(), n2});
      p.pol = s.pol;
      p.formula = s.formula.rhs();
      p.node = n2;
      if (auto d1 = search(p, depth - 1)) {
        ++node_budget;
        DilWitness w;
        w.fresh = n2;
        return DilDerivation{DilRule::Imp, s, w, {*d1}};
      }
      ++node_budget;
      --fresh_counter;  // the name can be reused on other branches
    }
    // impBar
    if (s.formula.kind() == Formula::Kind::Imp && s.formula.pol() == flip(s.pol)) {
      for (const NodeId& cand : witness_candidates(s)) {
        if (!reaches(s.graph, s.node, flip(s.pol), cand)) continue;
        Sequent p1 = s, p2 = s;
        p1.pol = flip(s.pol);
        p1.formula = s.formula.lhs();
        p1.node = cand;
        p2.formula = s.formula.rhs();
        p2.node = cand;
        if (auto d1 = search(p1, depth - 1))
          if (auto d2 = search(p2, depth - 1)) {
            DilWitness w;
            w.node = cand;
            return DilDerivation{DilRule::ImpBar, s, w, {*d1, *d2}};
          }
      }
    }
    // restricted cuts over the extended context
    Context ext = s.ctx.append(ContextEntry{{}, flip(s.pol), s.formula, s.node});
    for (int pass = 0; pass < 2; ++pass) {
      DilRule rule = pass == 0 ? DilRule::AxCut : DilRule::AxCutBar;
      Polarity want = pass == 0 ? s.pol : flip(s.pol);
      for (std::size_t i = 0; i < ext.entries.size(); ++i) {
        const auto& e = ext.entries[i];
        if (e.pol != want) continue;
        Sequent p;
        p.graph = s.graph;
        p.ctx = ext;
        p.pol = flip(e.pol);
        p.formula = e.formula;
        p.node = e.node;
        if (auto d1 = search(p, depth - 1)) {
          DilWitness w;
          w.index = int(i);
          w.cut_formula = e.formula;
          w.cut_node = e.node;
          return DilDerivation{rule, s, w, {*d1}};
        }
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<DilDerivation> prove_dil(const Sequent& seq, int depth) {
  Prover p{depth};
  // Start the fresh supply above every %k suffix already in the sequent.
  std::set<std::string> names;
  for (const auto& n : nodes_of(seq)) names.insert(n.name);
  std::string probe = fresh_name("n", names);  // n%k with k above everything
  p.fresh_counter = std::stol(probe.substr(probe.rfind('%') + 1));
  return p.search(seq, depth);
}

// ---------------------------------------------------------------------------
// Transformers

namespace {

void collect_nodes(const DilDerivation& d, std::set<NodeId>& out) {
  for (const auto& n : nodes_of(d.conclusion)) out.insert(n);
  if (d.witness.fresh) out.insert(*d.witness.fresh);
  if (d.witness.node) out.insert(*d.witness.node);
  if (d.witness.cut_node) out.insert(*d.witness.cut_node);
  for (const auto& c : d.children) collect_nodes(c, out);
}

DilDerivation rename_node(const DilDerivation& d, const NodeId& from,
                          const NodeId& to) {
  DilDerivation out = d;
  out.conclusion.graph = subst_node(to, from, d.conclusion.graph);
  out.conclusion.ctx = subst_node(to, from, d.conclusion.ctx);
  out.conclusion.node = subst_node(to, from, d.conclusion.node);
  if (out.witness.fresh) out.witness.fresh = subst_node(to, from, *out.witness.fresh);
  if (out.witness.node) out.witness.node = subst_node(to, from, *out.witness.node);
  if (out.witness.cut_node)
    out.witness.cut_node = subst_node(to, from, *out.witness.cut_node);
  out.children.clear();
  for (const auto& c : d.children) out.children.push_back(rename_node(c, from, to));
  return out;
}

// Renames any imp-fresh node equal to `avoid` so that weakening by a
// hypothesis at `avoid` keeps every freshness side condition intact.
DilDerivation avoid_fresh_clashes(const DilDerivation& d, const NodeId& avoid) {
  DilDerivation out = d;
  if (out.rule == DilRule::Imp && out.witness.fresh && *out.witness.fresh == avoid) {
    std::set<NodeId> used;
    collect_nodes(out, used);
    used.insert(avoid);
    NodeId replacement = fresh_node(used);
    DilDerivation renamed_child = rename_node(out.children[0], avoid, replacement);
    out.witness.fresh = replacement;
    out.children[0] = renamed_child;
  }
  for (auto& c : out.children) c = avoid_fresh_clashes(c, avoid);
  return out;
}

DilDerivation weaken_at(const DilDerivation& d, const ContextEntry& hyp,
                        std::size_t pos) {
  DilDerivation out = d;
  out.conclusion.ctx.entries.insert(out.conclusion.ctx.entries.begin() + pos, hyp);
  if (out.witness.index && std::size_t(*out.witness.index) >= pos)
    out.witness.index = *out.witness.index + 1;
  out.children.clear();
  for (const auto& c : d.children) out.children.push_back(weaken_at(c, hyp, pos));
  return out;
}

}  // namespace

DilDerivation weaken(const DilDerivation& d, const ContextEntry& hyp) {
  DilDerivation safe = avoid_fresh_clashes(d, hyp.node);
  return weaken_at(safe, hyp, d.conclusion.ctx.entries.size());
}

namespace {

DilDerivation exchange_rec(const DilDerivation& d, const std::vector<int>& perm) {
  DilDerivation out = d;
  const auto& old_entries = d.conclusion.ctx.entries;
  if (perm.size() != old_entries.size())
    throw std::invalid_argument("exchange: permutation length mismatch");
  std::vector<ContextEntry> permuted;
  std::vector<int> inverse(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (perm[j] < 0 || std::size_t(perm[j]) >= old_entries.size())
      throw std::invalid_argument("exchange: bad permutation entry");
    permuted.push_back(old_entries[perm[j]]);
    inverse[perm[j]] = int(j);
  }
  out.conclusion.ctx.entries = std::move(permuted);
  if (out.witness.index) {
    int i = *out.witness.index;
    // indices beyond the permuted prefix (the appended hypothesis of a
    // restricted cut) keep their position
    out.witness.index = std::size_t(i) < perm.size() ? inverse[i] : i;
  }
  // Children extend the conclusion context by at most one appended entry.
  std::vector<int> child_perm = perm;
  bool extends = d.rule == DilRule::Imp || d.rule == DilRule::Cut ||
                 d.rule == DilRule::AxCut || d.rule == DilRule::AxCutBar;
  if (extends) child_perm.push_back(int(perm.size()));
  out.children.clear();
  for (const auto& c : d.children)
    out.children.push_back(exchange_rec(c, extends ? child_perm : perm));
  return out;
}

}  // namespace

DilDerivation exchange(const DilDerivation& d, const std::vector<int>& perm) {
  return exchange_rec(d, perm);
}

DilDerivation left_to_right(const DilDerivation& d, int hyp_index) {
  const Sequent& s = d.conclusion;
  if (hyp_index < 0 || std::size_t(hyp_index) >= s.ctx.entries.size())
    throw std::invalid_argument("left_to_right: hypothesis index out of range");
  const ContextEntry hyp = s.ctx.entries[hyp_index];

  // Goal of the result: the dual of the located hypothesis.
  Polarity goal_pol = flip(hyp.pol);
  Formula goal_formula = hyp.formula;
  NodeId goal_node = hyp.node;

  // New context hypothesis: the dual of the input's goal.
  ContextEntry switched{{}, flip(s.pol), s.formula, s.node};

  DilDerivation weakened = weaken(d, switched);
  std::size_t len = weakened.conclusion.ctx.entries.size();  // |Gamma3| + 1
  std::vector<int> perm;
  for (std::size_t j = 0; j < len; ++j)
    if (int(j) != hyp_index) perm.push_back(int(j));
  perm.push_back(hyp_index);  // dual hypothesis moves to the end
  DilDerivation premise = dtt::exchange(weakened, perm);

  Sequent conclusion;
  conclusion.graph = s.graph;
  conclusion.ctx.entries = premise.conclusion.ctx.entries;
  conclusion.ctx.entries.pop_back();  // drop the located hypothesis
  conclusion.pol = goal_pol;
  conclusion.formula = goal_formula;
  conclusion.node = goal_node;

  DilWitness w;
  w.index = int(conclusion.ctx.entries.size() - 1);  // the switched entry
  w.cut_formula = switched.formula;
  w.cut_node = switched.node;
  DilRule rule =
      switched.pol == conclusion.pol ? DilRule::AxCut : DilRule::AxCutBar;
  return DilDerivation{rule, conclusion, w, {premise}};
}

}  // namespace dtt
