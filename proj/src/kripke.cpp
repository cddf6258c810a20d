// SPDX-License-Identifier: Apache-2.0

#include "dtt/kripke.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "dtt/text.hpp"

namespace dtt {

KripkeModel::KripkeModel(int num_worlds, std::vector<std::vector<bool>> r,
                         std::map<std::string, std::vector<bool>> v)
    : num_worlds_(num_worlds), r_(std::move(r)), v_(std::move(v)) {
  if (num_worlds_ < 1) throw std::invalid_argument("model needs at least one world");
  for (int w = 0; w < num_worlds_; ++w)
    if (!r_[w][w]) throw std::invalid_argument("R must be reflexive");
  for (int a = 0; a < num_worlds_; ++a)
    for (int b = 0; b < num_worlds_; ++b)
      for (int c = 0; c < num_worlds_; ++c)
        if (r_[a][b] && r_[b][c] && !r_[a][c])
          throw std::invalid_argument("R must be transitive");
  for (const auto& [atom, vals] : v_)
    for (int a = 0; a < num_worlds_; ++a)
      for (int b = 0; b < num_worlds_; ++b)
        if (r_[a][b] && vals[a] && !vals[b])
          throw std::invalid_argument("V must be monotone");
}

bool KripkeModel::val(int w, const std::string& atom) const {
  auto it = v_.find(atom);
  if (it == v_.end()) throw UnknownAtom(atom);
  return it->second[w];
}

bool interp_formula(const KripkeModel& m, int w, const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Unit:
      return a.pol() == Polarity::Pos;
    case Formula::Kind::Atom:
      return m.val(w, a.atom_name());
    case Formula::Kind::And:
      if (a.pol() == Polarity::Pos)
        return interp_formula(m, w, a.lhs()) && interp_formula(m, w, a.rhs());
      return interp_formula(m, w, a.lhs()) || interp_formula(m, w, a.rhs());
    case Formula::Kind::Imp:
      if (a.pol() == Polarity::Pos) {
        for (int w2 = 0; w2 < m.num_worlds(); ++w2)
          if (m.rel(w, w2) && interp_formula(m, w2, a.lhs()) &&
              !interp_formula(m, w2, a.rhs()))
            return false;
        return true;
      }
      for (int w2 = 0; w2 < m.num_worlds(); ++w2)
        if (m.rel(w2, w) && !interp_formula(m, w2, a.lhs()) &&
            interp_formula(m, w2, a.rhs()))
          return true;
      return false;
  }
  return false;
}

bool interp_lformula(const KripkeModel& m, int w, const LFormula& a) {
  switch (a.kind()) {
    case LFormula::Kind::Top:
      return true;
    case LFormula::Kind::Bot:
      return false;
    case LFormula::Kind::Atom:
      return m.val(w, a.atom_name());
    case LFormula::Kind::And:
      return interp_lformula(m, w, a.lhs()) && interp_lformula(m, w, a.rhs());
    case LFormula::Kind::Or:
      return interp_lformula(m, w, a.lhs()) || interp_lformula(m, w, a.rhs());
    case LFormula::Kind::Imp:
      for (int w2 = 0; w2 < m.num_worlds(); ++w2)
        if (m.rel(w, w2) && interp_lformula(m, w2, a.lhs()) &&
            !interp_lformula(m, w2, a.rhs()))
          return false;
      return true;
    case LFormula::Kind::Sub:
      // A -< B: somewhere in the past, A holds and B fails.
      for (int w2 = 0; w2 < m.num_worlds(); ++w2)
        if (m.rel(w2, w) && interp_lformula(m, w2, a.lhs()) &&
            !interp_lformula(m, w2, a.rhs()))
          return true;
      return false;
  }
  return false;
}

bool interp_graph(const KripkeModel& m, const NodeInterpreter& n, const Graph& g) {
  for (const auto& e : g.edges) {
    int a = n.world(e.from), b = n.world(e.to);
    if (e.pol == Polarity::Pos ? !m.rel(a, b) : !m.rel(b, a)) return false;
  }
  return true;
}

bool signed_interp(const KripkeModel& m, int w, Polarity p, const Formula& a) {
  bool v = interp_formula(m, w, a);
  return p == Polarity::Pos ? v : !v;
}

bool interp_context(const KripkeModel& m, const NodeInterpreter& n, const Context& c) {
  for (const auto& e : c.entries)
    if (!signed_interp(m, n.world(e.node), e.pol, e.formula)) return false;
  return true;
}

bool sequent_holds(const KripkeModel& m, const NodeInterpreter& n, const Sequent& s) {
  if (!interp_graph(m, n, s.graph) || !interp_context(m, n, s.ctx)) return true;
  return signed_interp(m, n.world(s.node), s.pol, s.formula);
}

bool l_sequent_countermodel(const KripkeModel& m, const NodeInterpreter& n,
                            const LSequent& s) {
  for (const auto& e : s.graph.edges)
    if (!m.rel(n.world(e.from), n.world(e.to))) return false;
  for (const auto& e : s.left)
    if (!interp_lformula(m, n.world(e.node), e.formula)) return false;
  for (const auto& e : s.right)
    if (interp_lformula(m, n.world(e.node), e.formula)) return false;
  return true;
}

namespace {

// Upward-closed subsets of worlds under R, in ascending bitmask order.
std::vector<std::vector<bool>> upsets(int w, const std::vector<std::vector<bool>>& r) {
  std::vector<std::vector<bool>> out;
  for (unsigned mask = 0; mask < (1u << w); ++mask) {
    std::vector<bool> set(w);
    for (int i = 0; i < w; ++i) set[i] = (mask >> i) & 1;
    bool closed = true;
    for (int a = 0; a < w && closed; ++a)
      for (int b = 0; b < w && closed; ++b)
        if (r[a][b] && set[a] && !set[b]) closed = false;
    if (closed) out.push_back(std::move(set));
  }
  return out;
}

}  // namespace

std::vector<KripkeModel> enumerate_models(int max_worlds,
                                          const std::vector<std::string>& atoms) {
  if (max_worlds < 1) throw std::invalid_argument("max_worlds must be >= 1");
  if (max_worlds > 4) throw std::invalid_argument("world cap is 4");
  std::vector<KripkeModel> out;
  for (int w = 1; w <= max_worlds; ++w) {
    // All reflexive-transitive relations: enumerate the off-diagonal bits.
    std::vector<std::pair<int, int>> off;
    for (int a = 0; a < w; ++a)
      for (int b = 0; b < w; ++b)
        if (a != b) off.push_back({a, b});
    for (unsigned mask = 0; mask < (1u << off.size()); ++mask) {
      std::vector<std::vector<bool>> r(w, std::vector<bool>(w, false));
      for (int a = 0; a < w; ++a) r[a][a] = true;
      for (std::size_t i = 0; i < off.size(); ++i)
        if ((mask >> i) & 1) r[off[i].first][off[i].second] = true;
      bool trans = true;
      for (int a = 0; a < w && trans; ++a)
        for (int b = 0; b < w && trans; ++b)
          for (int c = 0; c < w && trans; ++c)
            if (r[a][b] && r[b][c] && !r[a][c]) trans = false;
      if (!trans) continue;
      // Monotone valuations: one upward-closed set per atom.
      std::vector<std::vector<bool>> ups = upsets(w, r);
      std::vector<std::size_t> pick(atoms.size(), 0);
      while (true) {
        std::map<std::string, std::vector<bool>> v;
        for (std::size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = ups[pick[i]];
        out.push_back(KripkeModel(w, r, std::move(v)));
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (++pick[i] < ups.size()) break;
          pick[i] = 0;
        }
        if (i == pick.size()) break;
      }
    }
  }
  return out;
}

std::vector<NodeInterpreter> enumerate_interpreters(const std::vector<NodeId>& nodes,
                                                    const KripkeModel& m) {
  std::vector<NodeInterpreter> out;
  std::vector<int> pick(nodes.size(), 0);
  while (true) {
    NodeInterpreter n;
    for (std::size_t i = 0; i < nodes.size(); ++i) n.mapping[nodes[i]] = pick[i];
    out.push_back(std::move(n));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < m.num_worlds()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return out;
}

namespace {

void trace_eval(const KripkeModel& m, int w, const Formula& a, int depth,
                std::vector<std::string>& out) {
  std::string line(std::size_t(depth) * 2, ' ');
  bool v = interp_formula(m, w, a);
  line += to_text(a) + " @ w" + std::to_string(w) + " = " + (v ? "true" : "false");
  out.push_back(line);
  switch (a.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Unit:
      return;
    case Formula::Kind::And:
      trace_eval(m, w, a.lhs(), depth + 1, out);
      trace_eval(m, w, a.rhs(), depth + 1, out);
      return;
    case Formula::Kind::Imp:
      // show both components at every related world
      for (int w2 = 0; w2 < m.num_worlds(); ++w2) {
        bool rel = a.pol() == Polarity::Pos ? m.rel(w, w2) : m.rel(w2, w);
        if (!rel) continue;
        trace_eval(m, w2, a.lhs(), depth + 1, out);
        trace_eval(m, w2, a.rhs(), depth + 1, out);
      }
      return;
  }
}

// Nodes in first-occurrence order: graph edges, then context, then goal.
std::vector<NodeId> sequent_nodes_ordered(const Sequent& s) {
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

}  // namespace

Verdict validate(const Sequent& seq, int max_worlds,
                 const std::vector<std::string>& atoms, int jobs) {
  std::set<std::string> alphabet(atoms.begin(), atoms.end());
  seq.formula.collect_atoms(alphabet);
  for (const auto& e : seq.ctx.entries) e.formula.collect_atoms(alphabet);
  std::vector<std::string> all_atoms(alphabet.begin(), alphabet.end());

  std::vector<KripkeModel> models = enumerate_models(max_worlds, all_atoms);
  std::vector<NodeId> nodes = sequent_nodes_ordered(seq);

  // index of the first failing interpreter for one model, or nullopt
  auto first_failure = [&](const KripkeModel& m) -> std::optional<NodeInterpreter> {
    for (auto& n : enumerate_interpreters(nodes, m))
      if (!sequent_holds(m, n, seq)) return n;
    return std::nullopt;
  };

  std::size_t hit = models.size();
  std::optional<NodeInterpreter> hit_interp;
  if (jobs <= 1) {
    for (std::size_t i = 0; i < models.size(); ++i) {
      if (auto n = first_failure(models[i])) {
        hit = i;
        hit_interp = n;
        break;
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{models.size()};
    std::vector<std::optional<NodeInterpreter>> results(models.size());
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= models.size() || i > best.load()) break;
        if (auto n = first_failure(models[i])) {
          results[i] = n;
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (best.load() < models.size()) {
      hit = best.load();
      hit_interp = results[hit];
    }
  }

  if (hit == models.size()) return Verdict{true, std::nullopt};
  Countermodel cm{models[hit], *hit_interp, {}};
  trace_eval(cm.model, cm.interp.world(seq.node), seq.formula, 0, cm.goal_trace);
  return Verdict{false, std::move(cm)};
}

std::string countermodel_report(const Countermodel& cm, bool with_trace) {
  std::string out;
  out += "worlds:";
  for (int w = 0; w < cm.model.num_worlds(); ++w) out += " w" + std::to_string(w);
  out += "\n";
  for (int a = 0; a < cm.model.num_worlds(); ++a)
    for (int b = 0; b < cm.model.num_worlds(); ++b)
      if (cm.model.rel(a, b))
        out += "R: w" + std::to_string(a) + " w" + std::to_string(b) + "\n";
  for (const auto& [atom, vals] : cm.model.valuation())
    for (int w = 0; w < cm.model.num_worlds(); ++w)
      if (vals[w]) out += "V: w" + std::to_string(w) + " " + atom + "\n";
  for (const auto& [node, w] : cm.interp.mapping)
    out += "N: " + node.name + " w" + std::to_string(w) + "\n";
  if (with_trace)
    for (const auto& line : cm.goal_trace) out += "eval: " + line + "\n";
  return out;
}

}  // namespace dtt
