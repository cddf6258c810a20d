// SPDX-License-Identifier: Apache-2.0
//
// Finite Kripke models: interpretation of formulas, graphs, contexts and
// sequents, enumeration of all small models, and validity / countermodel
// search over the enumeration.

#ifndef DTT_KRIPKE_HPP
#define DTT_KRIPKE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtt/lcalc.hpp"
#include "dtt/syntax.hpp"

namespace dtt {

// Worlds are indices 0..num_worlds-1.  R must be a preorder and V monotone;
// both are validated at construction.
class KripkeModel {
 public:
  KripkeModel(int num_worlds, std::vector<std::vector<bool>> r,
              std::map<std::string, std::vector<bool>> v);

  int num_worlds() const { return num_worlds_; }
  bool rel(int w1, int w2) const { return r_[w1][w2]; }
  bool val(int w, const std::string& atom) const;
  bool has_atom(const std::string& atom) const { return v_.count(atom) != 0; }
  const std::map<std::string, std::vector<bool>>& valuation() const { return v_; }

 private:
  int num_worlds_;
  std::vector<std::vector<bool>> r_;
  std::map<std::string, std::vector<bool>> v_;
};

struct UnknownAtom : std::runtime_error {
  explicit UnknownAtom(const std::string& a)
      : std::runtime_error("unknown atom: " + a) {}
};

// Mapping from abstract nodes to worlds; total on the queried node set.
struct NodeInterpreter {
  std::map<NodeId, int> mapping;
  int world(const NodeId& n) const { return mapping.at(n); }
};

bool interp_formula(const KripkeModel& m, int w, const Formula& a);
bool interp_lformula(const KripkeModel& m, int w, const LFormula& a);
bool interp_graph(const KripkeModel& m, const NodeInterpreter& n, const Graph& g);
bool interp_context(const KripkeModel& m, const NodeInterpreter& n, const Context& c);
bool signed_interp(const KripkeModel& m, int w, Polarity p, const Formula& a);
bool sequent_holds(const KripkeModel& m, const NodeInterpreter& n, const Sequent& s);

// An L-sequent counter-model: all graph edges realized, all left formulas
// true, all right formulas false.
bool l_sequent_countermodel(const KripkeModel& m, const NodeInterpreter& n,
                            const LSequent& s);

// All preorders on 1..max_worlds worlds crossed with all monotone
// (upward-closed) valuations over the atom alphabet.  Raw enumeration, no
// isomorphism reduction; max_worlds is capped at 4.
std::vector<KripkeModel> enumerate_models(int max_worlds,
                                          const std::vector<std::string>& atoms);

// All node-to-world functions for a fixed model, lexicographic order.
std::vector<NodeInterpreter> enumerate_interpreters(const std::vector<NodeId>& nodes,
                                                    const KripkeModel& m);

struct Countermodel {
  KripkeModel model;
  NodeInterpreter interp;
  std::vector<std::string> goal_trace;  // recursive evaluation of the signed goal
};

struct Verdict {
  bool valid;
  std::optional<Countermodel> countermodel;
};

// Valid if the sequent holds in every enumerated (model, interpreter) pair;
// otherwise the first countermodel in enumeration order.  Interpreters range
// over all nodes occurring anywhere in the sequent.  `jobs` > 1 evaluates
// model chunks in parallel with a deterministic merge.
Verdict validate(const Sequent& seq, int max_worlds,
                 const std::vector<std::string>& atoms, int jobs = 1);

// Machine-parseable countermodel report: world list, R pairs, V pairs,
// interpreter pairs, one item per line; optionally followed by the
// evaluation trace of the failing goal for hand auditing.
std::string countermodel_report(const Countermodel& cm, bool with_trace = true);

}  // namespace dtt

#endif  // DTT_KRIPKE_HPP
