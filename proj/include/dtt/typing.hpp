// SPDX-License-Identifier: Apache-2.0
//
// Syntax-directed checker for the polarized type-assignment rules, the
// world-free classical rules, world erasure, and the derived case
// eliminator.  Checking mode only: the cut annotation carries the data the
// conclusion does not determine.

#ifndef DTT_TYPING_HPP
#define DTT_TYPING_HPP

#include <optional>
#include <string>
#include <vector>

#include "dtt/syntax.hpp"

namespace dtt {

struct TypingGoal {
  Graph graph;
  Context ctx;  // entries carry variables
  Term term;
  Polarity pol;
  Formula formula;
  NodeId node;
};

inline TypingGoal goal_of(const Sequent& s, const Term& t) {
  return TypingGoal{s.graph, s.ctx, t, s.pol, s.formula, s.node};
}
inline Sequent sequent_of(const TypingGoal& g) {
  return Sequent{g.graph, g.ctx, g.pol, g.formula, g.node};
}

enum class TypingRule { Ax, Unit, And, AndBar, Imp, ImpBar, Cut };
const char* typing_rule_name(TypingRule r);

// Evidence object: rule per node, the instantiated goal, and the chosen
// witnesses.  Replaying the trace re-validates bit for bit.
struct TypingTrace {
  TypingRule rule;
  TypingGoal goal;
  std::optional<int> ctx_index;      // Ax
  std::optional<NodeId> fresh;       // Imp: allocated node
  std::optional<NodeId> witness;     // ImpBar: chosen node
  std::optional<std::string> binder; // Imp/Cut: binder actually used
  std::vector<TypingTrace> children;
};

struct TypeError {
  std::string message;
  std::vector<int> path;  // into the term
  std::string where() const;
};

struct CheckResult {
  std::optional<TypingTrace> trace;
  std::optional<TypeError> error;
  bool ok() const { return trace.has_value(); }
};

CheckResult check(const TypingGoal& goal);

// Re-validates a trace against the rule definitions using the recorded
// witnesses instead of search.
bool replay(const TypingTrace& trace);

// ---------------------------------------------------------------------------
// Classical (world-free) typing

struct ClassicalEntry {
  std::string var;
  Polarity pol;
  Formula formula;
};

struct ClassicalContext {
  std::vector<ClassicalEntry> entries;
};

ClassicalContext erase_worlds(const Context& ctx);

struct ClassicalResult {
  bool ok;
  std::optional<TypeError> error;
};

ClassicalResult classical_check(const ClassicalContext& ctx, const Term& t,
                                Polarity pol, const Formula& a);

// ---------------------------------------------------------------------------
// Derived disjunction eliminator

// Produces the five-cut encoding
//   nu z0.(nu z1.(nu z2. t * (z1,z2)) * (nu x. t2 * z0)) * (nu x. t1 * z0)
// with fresh z0,z1,z2 and annotations read off the derived rule.
Term elaborate_case(const Term& scrutinee, const std::string& x, const Term& t1,
                    const Term& t2, Polarity pol, const Formula& a,
                    const Formula& b, const Formula& c, const NodeId& n);

}  // namespace dtt

#endif  // DTT_TYPING_HPP
