// SPDX-License-Identifier: Apache-2.0
//
// The rewrite system on terms: one-step enumeration (congruence included),
// budgeted normalization under a chosen strategy, and confluence probes.

#ifndef DTT_REDUCTION_HPP
#define DTT_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtt/syntax.hpp"

namespace dtt {

enum class RuleName {
  RImp, RImpBar, RAnd1, RAnd2, RAndBar1, RAndBar2, RRet, RBetaL, RBetaR,
};

const char* rule_name(RuleName r);

struct Redex {
  std::vector<int> position;  // child indices from the root
  RuleName rule;
  Term result;  // the whole term after contracting at `position`
};

std::string position_text(const std::vector<int>& pos);

// All one-step successors in leftmost-outermost enumeration order: at each
// node the rules are tried in declaration order, then children left to right.
std::vector<Redex> step_all(const Term& t);

// Canonical iff the top constructor is not a cut; normal iff no rule applies
// anywhere.
bool is_canonical(const Term& t);
bool is_normal(const Term& t);

struct Strategy {
  enum class Kind { LeftmostOutermost, Random };
  Kind kind = Kind::LeftmostOutermost;
  std::uint64_t seed = 0;
  static Strategy lo() { return Strategy{}; }
  static Strategy random(std::uint64_t seed) {
    return Strategy{Kind::Random, seed};
  }
};

struct NormalizeResult {
  Term term;                 // normal form, or the last term when out of budget
  std::vector<Redex> trace;  // contracted redexes in order
  bool budget_exceeded = false;
  std::size_t steps() const { return trace.size(); }
};

NormalizeResult normalize(const Term& t, std::size_t max_steps,
                          const Strategy& strategy = Strategy::lo());

struct ConfluenceVerdict {
  enum class Kind { Confluent, Diverged, BudgetExceeded };
  Kind kind;
  std::optional<Term> normal_form;  // Confluent
  std::vector<Term> forms;          // Diverged: the distinct normal forms seen
};

// Runs `samples` random-strategy normalizations plus one leftmost-outermost
// and compares the results up to alpha-equivalence.
ConfluenceVerdict confluence_probe(const Term& t, int samples, std::uint64_t seed,
                                   std::size_t max_steps);

}  // namespace dtt

#endif  // DTT_REDUCTION_HPP
