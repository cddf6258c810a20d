// SPDX-License-Identifier: Apache-2.0
//
// Explicit derivations for the polarized sequent calculus: a pure verifier
// (general-cut and axiom-cut modes), bounded backward proof search, and the
// three admissibility transformers (weakening, exchange, left-to-right).

#ifndef DTT_DIL_HPP
#define DTT_DIL_HPP

#include <optional>
#include <string>
#include <vector>

#include "dtt/syntax.hpp"

namespace dtt {

enum class DilRule { Ax, Unit, And, AndBar, Imp, ImpBar, Cut, AxCut, AxCutBar };
enum class DilMode { GeneralCut, AxiomCut };

const char* dil_rule_name(DilRule r);
std::optional<DilRule> dil_rule_from_name(const std::string& s);

// Witnesses are stored in the derivation rather than re-searched during
// checking: ax and axCut/axCutBar record context indices (the latter into
// the premise context, i.e. the conclusion context extended with the dual
// hypothesis), imp records its fresh node, impBar its reachable node, and
// every cut form records the cut formula and node.
struct DilWitness {
  std::optional<int> index;
  std::optional<int> d;  // andBar component, 1 or 2
  std::optional<NodeId> fresh;
  std::optional<NodeId> node;
  std::optional<Formula> cut_formula;
  std::optional<NodeId> cut_node;
};

struct DilDerivation {
  DilRule rule;
  Sequent conclusion;
  DilWitness witness;
  std::vector<DilDerivation> children;
};

struct DilCheckError {
  std::string message;
  std::vector<int> path;
  std::string where() const;
};

// Validates every node against its rule.  Children must match the
// instantiated premises exactly; exchange is never implicit.  Axiom-cut mode
// rejects the general cut rule; both restricted cut rules are accepted in
// either mode.
std::optional<DilCheckError> check_dil(const DilDerivation& d, DilMode mode);

// Complete backward search up to `depth` rule applications per branch, in
// axiom-cut mode, with a loop check on repeated sequents.  The result
// replays through check_dil.
std::optional<DilDerivation> prove_dil(const Sequent& seq, int depth);

// Derivation of the sequent with `hyp` appended to the context; structure
// preserving.  Clashing imp-fresh nodes in the tree are renamed first.
DilDerivation weaken(const DilDerivation& d, const ContextEntry& hyp);

// Derivation of the permuted sequent: new_ctx[j] = old_ctx[perm[j]].
DilDerivation exchange(const DilDerivation& d, const std::vector<int>& perm);

// From a derivation of   G ; Gamma1, ~p A@n, Gamma2 |- ~p' B@n'
// builds a derivation of G ; Gamma1, Gamma2, p' B@n' |- p A@n
// by one restricted cut over the weakened, exchanged input.
DilDerivation left_to_right(const DilDerivation& d, int hyp_index);

}  // namespace dtt

#endif  // DTT_DIL_HPP
