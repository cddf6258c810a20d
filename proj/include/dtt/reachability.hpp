// SPDX-License-Identifier: Apache-2.0
//
// The reachability judgment over abstract Kripke graphs, its rule-closure
// oracle, and the raise transformation.

#ifndef DTT_REACHABILITY_HPP
#define DTT_REACHABILITY_HPP

#include <set>
#include <tuple>

#include "dtt/syntax.hpp"

namespace dtt {

struct ReachQuery {
  Graph graph;
  NodeId from;
  Polarity pol;
  NodeId to;
};

// Decides the judgment by graph search: orient (a <=[+] b) as a->b and
// (a <=[-] b) as b->a, then a positive query is reachability in the
// reflexive-transitive closure and a negative query flips the endpoints.
bool reaches(const Graph& g, const NodeId& from, Polarity pol, const NodeId& to);
inline bool reaches(const ReachQuery& q) {
  return reaches(q.graph, q.from, q.pol, q.to);
}

// Naive fixpoint of the four closure rules (axiom, reflexivity, transitivity,
// flip) over the nodes of g plus `extra`; retained as a test oracle only.
std::set<std::tuple<NodeId, Polarity, NodeId>> closure_oracle(
    const Graph& g, const std::set<NodeId>& extra = {});

// Moves edges touching n1 forward to n2, left to right, single pass:
// sources n1 become n2, then targets n1 become n2, other edges unchanged.
Graph raise(const NodeId& n1, const NodeId& n2, const Graph& g);

}  // namespace dtt

#endif  // DTT_REACHABILITY_HPP
