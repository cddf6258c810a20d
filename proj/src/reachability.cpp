// SPDX-License-Identifier: Apache-2.0

#include "dtt/reachability.hpp"

#include <map>
#include <vector>

namespace dtt {

bool reaches(const Graph& g, const NodeId& from, Polarity pol, const NodeId& to) {
  // rel_flip reduces negative queries to positive ones with swapped ends.
  const NodeId& src = pol == Polarity::Pos ? from : to;
  const NodeId& dst = pol == Polarity::Pos ? to : from;
  if (src == dst) return true;  // rel_refl

  std::multimap<NodeId, NodeId> succ;
  for (const auto& e : g.edges) {
    if (e.pol == Polarity::Pos)
      succ.insert({e.from, e.to});
    else
      succ.insert({e.to, e.from});
  }
  std::set<NodeId> seen{src};
  std::vector<NodeId> work{src};
  while (!work.empty()) {
    NodeId n = work.back();
    work.pop_back();
    auto [lo, hi] = succ.equal_range(n);
    for (auto it = lo; it != hi; ++it) {
      if (it->second == dst) return true;
      if (seen.insert(it->second).second) work.push_back(it->second);
    }
  }
  return false;
}

std::set<std::tuple<NodeId, Polarity, NodeId>> closure_oracle(
    const Graph& g, const std::set<NodeId>& extra) {
  using Fact = std::tuple<NodeId, Polarity, NodeId>;
  std::set<NodeId> nodes = nodes_of(g);
  nodes.insert(extra.begin(), extra.end());

  std::set<Fact> facts;
  for (const auto& e : g.edges) facts.insert({e.from, e.pol, e.to});  // rel_ax
  for (const auto& n : nodes) {                                       // rel_refl
    facts.insert({n, Polarity::Pos, n});
    facts.insert({n, Polarity::Neg, n});
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<Fact> next = facts;
    for (const auto& [a, p, b] : facts) {
      if (next.insert({b, flip(p), a}).second) changed = true;  // rel_flip
      for (const auto& [c, q, d] : facts)                       // rel_trans
        if (q == p && c == b && next.insert({a, p, d}).second) changed = true;
    }
    facts.swap(next);
  }
  return facts;
}

Graph raise(const NodeId& n1, const NodeId& n2, const Graph& g) {
  Graph out;
  out.edges.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    if (e.from == n1)
      out.edges.push_back({n2, e.pol, e.to});  // source rewrite wins
    else if (e.to == n1)
      out.edges.push_back({e.from, e.pol, n2});
    else
      out.edges.push_back(e);
  }
  return out;
}

}  // namespace dtt
