#include "lfid/forwarding.hpp"

#include <algorithm>

namespace lfid {

NexthopList viable_nexthops(const AllNodeFib& fib, const ForwardingState& state,
                            const FailureSet& failures) {
  NexthopList viable;
  for (const NexthopEntry& e : fib.at(state.current, state.destination)) {
    if (state.inport && e.neighbor == *state.inport) continue;
    if (failures.link_failed(state.current, e.neighbor)) continue;
    if (failures.node_failed(e.neighbor)) continue;
    viable.push_back(e);
  }
  return viable;
}

namespace {

struct WalkSearch {
  const AllNodeFib& fib;
  NodeId destination;
  std::vector<char> on_walk;
  std::vector<NodeId> walk;

  // Returns true once a revisiting walk is found; `walk` then holds it,
  // including the repeated node at the end.
  bool dfs(NodeId current, std::optional<NodeId> inport) {
    if (current == destination) return false;  // delivered
    for (const NexthopEntry& e : fib.at(current, destination)) {
      if (inport && e.neighbor == *inport) continue;
      walk.push_back(e.neighbor);
      if (on_walk[static_cast<std::size_t>(e.neighbor)]) return true;
      on_walk[static_cast<std::size_t>(e.neighbor)] = 1;
      if (dfs(e.neighbor, current)) return true;
      on_walk[static_cast<std::size_t>(e.neighbor)] = 0;
      walk.pop_back();
    }
    return false;
  }
};

}  // namespace

WalkVerdict enumerate_all_walks(const AllNodeFib& fib, NodeId destination) {
  WalkVerdict verdict;
  const int n = fib.node_count();
  for (NodeId start = 0; start < n; ++start) {
    if (start == destination) continue;
    WalkSearch search{fib, destination,
                      std::vector<char>(static_cast<std::size_t>(n), 0),
                      {start}};
    search.on_walk[static_cast<std::size_t>(start)] = 1;
    if (search.dfs(start, std::nullopt)) {
      verdict.loop_free = false;
      verdict.counterexample = std::move(search.walk);
      return verdict;
    }
  }
  return verdict;
}

WeightedDigraph filtered_digraph(const WeightedDigraph& base,
                                 const FailureSet& failures) {
  WeightedDigraph g;
  g.out.resize(base.out.size());
  for (NodeId u = 0; u < base.node_count(); ++u) {
    if (failures.node_failed(u)) continue;
    for (const auto& arc : base.out[static_cast<std::size_t>(u)]) {
      if (failures.node_failed(arc.to)) continue;
      if (failures.link_failed(u, arc.to)) continue;
      g.add_arc(u, arc.to, arc.weight);
    }
  }
  return g;
}

bool recovery_exists(const AllNodeFib& fib, NodeId dst, NodeId from,
                     const FailureSet& failures) {
  if (from == dst) return true;
  const int n = fib.node_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> stack{from};
  seen[static_cast<std::size_t>(from)] = 1;
  if (failures.node_failed(from)) return false;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (const NexthopEntry& e : fib.at(u, dst)) {
      if (failures.link_failed(u, e.neighbor)) continue;
      if (failures.node_failed(e.neighbor)) continue;
      if (e.neighbor == dst) return true;
      if (!seen[static_cast<std::size_t>(e.neighbor)]) {
        seen[static_cast<std::size_t>(e.neighbor)] = 1;
        stack.push_back(e.neighbor);
      }
    }
  }
  return false;
}

std::optional<SimplePath> cheapest_recovery_path(const AllNodeFib& fib,
                                                 const Topology& topo,
                                                 NodeId dst, NodeId from,
                                                 const FailureSet& failures) {
  const WeightedDigraph g =
      filtered_digraph(weighted_fib_digraph(fib, topo, dst), failures);
  return cheapest_path_digraph(g, from, dst);
}

std::optional<SimplePath> greedy_forward(const AllNodeFib& fib,
                                         const Topology& topo, NodeId src,
                                         NodeId dst,
                                         const FailureSet& failures) {
  SimplePath path;
  path.nodes.push_back(src);
  std::vector<char> seen(static_cast<std::size_t>(fib.node_count()), 0);
  seen[static_cast<std::size_t>(src)] = 1;
  ForwardingState state{src, std::nullopt, dst, {src}};
  while (state.current != dst) {
    const NexthopList viable = viable_nexthops(fib, state, failures);
    if (viable.empty()) return std::nullopt;  // stuck
    const NodeId next = viable.front().neighbor;
    if (seen[static_cast<std::size_t>(next)]) return std::nullopt;
    seen[static_cast<std::size_t>(next)] = 1;
    path.cost += topo.link_weight(state.current, next);
    path.nodes.push_back(next);
    state.inport = state.current;
    state.current = next;
  }
  return path;
}

}  // namespace lfid
