#ifndef LFID_SHORTEST_PATHS_HPP
#define LFID_SHORTEST_PATHS_HPP

#include <optional>
#include <vector>

#include "lfid/topology.hpp"
#include "lfid/types.hpp"

namespace lfid {

// Shortest-path costs from one source. Absent cost = unreachable.
struct CostTable {
  NodeId source = -1;
  std::vector<std::optional<Cost>> cost;

  const std::optional<Cost>& at(NodeId x) const {
    return cost[static_cast<std::size_t>(x)];
  }
};

struct SimplePath {
  std::vector<NodeId> nodes;  // pairwise distinct, consecutive adjacent
  Cost cost = 0;

  friend bool operator==(const SimplePath&, const SimplePath&) = default;
};

// Directed weighted arc set over the topology's node universe. Used both for
// the undirected base graph (every link in both directions) and for
// per-destination FIB digraphs.
struct WeightedDigraph {
  struct Arc {
    NodeId to = -1;
    Cost weight = 0;
  };
  std::vector<std::vector<Arc>> out;

  int node_count() const { return static_cast<int>(out.size()); }
  void add_arc(NodeId from, NodeId to, Cost weight) {
    out[static_cast<std::size_t>(from)].push_back({to, weight});
  }
};

// Both directions of every topology link.
WeightedDigraph undirected_digraph(const Topology& topo);

CostTable dijkstra(const Topology& topo, NodeId source);

// Dijkstra on the excluded-node graph: for each neighbor n_i of x, costs
// from n_i with node x (and all its links) removed. Result indexed like
// topo.neighbors(x). Destinations reachable only through x come out absent.
std::vector<CostTable> neighbor_costs_excluding(const Topology& topo, NodeId x);

// Canonical shortest path used for failure placement: Dijkstra with
// (cost, node id) tie-breaking on predecessors. Absent if unreachable.
std::optional<SimplePath> canonical_shortest_path(const Topology& topo,
                                                  NodeId src, NodeId dst);

// Directed-graph variants used by forwarding experiments.
CostTable dijkstra_digraph(const WeightedDigraph& g, NodeId source);
std::optional<SimplePath> cheapest_path_digraph(const WeightedDigraph& g,
                                                NodeId src, NodeId dst);

// Yen's K-shortest simple paths, ascending by (cost, node sequence).
// Returns fewer than K paths when fewer exist; empty if dst is unreachable.
std::vector<SimplePath> yen_k_shortest(const WeightedDigraph& g, NodeId src,
                                       NodeId dst, int k);

}  // namespace lfid

#endif  // LFID_SHORTEST_PATHS_HPP
