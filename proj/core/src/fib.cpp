#include "lfid/fib.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

#include "lfid/parallel.hpp"

namespace lfid {

namespace {

bool entry_order(const NexthopEntry& a, const NexthopEntry& b) {
  return std::tie(a.cost, a.neighbor) < std::tie(b.cost, b.neighbor);
}

}  // namespace

void AllNodeFib::add(NodeId node, NodeId dst, NexthopEntry entry) {
  NexthopList& list = mutable_at(node, dst);
  list.insert(std::upper_bound(list.begin(), list.end(), entry, entry_order),
              entry);
}

bool AllNodeFib::remove(NodeId node, NodeId dst, NodeId neighbor) {
  NexthopList& list = mutable_at(node, dst);
  auto it = std::find_if(list.begin(), list.end(), [&](const NexthopEntry& e) {
    return e.neighbor == neighbor;
  });
  if (it == list.end()) return false;
  list.erase(it);
  return true;
}

const NexthopEntry* AllNodeFib::find(NodeId node, NodeId dst,
                                     NodeId neighbor) const {
  for (const NexthopEntry& e : at(node, dst)) {
    if (e.neighbor == neighbor) return &e;
  }
  return nullptr;
}

int AllNodeFib::entry_count() const {
  int count = 0;
  for (const auto& per_node : entries_) {
    for (const auto& cell : per_node) count += static_cast<int>(cell.size());
  }
  return count;
}

AllNodeFib fill_fib(const Topology& topo, const FibOptions& options) {
  const int n = topo.node_count();
  AllNodeFib fib(n);

  parallel_for(static_cast<std::size_t>(n), options.workers, [&](std::size_t xi) {
    const NodeId x = static_cast<NodeId>(xi);
    const CostTable sp_from_x = dijkstra(topo, x);
    const std::vector<CostTable> excised = neighbor_costs_excluding(topo, x);
    const auto& nbrs = topo.neighbors(x);
    std::vector<CostTable> full_graph;
    if (options.classify_full_graph) {
      full_graph.reserve(nbrs.size());
      for (const Neighbor& nb : nbrs) full_graph.push_back(dijkstra(topo, nb.id));
    }

    for (NodeId dst = 0; dst < n; ++dst) {
      if (dst == x) continue;
      const auto& sp_cost = sp_from_x.at(dst);
      if (!sp_cost) continue;  // other component
      for (std::size_t ni = 0; ni < nbrs.size(); ++ni) {
        const auto& neighbor_cost = excised[ni].at(dst);
        if (!neighbor_cost) continue;  // only reaches dst through x
        NexthopEntry entry;
        entry.neighbor = nbrs[ni].id;
        entry.cost = nbrs[ni].weight + *neighbor_cost;
        const Cost classify_cost = options.classify_full_graph
                                       ? *full_graph[ni].at(dst)
                                       : *neighbor_cost;
        entry.kind = classify_cost < *sp_cost ? NexthopKind::Downward
                                              : NexthopKind::Upward;
        fib.add(x, dst, entry);
      }
    }
  });
  return fib;
}

DestinationDigraph digraph_from_fib(const AllNodeFib& fib, NodeId dst) {
  DestinationDigraph g(fib.node_count(), dst);
  for (NodeId x = 0; x < fib.node_count(); ++x) {
    for (const NexthopEntry& e : fib.at(x, dst)) g.add_arc(x, e.neighbor);
  }
  return g;
}

WeightedDigraph weighted_fib_digraph(const AllNodeFib& fib,
                                     const Topology& topo, NodeId dst) {
  WeightedDigraph g;
  g.out.resize(static_cast<std::size_t>(fib.node_count()));
  for (NodeId x = 0; x < fib.node_count(); ++x) {
    for (const NexthopEntry& e : fib.at(x, dst)) {
      g.add_arc(x, e.neighbor, topo.link_weight(x, e.neighbor));
    }
  }
  return g;
}

void dump_fib_csv(const AllNodeFib& fib, const Topology& topo,
                  std::ostream& out) {
  out << "node,dest,nexthop,cost_milli,kind\n";
  for (NodeId x = 0; x < fib.node_count(); ++x) {
    for (NodeId dst = 0; dst < fib.node_count(); ++dst) {
      for (const NexthopEntry& e : fib.at(x, dst)) {
        out << topo.label(x) << ',' << topo.label(dst) << ','
            << topo.label(e.neighbor) << ',' << e.cost << ','
            << (e.kind == NexthopKind::Downward ? "DW" : "UW") << '\n';
      }
    }
  }
}

}  // namespace lfid
