#include "lfid/shortest_paths.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <tuple>

namespace lfid {

namespace {

struct QueueItem {
  Cost dist;
  NodeId node;
  friend bool operator>(const QueueItem& a, const QueueItem& b) {
    return std::tie(a.dist, a.node) > std::tie(b.dist, b.node);
  }
};

using MinQueue =
    std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>>;

// Dijkstra over an arbitrary arc provider. `pred` receives the canonical
// predecessor (smallest id among equal-cost options).
template <typename ForEachArc>
CostTable dijkstra_impl(int n, NodeId source, ForEachArc&& for_each_arc,
                        std::vector<NodeId>* pred = nullptr) {
  CostTable table;
  table.source = source;
  table.cost.assign(static_cast<std::size_t>(n), std::nullopt);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  if (pred) pred->assign(static_cast<std::size_t>(n), -1);

  MinQueue pq;
  table.cost[static_cast<std::size_t>(source)] = 0;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [dist, u] = pq.top();
    pq.pop();
    if (done[static_cast<std::size_t>(u)]) continue;
    done[static_cast<std::size_t>(u)] = 1;
    for_each_arc(u, [&](NodeId v, Cost w) {
      if (done[static_cast<std::size_t>(v)]) return;
      auto& dv = table.cost[static_cast<std::size_t>(v)];
      const Cost cand = dist + w;
      if (!dv || cand < *dv) {
        dv = cand;
        if (pred) (*pred)[static_cast<std::size_t>(v)] = u;
        pq.push({cand, v});
      } else if (pred && cand == *dv && u < (*pred)[static_cast<std::size_t>(v)]) {
        (*pred)[static_cast<std::size_t>(v)] = u;
      }
    });
  }
  return table;
}

std::optional<SimplePath> path_from_preds(const CostTable& table,
                                          const std::vector<NodeId>& pred,
                                          NodeId src, NodeId dst) {
  if (!table.at(dst)) return std::nullopt;
  SimplePath path;
  path.cost = *table.at(dst);
  for (NodeId v = dst; v != src; v = pred[static_cast<std::size_t>(v)]) {
    path.nodes.push_back(v);
  }
  path.nodes.push_back(src);
  std::reverse(path.nodes.begin(), path.nodes.end());
  return path;
}

}  // namespace

WeightedDigraph undirected_digraph(const Topology& topo) {
  WeightedDigraph g;
  g.out.resize(static_cast<std::size_t>(topo.node_count()));
  for (const Link& l : topo.links()) {
    g.add_arc(l.a, l.b, l.weight);
    g.add_arc(l.b, l.a, l.weight);
  }
  return g;
}

CostTable dijkstra(const Topology& topo, NodeId source) {
  return dijkstra_impl(topo.node_count(), source, [&](NodeId u, auto&& relax) {
    for (const Neighbor& nb : topo.neighbors(u)) relax(nb.id, nb.weight);
  });
}

std::vector<CostTable> neighbor_costs_excluding(const Topology& topo,
                                                NodeId x) {
  std::vector<CostTable> result;
  result.reserve(topo.neighbors(x).size());
  auto arcs_without_x = [&](NodeId u, auto&& relax) {
    for (const Neighbor& nb : topo.neighbors(u)) {
      if (nb.id != x) relax(nb.id, nb.weight);
    }
  };
  for (const Neighbor& nb : topo.neighbors(x)) {
    result.push_back(dijkstra_impl(topo.node_count(), nb.id, arcs_without_x));
  }
  return result;
}

std::optional<SimplePath> canonical_shortest_path(const Topology& topo,
                                                  NodeId src, NodeId dst) {
  std::vector<NodeId> pred;
  CostTable table =
      dijkstra_impl(topo.node_count(), src,
                    [&](NodeId u, auto&& relax) {
                      for (const Neighbor& nb : topo.neighbors(u)) {
                        relax(nb.id, nb.weight);
                      }
                    },
                    &pred);
  return path_from_preds(table, pred, src, dst);
}

CostTable dijkstra_digraph(const WeightedDigraph& g, NodeId source) {
  return dijkstra_impl(g.node_count(), source, [&](NodeId u, auto&& relax) {
    for (const auto& arc : g.out[static_cast<std::size_t>(u)]) {
      relax(arc.to, arc.weight);
    }
  });
}

std::optional<SimplePath> cheapest_path_digraph(const WeightedDigraph& g,
                                                NodeId src, NodeId dst) {
  std::vector<NodeId> pred;
  CostTable table =
      dijkstra_impl(g.node_count(), src,
                    [&](NodeId u, auto&& relax) {
                      for (const auto& arc : g.out[static_cast<std::size_t>(u)]) {
                        relax(arc.to, arc.weight);
                      }
                    },
                    &pred);
  return path_from_preds(table, pred, src, dst);
}

namespace {

// Dijkstra with per-call bans, for Yen spur paths.
std::optional<SimplePath> cheapest_path_filtered(
    const WeightedDigraph& g, NodeId src, NodeId dst,
    const std::set<std::pair<NodeId, NodeId>>& banned_arcs,
    const std::vector<char>& banned_node) {
  if (banned_node[static_cast<std::size_t>(src)] ||
      banned_node[static_cast<std::size_t>(dst)]) {
    return std::nullopt;
  }
  std::vector<NodeId> pred;
  CostTable table = dijkstra_impl(
      g.node_count(), src,
      [&](NodeId u, auto&& relax) {
        for (const auto& arc : g.out[static_cast<std::size_t>(u)]) {
          if (banned_node[static_cast<std::size_t>(arc.to)]) continue;
          if (banned_arcs.count({u, arc.to})) continue;
          relax(arc.to, arc.weight);
        }
      },
      &pred);
  return path_from_preds(table, pred, src, dst);
}

struct PathOrder {
  bool operator()(const SimplePath& a, const SimplePath& b) const {
    return std::tie(a.cost, a.nodes) < std::tie(b.cost, b.nodes);
  }
};

}  // namespace

std::vector<SimplePath> yen_k_shortest(const WeightedDigraph& g, NodeId src,
                                       NodeId dst, int k) {
  std::vector<SimplePath> accepted;
  if (k < 1) return accepted;

  auto first = cheapest_path_digraph(g, src, dst);
  if (!first) return accepted;
  accepted.push_back(std::move(*first));

  std::set<SimplePath, PathOrder> candidates;
  while (static_cast<int>(accepted.size()) < k) {
    const SimplePath& prev = accepted.back();
    for (std::size_t i = 0; i + 1 < prev.nodes.size(); ++i) {
      const NodeId spur = prev.nodes[i];
      std::set<std::pair<NodeId, NodeId>> banned_arcs;
      for (const SimplePath& p : accepted) {
        if (p.nodes.size() > i + 1 &&
            std::equal(p.nodes.begin(), p.nodes.begin() + static_cast<long>(i) + 1,
                       prev.nodes.begin())) {
          banned_arcs.insert({p.nodes[i], p.nodes[i + 1]});
        }
      }
      std::vector<char> banned_node(static_cast<std::size_t>(g.node_count()), 0);
      Cost root_cost = 0;
      for (std::size_t j = 0; j < i; ++j) {
        banned_node[static_cast<std::size_t>(prev.nodes[j])] = 1;
        for (const auto& arc :
             g.out[static_cast<std::size_t>(prev.nodes[j])]) {
          if (arc.to == prev.nodes[j + 1]) {
            root_cost += arc.weight;
            break;
          }
        }
      }
      auto spur_path =
          cheapest_path_filtered(g, spur, dst, banned_arcs, banned_node);
      if (!spur_path) continue;
      SimplePath candidate;
      candidate.nodes.assign(prev.nodes.begin(),
                             prev.nodes.begin() + static_cast<long>(i));
      candidate.nodes.insert(candidate.nodes.end(), spur_path->nodes.begin(),
                             spur_path->nodes.end());
      candidate.cost = root_cost + spur_path->cost;
      bool duplicate = false;
      for (const SimplePath& p : accepted) {
        if (p.nodes == candidate.nodes) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) candidates.insert(std::move(candidate));
    }
    if (candidates.empty()) break;
    accepted.push_back(*candidates.begin());
    candidates.erase(candidates.begin());
  }
  return accepted;
}

}  // namespace lfid
