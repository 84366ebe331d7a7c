#include "lfid/lfid_pipeline.hpp"

#include <algorithm>
#include <queue>
#include <tuple>
#include <vector>

#include "lfid/parallel.hpp"

namespace lfid {

namespace {

// Queue key per Alg-2 ordering: most remaining total nexthops first, then
// costliest unexamined upward entry, then ascending node id.
struct NodePrio {
  int remaining_total = 0;
  Cost top_upward_cost = 0;
  NodeId node = -1;

  friend bool operator<(const NodePrio& a, const NodePrio& b) {
    // std::priority_queue is a max-heap; invert the id component.
    return std::tuple(a.remaining_total, a.top_upward_cost, -a.node) <
           std::tuple(b.remaining_total, b.top_upward_cost, -b.node);
  }
};

// Unexamined upward entries, kept so that back() is the costliest entry
// (smallest neighbor id among equal costs).
void sort_for_popping(std::vector<NexthopEntry>& v) {
  std::sort(v.begin(), v.end(), [](const NexthopEntry& a, const NexthopEntry& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.neighbor > b.neighbor;
  });
}

void remove_loops_for_destination(AllNodeFib& fib, NodeId dst) {
  const int n = fib.node_count();
  DestinationDigraph dg = digraph_from_fib(fib, dst);

  std::vector<std::vector<NexthopEntry>> unexamined(static_cast<std::size_t>(n));
  std::priority_queue<NodePrio> pq;
  for (NodeId x = 0; x < n; ++x) {
    for (const NexthopEntry& e : fib.at(x, dst)) {
      if (e.kind == NexthopKind::Upward) {
        unexamined[static_cast<std::size_t>(x)].push_back(e);
      }
    }
    auto& uw = unexamined[static_cast<std::size_t>(x)];
    if (!uw.empty()) {
      sort_for_popping(uw);
      pq.push({static_cast<int>(fib.at(x, dst).size()), uw.back().cost, x});
    }
  }

  while (!pq.empty()) {
    const NodeId x = pq.top().node;
    pq.pop();
    auto& uw = unexamined[static_cast<std::size_t>(x)];
    const NexthopEntry nh = uw.back();
    uw.pop_back();

    // Temporarily drop the reverse arc; restore it afterwards only if it
    // was actually present (it may already be gone as a pruned entry of
    // the neighbor).
    const bool reverse_present = dg.erase_arc(nh.neighbor, x);
    const bool will_loop = is_reachable(dg, nh.neighbor, x);
    if (will_loop) {
      fib.remove(x, dst, nh.neighbor);
      dg.erase_arc(x, nh.neighbor);
    }
    if (reverse_present) dg.add_arc(nh.neighbor, x);

    if (!uw.empty()) {
      pq.push({static_cast<int>(fib.at(x, dst).size()), uw.back().cost, x});
    }
  }
}

void remove_dead_ends_for_destination(AllNodeFib& fib, NodeId dst) {
  const int n = fib.node_count();
  std::vector<std::pair<NodeId, NodeId>> worklist;  // (node, upward neighbor)
  for (NodeId x = 0; x < n; ++x) {
    for (const NexthopEntry& e : fib.at(x, dst)) {
      if (e.kind == NexthopKind::Upward) worklist.push_back({x, e.neighbor});
    }
  }
  while (!worklist.empty()) {
    auto [x, nb] = worklist.back();
    worklist.pop_back();
    const NexthopEntry* entry = fib.find(x, dst, nb);
    if (!entry || entry->kind != NexthopKind::Upward) continue;
    const NexthopList& reverse = fib.at(nb, dst);
    // Dead end: the neighbor's only forwarding option returns the packet.
    if (reverse.size() == 1 && reverse[0].neighbor == x) {
      fib.remove(x, dst, nb);
      // x shrank; upward entries pointing into x may be dead ends now.
      for (NodeId y = 0; y < n; ++y) {
        if (const NexthopEntry* e = fib.find(y, dst, x);
            e && e->kind == NexthopKind::Upward) {
          worklist.push_back({y, x});
        }
      }
    }
  }
}

}  // namespace

AllNodeFib remove_loops(AllNodeFib fib, const Topology& topo,
                        const PipelineOptions& options) {
  (void)topo;
  const int n = fib.node_count();
  parallel_for(static_cast<std::size_t>(n), options.workers,
               [&](std::size_t dst) {
                 remove_loops_for_destination(fib, static_cast<NodeId>(dst));
               });
  return fib;
}

AllNodeFib remove_dead_ends(AllNodeFib fib, const PipelineOptions& options) {
  const int n = fib.node_count();
  parallel_for(static_cast<std::size_t>(n), options.workers,
               [&](std::size_t dst) {
                 remove_dead_ends_for_destination(fib, static_cast<NodeId>(dst));
               });
  return fib;
}

AllNodeFib compute_lfid(const Topology& topo, const PipelineOptions& options) {
  FibOptions fill_options;
  fill_options.workers = options.workers;
  AllNodeFib fib = fill_fib(topo, fill_options);
  fib = remove_loops(std::move(fib), topo, options);
  return remove_dead_ends(std::move(fib), options);
}

}  // namespace lfid
