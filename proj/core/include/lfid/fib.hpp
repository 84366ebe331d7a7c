#ifndef LFID_FIB_HPP
#define LFID_FIB_HPP

#include <iosfwd>
#include <vector>

#include "lfid/digraph.hpp"
#include "lfid/shortest_paths.hpp"
#include "lfid/topology.hpp"
#include "lfid/types.hpp"

namespace lfid {

// node -> destination -> ordered nexthop entries. The central artifact of
// every algorithm. Entries within a cell are sorted ascending by
// (cost, neighbor id); a destination's own cell is empty.
class AllNodeFib {
 public:
  AllNodeFib() = default;
  explicit AllNodeFib(int n)
      : entries_(static_cast<std::size_t>(n),
                 std::vector<NexthopList>(static_cast<std::size_t>(n))) {}

  int node_count() const { return static_cast<int>(entries_.size()); }
  const NexthopList& at(NodeId node, NodeId dst) const {
    return entries_[static_cast<std::size_t>(node)][static_cast<std::size_t>(dst)];
  }
  NexthopList& mutable_at(NodeId node, NodeId dst) {
    return entries_[static_cast<std::size_t>(node)][static_cast<std::size_t>(dst)];
  }

  // Keeps the (cost, neighbor id) sort order.
  void add(NodeId node, NodeId dst, NexthopEntry entry);
  // Returns whether an entry toward `neighbor` existed.
  bool remove(NodeId node, NodeId dst, NodeId neighbor);
  const NexthopEntry* find(NodeId node, NodeId dst, NodeId neighbor) const;

  int entry_count() const;

  friend bool operator==(const AllNodeFib&, const AllNodeFib&) = default;

 private:
  std::vector<std::vector<NexthopList>> entries_;
};

struct FibOptions {
  // Alg-1 literal classification compares the node-excised neighbor cost to
  // sp(x, dst). The full-graph variant compares sp(n_i, dst) instead;
  // exposed for sensitivity analysis only.
  bool classify_full_graph = false;
  unsigned workers = 1;
};

// Populates every (node, destination) cell: each neighbor n_i with finite
// node-excised cost gets an entry with cost w(x, n_i) + excised_sp(n_i, d),
// Downward iff excised_sp(n_i, d) < sp(x, d), else Upward. Neighbors that
// can only reach d through x are omitted.
AllNodeFib fill_fib(const Topology& topo, const FibOptions& options = {});

// One arc per FIB entry for the given destination; the destination is a sink.
DestinationDigraph digraph_from_fib(const AllNodeFib& fib, NodeId dst);

// Weighted variant for path queries; arc weights are link weights.
WeightedDigraph weighted_fib_digraph(const AllNodeFib& fib,
                                     const Topology& topo, NodeId dst);

// CLI `compute` dump: `node,dest,nexthop,cost_milli,kind` rows sorted by
// (node, dest, cost, nexthop). Labels come from the topology.
void dump_fib_csv(const AllNodeFib& fib, const Topology& topo,
                  std::ostream& out);

}  // namespace lfid

#endif  // LFID_FIB_HPP
