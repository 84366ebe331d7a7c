#ifndef LFID_FORWARDING_HPP
#define LFID_FORWARDING_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lfid/fib.hpp"
#include "lfid/shortest_paths.hpp"
#include "lfid/topology.hpp"

namespace lfid {

struct ForwardingState {
  NodeId current = -1;
  std::optional<NodeId> inport;  // neighbor the packet arrived from
  NodeId destination = -1;
  std::vector<NodeId> visited;  // source .. current
};

// Failed links are bidirectional; failed nodes take all incident links with
// them. Experiments never fail their own src or dst.
struct FailureSet {
  std::set<std::pair<NodeId, NodeId>> failed_links;  // stored (min, max)
  std::set<NodeId> failed_nodes;

  void fail_link(NodeId a, NodeId b) {
    failed_links.insert(std::minmax(a, b));
  }
  bool link_failed(NodeId a, NodeId b) const {
    return failed_links.count(std::minmax(a, b)) > 0;
  }
  bool node_failed(NodeId x) const { return failed_nodes.count(x) > 0; }
  bool empty() const { return failed_links.empty() && failed_nodes.empty(); }
};

// The node's entries minus the inport entry, entries over failed links, and
// entries toward failed nodes. Order (ascending cost) preserved. Empty
// result = stuck.
NexthopList viable_nexthops(const AllNodeFib& fib, const ForwardingState& state,
                            const FailureSet& failures = {});

struct WalkVerdict {
  bool loop_free = true;
  std::vector<NodeId> counterexample;  // first walk revisiting a node
};

// Loop-freedom oracle: depth-first exploration of every walk from every
// start node that follows FIB entries arbitrarily but never returns to the
// immediate previous node (no failures). Walk length is bounded by n arcs,
// which is lossless: any longer walk must already revisit a node. Intended
// for small graphs.
WalkVerdict enumerate_all_walks(const AllNodeFib& fib, NodeId destination);

enum class Vantage { Adjacent, Source };

// True iff the per-destination FIB digraph minus failed links/nodes has a
// directed path from `from` to dst.
bool recovery_exists(const AllNodeFib& fib, NodeId dst, NodeId from,
                     const FailureSet& failures);

// Minimum-cost directed path from -> dst in the failure-filtered FIB
// digraph, arc costs = link weights.
std::optional<SimplePath> cheapest_recovery_path(const AllNodeFib& fib,
                                                 const Topology& topo,
                                                 NodeId dst, NodeId from,
                                                 const FailureSet& failures);

// Failure-filtered weighted digraph helpers shared with experiments.
// `base` is either a FIB digraph or the undirected topology digraph.
WeightedDigraph filtered_digraph(const WeightedDigraph& base,
                                 const FailureSet& failures);

// Greedy forwarding: always take the first viable entry; used as a stricter
// assertion beside the existence-based experiments. Returns the walk if dst
// was reached within n steps without revisiting a node.
std::optional<SimplePath> greedy_forward(const AllNodeFib& fib,
                                         const Topology& topo, NodeId src,
                                         NodeId dst,
                                         const FailureSet& failures = {});

}  // namespace lfid

#endif  // LFID_FORWARDING_HPP
