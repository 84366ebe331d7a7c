#ifndef LFID_DIGRAPH_HPP
#define LFID_DIGRAPH_HPP

#include <vector>

#include "lfid/types.hpp"

namespace lfid {

// Per-destination directed arc set induced by a FIB: one arc per FIB entry.
// Mutable, because the loop-removal pipeline keeps it synchronized with the
// FIB while entries are deleted. The destination has out-degree 0.
class DestinationDigraph {
 public:
  explicit DestinationDigraph(int n, NodeId destination = -1)
      : destination_(destination),
        out_(static_cast<std::size_t>(n)),
        in_(static_cast<std::size_t>(n)) {}

  NodeId destination() const { return destination_; }
  int node_count() const { return static_cast<int>(out_.size()); }
  const std::vector<NodeId>& out(NodeId x) const {
    return out_[static_cast<std::size_t>(x)];
  }
  const std::vector<NodeId>& in(NodeId x) const {
    return in_[static_cast<std::size_t>(x)];
  }

  bool has_arc(NodeId from, NodeId to) const;
  void add_arc(NodeId from, NodeId to);
  // No-op if absent; returns whether the arc was present.
  bool erase_arc(NodeId from, NodeId to);

  int arc_count() const;

 private:
  NodeId destination_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
};

// Directed reachability via bidirectional BFS, alternating expansion from
// the smaller frontier. is_reachable(g, a, a) is true (empty path).
bool is_reachable(const DestinationDigraph& g, NodeId from, NodeId to);

}  // namespace lfid

#endif  // LFID_DIGRAPH_HPP
