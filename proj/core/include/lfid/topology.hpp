#ifndef LFID_TOPOLOGY_HPP
#define LFID_TOPOLOGY_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lfid/types.hpp"

namespace lfid {

struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Link {
  NodeId a = -1;
  NodeId b = -1;
  Cost weight = 0;  // milli-units, > 0

  friend bool operator==(const Link&, const Link&) = default;
};

struct Neighbor {
  NodeId id = -1;
  Cost weight = 0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

enum class WeightMode { Explicit, HopCount };

// Undirected weighted graph of routers and links. Immutable after
// construction; safe for concurrent reads.
class Topology {
 public:
  Topology(std::vector<std::string> labels, std::vector<Link> links);

  int node_count() const { return static_cast<int>(labels_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }
  const std::vector<Link>& links() const { return links_; }
  const std::vector<Neighbor>& neighbors(NodeId x) const {
    return adjacency_[static_cast<std::size_t>(x)];
  }
  const std::string& label(NodeId x) const {
    return labels_[static_cast<std::size_t>(x)];
  }
  // -1 if the label is unknown.
  NodeId node_by_label(const std::string& label) const;

  // Weight of the (a, b) link; throws if the nodes are not adjacent.
  Cost link_weight(NodeId a, NodeId b) const;
  bool has_link(NodeId a, NodeId b) const;

  // Connected-component id per node; experiments restrict to pairs within
  // one component.
  int component(NodeId x) const {
    return component_[static_cast<std::size_t>(x)];
  }
  int component_count() const { return component_count_; }
  bool connected() const { return component_count_ <= 1; }

  // Returns a topology with every weight multiplied by `factor` (> 0).
  Topology scaled(Cost factor) const;

  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Link> links_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<int> component_;
  int component_count_ = 0;
};

// Parses the edge-list format: one `<node_a> <node_b> [weight]` per line,
// `#` starts a comment, weight defaults to 1.0 and allows up to three
// fractional digits (stored as integer milli-units). HopCount mode forces
// every weight to 1000. Throws TopologyError with a line number on
// malformed input, self-loops, duplicate links, and non-positive weights.
Topology load_topology(std::istream& text,
                       WeightMode mode = WeightMode::Explicit);
Topology load_topology_file(const std::string& path,
                            WeightMode mode = WeightMode::Explicit);

// Canonical text form; load_topology round-trips it.
std::string serialize_topology(const Topology& topo);

// FNV-1a over the canonical serialization; recorded in experiment output
// headers so results can be tied to their input.
std::uint64_t topology_hash(const Topology& topo);

// Connected graph: a uniform random labeled spanning tree (Prüfer decode)
// plus `extra_edges` distinct random non-tree edges. Weights drawn uniformly
// from [weight_lo, weight_hi] (whole units, stored as milli-units).
// Deterministic for a fixed seed. Throws TopologyError if the edge count is
// infeasible.
Topology random_connected_graph(int n, int extra_edges, Cost weight_lo,
                                Cost weight_hi, std::uint64_t seed);

}  // namespace lfid

#endif  // LFID_TOPOLOGY_HPP
