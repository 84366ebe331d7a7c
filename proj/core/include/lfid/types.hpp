#ifndef LFID_TYPES_HPP
#define LFID_TYPES_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace lfid {

// Dense node index, 0..n-1 after topology ingestion.
using NodeId = int;

// Link and path costs in milli-units (input weight 22.5 -> 22500).
// Unreachable is modeled as absence (std::optional), never as a sentinel.
using Cost = std::int64_t;

enum class NexthopKind : std::uint8_t { Downward, Upward };

// One FIB row: forward to `neighbor`, expected path cost via that neighbor.
// `split` is carried as data for traffic engineering consumers; nothing in
// this library adapts it.
struct NexthopEntry {
  NodeId neighbor = -1;
  Cost cost = 0;
  NexthopKind kind = NexthopKind::Downward;
  std::optional<double> split;

  friend bool operator==(const NexthopEntry& a, const NexthopEntry& b) {
    return a.neighbor == b.neighbor && a.cost == b.cost && a.kind == b.kind;
  }
};

// Entries for one (node, destination) cell, sorted ascending by
// (cost, neighbor id).
using NexthopList = std::vector<NexthopEntry>;

}  // namespace lfid

#endif  // LFID_TYPES_HPP
