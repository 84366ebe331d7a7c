#include "lfid/digraph.hpp"

#include <algorithm>

namespace lfid {

namespace {

bool erase_value(std::vector<NodeId>& v, NodeId x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) return false;
  v.erase(it);
  return true;
}

}  // namespace

bool DestinationDigraph::has_arc(NodeId from, NodeId to) const {
  const auto& o = out_[static_cast<std::size_t>(from)];
  return std::find(o.begin(), o.end(), to) != o.end();
}

void DestinationDigraph::add_arc(NodeId from, NodeId to) {
  if (has_arc(from, to)) return;
  out_[static_cast<std::size_t>(from)].push_back(to);
  in_[static_cast<std::size_t>(to)].push_back(from);
}

bool DestinationDigraph::erase_arc(NodeId from, NodeId to) {
  if (!erase_value(out_[static_cast<std::size_t>(from)], to)) return false;
  erase_value(in_[static_cast<std::size_t>(to)], from);
  return true;
}

int DestinationDigraph::arc_count() const {
  int count = 0;
  for (const auto& o : out_) count += static_cast<int>(o.size());
  return count;
}

bool is_reachable(const DestinationDigraph& g, NodeId from, NodeId to) {
  if (from == to) return true;
  const std::size_t n = static_cast<std::size_t>(g.node_count());
  // 0 unseen, 1 forward, 2 backward
  std::vector<char> mark(n, 0);
  std::vector<NodeId> fwd{from}, bwd{to};
  mark[static_cast<std::size_t>(from)] = 1;
  mark[static_cast<std::size_t>(to)] = 2;

  while (!fwd.empty() && !bwd.empty()) {
    const bool forward = fwd.size() <= bwd.size();
    auto& frontier = forward ? fwd : bwd;
    const char own = forward ? 1 : 2;
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      const auto& arcs = forward ? g.out(u) : g.in(u);
      for (NodeId v : arcs) {
        char& m = mark[static_cast<std::size_t>(v)];
        if (m == own) continue;
        if (m != 0) return true;  // frontiers met
        m = own;
        next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace lfid
