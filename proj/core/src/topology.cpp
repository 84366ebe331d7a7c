#include "lfid/topology.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "lfid/rng.hpp"

namespace lfid {

namespace {

// Parses a positive decimal with at most 3 fractional digits into
// milli-units. Returns false on any malformed input.
bool parse_milli_weight(const std::string& token, Cost* out) {
  std::size_t dot = token.find('.');
  std::string whole = token.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : token.substr(dot + 1);
  if (whole.empty() || frac.size() > 3) return false;
  Cost value = 0;
  for (char c : whole) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
    if (value > (1LL << 40)) return false;
  }
  value *= 1000;
  Cost scale = 100;
  for (char c : frac) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value += (c - '0') * scale;
    scale /= 10;
  }
  *out = value;
  return true;
}

}  // namespace

Topology::Topology(std::vector<std::string> labels, std::vector<Link> links)
    : labels_(std::move(labels)), links_(std::move(links)) {
  const auto n = labels_.size();
  adjacency_.resize(n);
  for (const Link& l : links_) {
    if (l.a < 0 || l.b < 0 || l.a >= static_cast<NodeId>(n) ||
        l.b >= static_cast<NodeId>(n)) {
      throw TopologyError("link endpoint out of range");
    }
    if (l.a == l.b) throw TopologyError("self-loop");
    if (l.weight <= 0) throw TopologyError("non-positive weight");
    adjacency_[static_cast<std::size_t>(l.a)].push_back({l.b, l.weight});
    adjacency_[static_cast<std::size_t>(l.b)].push_back({l.a, l.weight});
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end(),
              [](const Neighbor& x, const Neighbor& y) { return x.id < y.id; });
    for (std::size_t i = 1; i < nbrs.size(); ++i) {
      if (nbrs[i].id == nbrs[i - 1].id) throw TopologyError("parallel link");
    }
  }
  // Components by BFS.
  component_.assign(n, -1);
  for (NodeId start = 0; start < static_cast<NodeId>(n); ++start) {
    if (component_[static_cast<std::size_t>(start)] >= 0) continue;
    component_[static_cast<std::size_t>(start)] = component_count_;
    std::queue<NodeId> q;
    q.push(start);
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      for (const Neighbor& nb : adjacency_[static_cast<std::size_t>(u)]) {
        if (component_[static_cast<std::size_t>(nb.id)] < 0) {
          component_[static_cast<std::size_t>(nb.id)] = component_count_;
          q.push(nb.id);
        }
      }
    }
    ++component_count_;
  }
}

NodeId Topology::node_by_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<NodeId>(i);
  }
  return -1;
}

bool Topology::has_link(NodeId a, NodeId b) const {
  for (const Neighbor& nb : neighbors(a)) {
    if (nb.id == b) return true;
  }
  return false;
}

Cost Topology::link_weight(NodeId a, NodeId b) const {
  for (const Neighbor& nb : neighbors(a)) {
    if (nb.id == b) return nb.weight;
  }
  throw TopologyError("nodes are not adjacent");
}

Topology Topology::scaled(Cost factor) const {
  if (factor <= 0) throw TopologyError("scale factor must be positive");
  std::vector<Link> scaled_links = links_;
  for (Link& l : scaled_links) l.weight *= factor;
  return Topology(labels_, std::move(scaled_links));
}

Topology load_topology(std::istream& text, WeightMode mode) {
  std::vector<std::string> labels;
  std::map<std::string, NodeId> ids;
  std::vector<Link> links;
  std::set<std::pair<NodeId, NodeId>> seen;

  auto intern = [&](const std::string& name) {
    auto [it, inserted] = ids.emplace(name, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(name);
    return it->second;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(text, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string na, nb, wtok;
    if (!(fields >> na)) continue;  // blank line
    auto fail = [&](const std::string& what) {
      throw TopologyError("line " + std::to_string(line_no) + ": " + what);
    };
    if (!(fields >> nb)) fail("expected two node names");
    Cost weight = 1000;
    if (fields >> wtok) {
      if (!parse_milli_weight(wtok, &weight)) fail("bad weight '" + wtok + "'");
    }
    std::string extra;
    if (fields >> extra) fail("trailing token '" + extra + "'");
    if (mode == WeightMode::HopCount) weight = 1000;
    NodeId a = intern(na);
    NodeId b = intern(nb);
    if (a == b) fail("self-loop at node '" + na + "'");
    if (weight <= 0) fail("non-positive weight");
    auto key = std::minmax(a, b);
    if (!seen.insert({key.first, key.second}).second) {
      fail("duplicate link " + na + " " + nb);
    }
    links.push_back({a, b, weight});
  }
  return Topology(std::move(labels), std::move(links));
}

Topology load_topology_file(const std::string& path, WeightMode mode) {
  std::ifstream in(path);
  if (!in) throw TopologyError("cannot open '" + path + "'");
  return load_topology(in, mode);
}

std::string serialize_topology(const Topology& topo) {
  std::ostringstream out;
  std::vector<Link> links = topo.links();
  for (Link& l : links) {
    if (l.a > l.b) std::swap(l.a, l.b);
  }
  std::sort(links.begin(), links.end(), [](const Link& x, const Link& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  for (const Link& l : links) {
    out << topo.label(l.a) << ' ' << topo.label(l.b) << ' ' << l.weight / 1000;
    if (Cost frac = l.weight % 1000; frac != 0) {
      char buf[8];
      std::snprintf(buf, sizeof buf, ".%03d", static_cast<int>(frac));
      std::string f(buf);
      while (f.back() == '0') f.pop_back();
      out << f;
    }
    out << '\n';
  }
  // Isolated nodes cannot appear in the edge list; none are generated here.
  return out.str();
}

std::uint64_t topology_hash(const Topology& topo) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
  for (char c : serialize_topology(topo)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

Topology random_connected_graph(int n, int extra_edges, Cost weight_lo,
                                Cost weight_hi, std::uint64_t seed) {
  if (n < 2) throw TopologyError("need at least 2 nodes");
  if (weight_lo <= 0 || weight_hi < weight_lo) {
    throw TopologyError("bad weight range");
  }
  const long long max_extra =
      static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
  if (extra_edges < 0 || extra_edges > max_extra) {
    throw TopologyError("infeasible edge count");
  }

  Rng rng(derive_seed(seed));
  auto draw_weight = [&] {
    return (static_cast<Cost>(bounded(
                rng, static_cast<std::uint64_t>(weight_hi - weight_lo + 1))) +
            weight_lo) *
           1000;
  };

  std::set<std::pair<NodeId, NodeId>> edges;
  std::vector<Link> links;
  auto add_edge = [&](NodeId a, NodeId b) {
    auto key = std::minmax(a, b);
    if (!edges.insert({key.first, key.second}).second) return false;
    links.push_back({a, b, draw_weight()});
    return true;
  };

  if (n == 2) {
    add_edge(0, 1);
  } else {
    // Prüfer decode: uniform over all labeled spanning trees.
    std::vector<int> prufer(static_cast<std::size_t>(n - 2));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (auto& p : prufer) {
      p = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
      ++degree[static_cast<std::size_t>(p)];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
      if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    }
    for (int p : prufer) {
      int leaf = leaves.top();
      leaves.pop();
      add_edge(leaf, p);
      if (--degree[static_cast<std::size_t>(p)] == 1) leaves.push(p);
    }
    int u = leaves.top();
    leaves.pop();
    int v = leaves.top();
    add_edge(u, v);
  }

  for (int added = 0; added < extra_edges;) {
    NodeId a = static_cast<NodeId>(bounded(rng, static_cast<std::uint64_t>(n)));
    NodeId b = static_cast<NodeId>(bounded(rng, static_cast<std::uint64_t>(n)));
    if (a == b) continue;
    if (add_edge(a, b)) ++added;
  }

  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = "n" + std::to_string(i);
  return Topology(std::move(labels), std::move(links));
}

}  // namespace lfid
