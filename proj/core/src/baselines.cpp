#include "lfid/baselines.hpp"

#include <stdexcept>

#include "lfid/lfid_pipeline.hpp"
#include "lfid/parallel.hpp"
#include "lfid/shortest_paths.hpp"

namespace lfid {

namespace {

enum class Criterion { EqualCost, Downward, DownwardEqual };

AllNodeFib compute_dag_fib(const Topology& topo, Criterion criterion,
                           unsigned workers) {
  const int n = topo.node_count();
  // sp[s] = shortest-path table from s; undirected, so sp[s][d] = sp(d, s).
  std::vector<CostTable> sp(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), workers, [&](std::size_t s) {
    sp[s] = dijkstra(topo, static_cast<NodeId>(s));
  });

  AllNodeFib fib(n);
  parallel_for(static_cast<std::size_t>(n), workers, [&](std::size_t xi) {
    const NodeId x = static_cast<NodeId>(xi);
    for (NodeId dst = 0; dst < n; ++dst) {
      if (dst == x || !sp[xi].at(dst)) continue;
      const Cost sp_x = *sp[xi].at(dst);
      for (const Neighbor& nb : topo.neighbors(x)) {
        const Cost sp_n = *sp[static_cast<std::size_t>(nb.id)].at(dst);
        bool admit = false;
        switch (criterion) {
          case Criterion::EqualCost:
            admit = nb.weight + sp_n == sp_x;
            break;
          case Criterion::Downward:
            admit = sp_n < sp_x;
            break;
          case Criterion::DownwardEqual:
            admit = sp_n < sp_x || (sp_n == sp_x && nb.id < x);
            break;
        }
        if (admit) {
          fib.add(x, dst,
                  {nb.id, nb.weight + sp_n, NexthopKind::Downward, {}});
        }
      }
    }
  });
  return fib;
}

}  // namespace

AllNodeFib compute_ecmp(const Topology& topo, unsigned workers) {
  return compute_dag_fib(topo, Criterion::EqualCost, workers);
}

AllNodeFib compute_dw(const Topology& topo, unsigned workers) {
  return compute_dag_fib(topo, Criterion::Downward, workers);
}

AllNodeFib compute_dwe(const Topology& topo, unsigned workers) {
  return compute_dag_fib(topo, Criterion::DownwardEqual, workers);
}

std::optional<Algorithm> parse_algorithm(const std::string& token) {
  if (token == "ecmp") return Algorithm::Ecmp;
  if (token == "dw") return Algorithm::Dw;
  if (token == "dwe") return Algorithm::Dwe;
  if (token == "lfid") return Algorithm::Lfid;
  if (token == "opt") return Algorithm::Opt;
  if (token == "mara-mc") return Algorithm::MaraMc;
  if (token == "mara-spe") return Algorithm::MaraSpe;
  return std::nullopt;
}

std::string algorithm_token(Algorithm algo) {
  switch (algo) {
    case Algorithm::Ecmp: return "ecmp";
    case Algorithm::Dw: return "dw";
    case Algorithm::Dwe: return "dwe";
    case Algorithm::Lfid: return "lfid";
    case Algorithm::Opt: return "opt";
    case Algorithm::MaraMc: return "mara-mc";
    case Algorithm::MaraSpe: return "mara-spe";
  }
  return "?";
}

bool algorithm_implemented(Algorithm algo) {
  return algo != Algorithm::MaraMc && algo != Algorithm::MaraSpe;
}

AllNodeFib compute_fib(const Topology& topo, Algorithm algo, unsigned workers) {
  switch (algo) {
    case Algorithm::Ecmp: return compute_ecmp(topo, workers);
    case Algorithm::Dw: return compute_dw(topo, workers);
    case Algorithm::Dwe: return compute_dwe(topo, workers);
    case Algorithm::Lfid: {
      PipelineOptions options;
      options.workers = workers;
      return compute_lfid(topo, options);
    }
    case Algorithm::Opt:
      throw std::invalid_argument("opt has no FIB");
    case Algorithm::MaraMc:
    case Algorithm::MaraSpe:
      throw std::invalid_argument(algorithm_token(algo) + " is not implemented");
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace lfid
