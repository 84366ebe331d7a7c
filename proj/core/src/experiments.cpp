#include "lfid/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

#include "lfid/lfid_pipeline.hpp"
#include "lfid/parallel.hpp"
#include "lfid/rng.hpp"
#include "lfid/shortest_paths.hpp"

namespace lfid {

namespace {

std::vector<std::pair<NodeId, NodeId>> same_component_pairs(
    const Topology& topo) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  const int n = topo.node_count();
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId d = 0; d < n; ++d) {
      if (s != d && topo.component(s) == topo.component(d)) {
        pairs.push_back({s, d});
      }
    }
  }
  return pairs;
}

Cost path_segment_cost(const Topology& topo, const std::vector<NodeId>& nodes,
                       std::size_t first, std::size_t last) {
  Cost cost = 0;
  for (std::size_t i = first; i < last; ++i) {
    cost += topo.link_weight(nodes[i], nodes[i + 1]);
  }
  return cost;
}

bool undirected_recovery(const Topology& topo, NodeId from, NodeId to,
                         const FailureSet& failures) {
  const WeightedDigraph g =
      filtered_digraph(undirected_digraph(topo), failures);
  return dijkstra_digraph(g, from).at(to).has_value();
}

std::string format_stretch(double stretch) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", stretch);
  return buf;
}

}  // namespace

std::vector<TrialRecord> k_path_stats(const Topology& topo,
                                      const AllNodeFib* fib,
                                      const std::string& algorithm,
                                      const ExperimentConfig& config) {
  const auto pairs = same_component_pairs(topo);
  const WeightedDigraph base = undirected_digraph(topo);
  // Per-destination FIB digraphs, built once.
  std::vector<WeightedDigraph> fib_digraphs;
  if (fib) {
    fib_digraphs.resize(static_cast<std::size_t>(topo.node_count()));
    for (NodeId d = 0; d < topo.node_count(); ++d) {
      fib_digraphs[static_cast<std::size_t>(d)] =
          weighted_fib_digraph(*fib, topo, d);
    }
  }

  std::vector<std::vector<TrialRecord>> slots(pairs.size());
  parallel_for(pairs.size(), config.workers, [&](std::size_t pi) {
    const auto [s, d] = pairs[pi];
    const auto undirected = yen_k_shortest(base, s, d, config.k);
    const auto directed =
        fib ? yen_k_shortest(fib_digraphs[static_cast<std::size_t>(d)], s, d,
                             config.k)
            : undirected;
    for (int k = 1; k <= config.k; ++k) {
      TrialRecord rec;
      rec.algorithm = algorithm;
      rec.scenario = "paths";
      rec.src = s;
      rec.dst = d;
      rec.k = k;
      const std::size_t idx = static_cast<std::size_t>(k - 1);
      if (idx < directed.size()) {
        rec.recovered = true;
        rec.path_cost = directed[idx].cost;
        rec.optimal_cost = undirected[idx].cost;
        rec.stretch = static_cast<double>(directed[idx].cost) /
                      static_cast<double>(undirected[idx].cost);
      }
      slots[pi].push_back(std::move(rec));
    }
  });

  std::vector<TrialRecord> records;
  for (auto& slot : slots) {
    records.insert(records.end(), std::make_move_iterator(slot.begin()),
                   std::make_move_iterator(slot.end()));
  }
  return records;
}

std::map<int, KPathCell> aggregate_k_paths(
    const std::vector<TrialRecord>& records) {
  std::map<int, KPathCell> cells;
  std::map<int, std::pair<double, int>> stretch_acc;
  for (const TrialRecord& r : records) {
    KPathCell& cell = cells[r.k];
    ++cell.pairs_total;
    if (r.recovered) {
      ++cell.pairs_with_k;
      if (r.stretch) {
        auto& [sum, count] = stretch_acc[r.k];
        sum += *r.stretch;
        ++count;
      }
    }
  }
  for (auto& [k, cell] : cells) {
    cell.pct = cell.pairs_total == 0
                   ? 0.0
                   : 100.0 * cell.pairs_with_k / cell.pairs_total;
    if (const auto it = stretch_acc.find(k);
        it != stretch_acc.end() && cell.pct >= 5.0) {
      cell.avg_stretch = it->second.first / it->second.second;
    }
  }
  return cells;
}

std::vector<TrialRecord> single_failure_experiment(
    const Topology& topo, const AllNodeFib* fib, const std::string& algorithm,
    FailureMode mode, Vantage vantage, unsigned workers) {
  const auto pairs = same_component_pairs(topo);
  const std::string scenario =
      std::string("single-") + (mode == FailureMode::Link ? "link" : "node") +
      (vantage == Vantage::Adjacent ? "-adjacent" : "-source");

  std::vector<std::vector<TrialRecord>> slots(pairs.size());
  parallel_for(pairs.size(), workers, [&](std::size_t pi) {
    const auto [s, d] = pairs[pi];
    const auto path = canonical_shortest_path(topo, s, d);
    if (!path) return;
    const auto& nodes = path->nodes;
    // Elements to fail: each link on the path, or each intermediate node.
    const std::size_t elements = mode == FailureMode::Link
                                     ? nodes.size() - 1
                                     : nodes.size() - 2;
    for (std::size_t e = 0; e < elements; ++e) {
      FailureSet failures;
      NodeId upstream;
      if (mode == FailureMode::Link) {
        failures.fail_link(nodes[e], nodes[e + 1]);
        upstream = nodes[e];
      } else {
        failures.failed_nodes.insert(nodes[e + 1]);
        upstream = nodes[e];
      }
      const NodeId from = vantage == Vantage::Adjacent ? upstream : s;
      TrialRecord rec;
      rec.algorithm = algorithm;
      rec.scenario = scenario;
      rec.src = s;
      rec.dst = d;
      rec.k = static_cast<int>(e) + 1;
      rec.recovered = fib ? recovery_exists(*fib, d, from, failures)
                          : undirected_recovery(topo, from, d, failures);
      slots[pi].push_back(std::move(rec));
    }
  });

  std::vector<TrialRecord> records;
  for (auto& slot : slots) {
    records.insert(records.end(), std::make_move_iterator(slot.begin()),
                   std::make_move_iterator(slot.end()));
  }
  return records;
}

std::optional<double> protection_relative_to_opt(
    const std::vector<TrialRecord>& algorithm_records,
    const std::vector<TrialRecord>& opt_records) {
  int algo_recovered = 0;
  int opt_recovered = 0;
  for (const TrialRecord& r : algorithm_records) algo_recovered += r.recovered;
  for (const TrialRecord& r : opt_records) opt_recovered += r.recovered;
  if (opt_recovered == 0) return std::nullopt;  // e.g. every link a cut edge
  return 100.0 * algo_recovered / opt_recovered;
}

std::vector<TrialRecord> multi_failure_experiment(
    const Topology& topo, const AllNodeFib* fib, const std::string& algorithm,
    const ExperimentConfig& config) {
  const auto pairs = same_component_pairs(topo);
  const WeightedDigraph base_undirected = undirected_digraph(topo);
  std::vector<WeightedDigraph> fib_digraphs;
  if (fib) {
    fib_digraphs.resize(static_cast<std::size_t>(topo.node_count()));
    for (NodeId d = 0; d < topo.node_count(); ++d) {
      fib_digraphs[static_cast<std::size_t>(d)] =
          weighted_fib_digraph(*fib, topo, d);
    }
  }

  const std::size_t trials = static_cast<std::size_t>(config.runs) * pairs.size();
  std::vector<std::vector<TrialRecord>> slots(trials);
  parallel_for(trials, config.workers, [&](std::size_t ti) {
    const int run = static_cast<int>(ti / pairs.size());
    const auto [s, d] = pairs[ti % pairs.size()];
    // Per-trial derived seed keeps draws independent of worker scheduling.
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(run),
                        static_cast<std::uint64_t>(s),
                        static_cast<std::uint64_t>(d)));
    const WeightedDigraph& routing =
        fib ? fib_digraphs[static_cast<std::size_t>(d)] : base_undirected;

    auto path = canonical_shortest_path(topo, s, d);
    if (!path) return;
    std::vector<NodeId> current = path->nodes;
    FailureSet failures;
    Cost walk_cost = 0;

    for (int k = 1; k <= config.k; ++k) {
      // Candidate links on the current path; previously failed links are
      // excluded from selection (the recovery path avoids them anyway).
      std::vector<std::size_t> candidates;
      for (std::size_t i = 0; i + 1 < current.size(); ++i) {
        if (!failures.link_failed(current[i], current[i + 1])) {
          candidates.push_back(i);
        }
      }
      if (candidates.empty()) break;
      const std::size_t i = candidates[bounded(rng, candidates.size())];
      walk_cost += path_segment_cost(topo, current, 0, i);
      const NodeId vantage = current[i];
      failures.fail_link(current[i], current[i + 1]);

      TrialRecord rec;
      rec.algorithm = algorithm;
      rec.scenario = "multi-failure";
      rec.run = run;
      rec.src = s;
      rec.dst = d;
      rec.k = k;

      const auto recovery = cheapest_path_digraph(
          filtered_digraph(routing, failures), vantage, d);
      if (!recovery) {
        slots[ti].push_back(std::move(rec));
        break;
      }
      // Best continuation given the walked prefix: the packet cannot unwalk
      // it, so the optimum shares the prefix and detours from the vantage.
      const auto optimal = cheapest_path_digraph(
          filtered_digraph(base_undirected, failures), vantage, d);
      rec.recovered = true;
      rec.path_cost = walk_cost + recovery->cost;
      rec.optimal_cost = walk_cost + optimal->cost;
      rec.stretch = static_cast<double>(*rec.path_cost) /
                    static_cast<double>(*rec.optimal_cost);
      slots[ti].push_back(std::move(rec));
      current = recovery->nodes;
    }
  });

  std::vector<TrialRecord> records;
  for (auto& slot : slots) {
    records.insert(records.end(), std::make_move_iterator(slot.begin()),
                   std::make_move_iterator(slot.end()));
  }
  return records;
}

std::map<int, MultiFailureCell> aggregate_multi_failure(
    const std::vector<TrialRecord>& records) {
  std::map<int, MultiFailureCell> cells;
  std::map<int, std::pair<double, int>> stretch_acc;
  int total_chains = 0;
  for (const TrialRecord& r : records) {
    MultiFailureCell& cell = cells[r.k];
    ++cell.chains;
    if (r.k == 1) ++total_chains;
    if (r.recovered) {
      ++cell.recovered;
      if (r.stretch) {
        auto& [sum, count] = stretch_acc[r.k];
        sum += *r.stretch;
        ++count;
      }
    }
  }
  for (auto& [k, cell] : cells) {
    cell.recovery_pct =
        total_chains == 0 ? 0.0 : 100.0 * cell.recovered / total_chains;
    if (const auto it = stretch_acc.find(k); it != stretch_acc.end()) {
      cell.avg_stretch = it->second.first / it->second.second;
    }
  }
  return cells;
}

std::vector<BenchRow> runtime_benchmark(
    const Topology& topo, const std::string& topology_name,
    const std::vector<Algorithm>& algos, int repetitions,
    const std::vector<unsigned>& worker_counts) {
  std::vector<BenchRow> rows;
  for (Algorithm algo : algos) {
    if (!algorithm_implemented(algo) || algo == Algorithm::Opt) continue;
    for (unsigned workers : worker_counts) {
      for (int rep = 0; rep < repetitions; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const AllNodeFib fib = compute_fib(topo, algo, workers);
        const auto stop = std::chrono::steady_clock::now();
        (void)fib;
        rows.push_back(
            {topology_name, algorithm_token(algo), workers, rep,
             std::chrono::duration<double, std::milli>(stop - start).count()});
      }
    }
  }
  return rows;
}

namespace {

void write_meta(std::ostream& out, const OutputMeta& meta) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(meta.topology_hash));
  out << "# schema: " << meta.schema << "\n";
  out << "# topology_hash: " << hash << "\n";
  out << "# algorithms: " << meta.algorithms << "\n";
  out << "# config: " << meta.config << "\n";
  if (meta.seed) out << "# seed: " << *meta.seed << "\n";
  out << "# rng: " << kRngId << "\n";
}

nlohmann::json meta_json(const OutputMeta& meta) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(meta.topology_hash));
  nlohmann::json j{{"schema", meta.schema},
                   {"topology_hash", hash},
                   {"algorithms", meta.algorithms},
                   {"config", meta.config},
                   {"rng", kRngId}};
  if (meta.seed) j["seed"] = *meta.seed;
  return j;
}

}  // namespace

void write_trials_csv(std::ostream& out, const OutputMeta& meta,
                      const Topology& topo,
                      const std::vector<TrialRecord>& records) {
  write_meta(out, meta);
  out << "algorithm,scenario,run,src,dst,k,recovered,path_cost_milli,"
         "optimal_cost_milli,stretch\n";
  for (const TrialRecord& r : records) {
    out << r.algorithm << ',' << r.scenario << ',' << r.run << ','
        << topo.label(r.src) << ',' << topo.label(r.dst) << ',' << r.k << ','
        << (r.recovered ? 1 : 0) << ',';
    if (r.path_cost) out << *r.path_cost;
    out << ',';
    if (r.optimal_cost) out << *r.optimal_cost;
    out << ',';
    if (r.stretch) out << format_stretch(*r.stretch);
    out << '\n';
  }
}

void write_trials_json(std::ostream& out, const OutputMeta& meta,
                       const Topology& topo,
                       const std::vector<TrialRecord>& records) {
  nlohmann::json root{{"meta", meta_json(meta)}};
  auto& rows = root["records"] = nlohmann::json::array();
  for (const TrialRecord& r : records) {
    nlohmann::json row{{"algorithm", r.algorithm}, {"scenario", r.scenario},
                       {"run", r.run},            {"src", topo.label(r.src)},
                       {"dst", topo.label(r.dst)}, {"k", r.k},
                       {"recovered", r.recovered}};
    if (r.path_cost) row["path_cost_milli"] = *r.path_cost;
    if (r.optimal_cost) row["optimal_cost_milli"] = *r.optimal_cost;
    if (r.stretch) row["stretch"] = format_stretch(*r.stretch);
    rows.push_back(std::move(row));
  }
  out << root.dump(2) << '\n';
}

void write_bench_csv(std::ostream& out, const OutputMeta& meta,
                     const std::vector<BenchRow>& rows) {
  write_meta(out, meta);
  out << "topology,algorithm,workers,repetition,millis\n";
  for (const BenchRow& r : rows) {
    char millis[32];
    std::snprintf(millis, sizeof millis, "%.3f", r.millis);
    out << r.topology << ',' << r.algorithm << ',' << r.workers << ','
        << r.repetition << ',' << millis << '\n';
  }
}

void write_bench_json(std::ostream& out, const OutputMeta& meta,
                      const std::vector<BenchRow>& rows) {
  nlohmann::json root{{"meta", meta_json(meta)}};
  auto& arr = root["records"] = nlohmann::json::array();
  for (const BenchRow& r : rows) {
    arr.push_back({{"topology", r.topology},
                   {"algorithm", r.algorithm},
                   {"workers", r.workers},
                   {"repetition", r.repetition},
                   {"millis", r.millis}});
  }
  out << root.dump(2) << '\n';
}

}  // namespace lfid
