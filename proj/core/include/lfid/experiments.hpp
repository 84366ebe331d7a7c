#ifndef LFID_EXPERIMENTS_HPP
#define LFID_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lfid/baselines.hpp"
#include "lfid/fib.hpp"
#include "lfid/forwarding.hpp"
#include "lfid/topology.hpp"

namespace lfid {

// One experiment observation. `k` is the path index (k-shortest) or the
// failure index in a multi-failure chain.
struct TrialRecord {
  std::string algorithm;
  std::string scenario;
  int run = 0;
  NodeId src = -1;
  NodeId dst = -1;
  int k = 0;
  bool recovered = false;
  std::optional<Cost> path_cost;     // milli-units
  std::optional<Cost> optimal_cost;  // milli-units
  std::optional<double> stretch;     // path_cost / optimal_cost, >= 1
};

struct ExperimentConfig {
  int k = 10;       // max paths / max chained failures
  int runs = 100;   // repetitions for the randomized experiment
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

enum class FailureMode { Link, Node };

// K-shortest-path availability and stretch per ordered same-component pair.
// `fib` may be null for OPT (paths taken from the undirected topology).
std::vector<TrialRecord> k_path_stats(const Topology& topo,
                                      const AllNodeFib* fib,
                                      const std::string& algorithm,
                                      const ExperimentConfig& config);

struct KPathCell {
  int pairs_total = 0;
  int pairs_with_k = 0;
  double pct = 0.0;
  // Absent when availability < 5% (small-sample outliers) or no pair had
  // the k-th path.
  std::optional<double> avg_stretch;
};

std::map<int, KPathCell> aggregate_k_paths(
    const std::vector<TrialRecord>& records);

// Single link/node failures along one canonical shortest path per pair;
// recovery checked from the node adjacent to the failure or from the source
// (backtracking). `fib` null = OPT (undirected reachability).
std::vector<TrialRecord> single_failure_experiment(
    const Topology& topo, const AllNodeFib* fib, const std::string& algorithm,
    FailureMode mode, Vantage vantage, unsigned workers = 1);

// recovered(algorithm) / recovered(OPT) in percent, over trial-aligned
// record sets. Absent when OPT itself recovers nothing.
std::optional<double> protection_relative_to_opt(
    const std::vector<TrialRecord>& algorithm_records,
    const std::vector<TrialRecord>& opt_records);

// Iterated failure chains: per run and pair, fail a random link on the
// current path, recover from the upstream-adjacent node via the cheapest
// surviving FIB path, and measure the stretch of the full traversed walk
// against the best continuation (walked prefix plus the optimal detour from
// the vantage node avoiding all failures). Chains stop at the first
// non-recovery. `fib` null = OPT.
std::vector<TrialRecord> multi_failure_experiment(
    const Topology& topo, const AllNodeFib* fib, const std::string& algorithm,
    const ExperimentConfig& config);

struct MultiFailureCell {
  int chains = 0;     // chains that reached this k
  int recovered = 0;  // of those, recovered
  double recovery_pct = 0.0;  // recovered / total chains started
  std::optional<double> avg_stretch;
};

std::map<int, MultiFailureCell> aggregate_multi_failure(
    const std::vector<TrialRecord>& records);

struct BenchRow {
  std::string topology;
  std::string algorithm;
  unsigned workers = 1;
  int repetition = 0;
  double millis = 0.0;
};

std::vector<BenchRow> runtime_benchmark(const Topology& topo,
                                        const std::string& topology_name,
                                        const std::vector<Algorithm>& algos,
                                        int repetitions,
                                        const std::vector<unsigned>& worker_counts);

// Output. The comment header records schema version, topology hash, config,
// seed, and RNG identifier so runs are reproducible and attributable.
struct OutputMeta {
  std::string schema;
  std::uint64_t topology_hash = 0;
  std::string algorithms;
  std::string config;
  std::optional<std::uint64_t> seed;
};

void write_trials_csv(std::ostream& out, const OutputMeta& meta,
                      const Topology& topo,
                      const std::vector<TrialRecord>& records);
void write_trials_json(std::ostream& out, const OutputMeta& meta,
                       const Topology& topo,
                       const std::vector<TrialRecord>& records);
void write_bench_csv(std::ostream& out, const OutputMeta& meta,
                     const std::vector<BenchRow>& rows);
void write_bench_json(std::ostream& out, const OutputMeta& meta,
                      const std::vector<BenchRow>& rows);

}  // namespace lfid

#endif  // LFID_EXPERIMENTS_HPP
