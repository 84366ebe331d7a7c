// Command-line front end: FIB computation, verification, and the
// experiment drivers.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lfid/baselines.hpp"
#include "lfid/experiments.hpp"
#include "lfid/fib.hpp"
#include "lfid/forwarding.hpp"
#include "lfid/lfid_pipeline.hpp"
#include "lfid/topology.hpp"

namespace {

using namespace lfid;

struct CliConfig {
  std::string topo_path;
  bool hop_count = false;
  std::vector<std::string> algo_tokens{"lfid"};
  int k = 10;
  int runs = 100;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string output;  // empty = stdout
  unsigned workers = 1;
  int repetitions = 3;
  FailureMode mode = FailureMode::Link;
  Vantage vantage = Vantage::Adjacent;
};

Topology load(const CliConfig& cfg) {
  return load_topology_file(
      cfg.topo_path, cfg.hop_count ? WeightMode::HopCount : WeightMode::Explicit);
}

std::vector<Algorithm> resolve_algorithms(const CliConfig& cfg,
                                          bool allow_opt) {
  std::vector<Algorithm> algos;
  for (const std::string& token : cfg.algo_tokens) {
    auto algo = parse_algorithm(token);
    if (!algo) throw CLI::ValidationError("unknown algorithm '" + token + "'");
    if (!algorithm_implemented(*algo)) {
      std::cerr << "note: " << token
                << " is an external comparison slot; skipping (column absent)\n";
      continue;
    }
    if (*algo == Algorithm::Opt && !allow_opt) {
      throw CLI::ValidationError("'opt' is not valid for this subcommand");
    }
    algos.push_back(*algo);
  }
  if (algos.empty()) throw CLI::ValidationError("no implemented algorithm selected");
  return algos;
}

std::string join_tokens(const std::vector<Algorithm>& algos) {
  std::string out;
  for (const Algorithm a : algos) {
    if (!out.empty()) out += ' ';
    out += algorithm_token(a);
  }
  return out;
}

// No partial files on error: write to a temp path, rename on success.
void emit(const CliConfig& cfg, const std::string& content) {
  if (cfg.output.empty()) {
    std::cout << content;
    return;
  }
  const std::string tmp = cfg.output + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + tmp + "'");
  }
  std::filesystem::rename(tmp, cfg.output);
}

std::string render_trials(const CliConfig& cfg, const OutputMeta& meta,
                          const Topology& topo,
                          const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  if (cfg.format == "json") {
    write_trials_json(out, meta, topo, records);
  } else {
    write_trials_csv(out, meta, topo, records);
  }
  return out.str();
}

int cmd_compute(const CliConfig& cfg) {
  const Topology topo = load(cfg);
  const auto algos = resolve_algorithms(cfg, /*allow_opt=*/false);
  std::ostringstream out;
  for (const Algorithm algo : algos) {
    const AllNodeFib fib = compute_fib(topo, algo, cfg.workers);
    if (algos.size() > 1) out << "# algorithm: " << algorithm_token(algo) << "\n";
    dump_fib_csv(fib, topo, out);
  }
  emit(cfg, out.str());
  return 0;
}

int cmd_verify(const CliConfig& cfg) {
  const Topology topo = load(cfg);
  const auto algos = resolve_algorithms(cfg, /*allow_opt=*/false);
  bool all_clear = true;
  for (const Algorithm algo : algos) {
    const AllNodeFib fib = compute_fib(topo, algo, cfg.workers);
    int clean = 0;
    for (NodeId dst = 0; dst < topo.node_count(); ++dst) {
      const WalkVerdict verdict = enumerate_all_walks(fib, dst);
      if (verdict.loop_free) {
        ++clean;
        continue;
      }
      all_clear = false;
      std::cout << algorithm_token(algo) << ": counterexample for destination "
                << topo.label(dst) << ":";
      for (NodeId x : verdict.counterexample) std::cout << ' ' << topo.label(x);
      std::cout << "\n";
    }
    std::cout << algorithm_token(algo) << " loop_free: " << clean << "/"
              << topo.node_count() << " destinations\n";
  }
  return all_clear ? 0 : 2;
}

int cmd_paths(const CliConfig& cfg) {
  const Topology topo = load(cfg);
  const auto algos = resolve_algorithms(cfg, /*allow_opt=*/true);
  ExperimentConfig config{cfg.k, cfg.runs, cfg.seed, cfg.workers};
  std::vector<TrialRecord> records;
  for (const Algorithm algo : algos) {
    std::optional<AllNodeFib> fib;
    if (algo != Algorithm::Opt) fib = compute_fib(topo, algo, cfg.workers);
    auto part = k_path_stats(topo, fib ? &*fib : nullptr,
                             algorithm_token(algo), config);
    records.insert(records.end(), part.begin(), part.end());
  }
  OutputMeta meta{"lfid-trials/1", topology_hash(topo), join_tokens(algos),
                  "k=" + std::to_string(cfg.k), {}};
  emit(cfg, render_trials(cfg, meta, topo, records));
  return 0;
}

int cmd_single_failure(const CliConfig& cfg) {
  const Topology topo = load(cfg);
  const auto algos = resolve_algorithms(cfg, /*allow_opt=*/true);
  std::vector<TrialRecord> records;
  for (const Algorithm algo : algos) {
    std::optional<AllNodeFib> fib;
    if (algo != Algorithm::Opt) fib = compute_fib(topo, algo, cfg.workers);
    auto part = single_failure_experiment(topo, fib ? &*fib : nullptr,
                                          algorithm_token(algo), cfg.mode,
                                          cfg.vantage, cfg.workers);
    records.insert(records.end(), part.begin(), part.end());
  }
  OutputMeta meta{"lfid-trials/1", topology_hash(topo), join_tokens(algos),
                  std::string("mode=") +
                      (cfg.mode == FailureMode::Link ? "link" : "node") +
                      " vantage=" +
                      (cfg.vantage == Vantage::Adjacent ? "adjacent" : "source"),
                  {}};
  emit(cfg, render_trials(cfg, meta, topo, records));
  return 0;
}

int cmd_multi_failure(const CliConfig& cfg) {
  const Topology topo = load(cfg);
  const auto algos = resolve_algorithms(cfg, /*allow_opt=*/true);
  ExperimentConfig config{cfg.k, cfg.runs, cfg.seed, cfg.workers};
  std::vector<TrialRecord> records;
  for (const Algorithm algo : algos) {
    std::optional<AllNodeFib> fib;
    if (algo != Algorithm::Opt) fib = compute_fib(topo, algo, cfg.workers);
    auto part = multi_failure_experiment(topo, fib ? &*fib : nullptr,
                                         algorithm_token(algo), config);
    records.insert(records.end(), part.begin(), part.end());
  }
  OutputMeta meta{"lfid-trials/1", topology_hash(topo), join_tokens(algos),
                  "k=" + std::to_string(cfg.k) +
                      " runs=" + std::to_string(cfg.runs),
                  cfg.seed};
  emit(cfg, render_trials(cfg, meta, topo, records));
  return 0;
}

int cmd_bench(const CliConfig& cfg) {
  const Topology topo = load(cfg);
  const auto algos = resolve_algorithms(cfg, /*allow_opt=*/false);
  std::vector<unsigned> worker_counts{1};
  if (cfg.workers > 1) worker_counts.push_back(cfg.workers);
  const auto rows = runtime_benchmark(
      topo, std::filesystem::path(cfg.topo_path).stem().string(), algos,
      cfg.repetitions, worker_counts);
  OutputMeta meta{"lfid-bench/1", topology_hash(topo), join_tokens(algos),
                  "repetitions=" + std::to_string(cfg.repetitions), {}};
  std::ostringstream out;
  if (cfg.format == "json") {
    write_bench_json(out, meta, rows);
  } else {
    write_bench_csv(out, meta, rows);
  }
  emit(cfg, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multipath FIB computation and failure-resilience experiments"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string mode_token = "link";
  std::string vantage_token = "adjacent";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--topo", cfg.topo_path, "edge-list topology file")
        ->required();
    cmd->add_flag("--hop-count", cfg.hop_count,
                  "ignore file weights, use hop count");
    cmd->add_option("--algo", cfg.algo_tokens,
                    "algorithms: ecmp dw dwe lfid opt (default lfid)");
    cmd->add_option("--workers", cfg.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output,-o", cfg.output, "output file (default stdout)");
    cmd->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* compute = app.add_subcommand("compute", "emit the FIB dump");
  add_common(compute);

  auto* verify = app.add_subcommand(
      "verify", "exhaustive loop-freedom check over every destination");
  add_common(verify);

  auto* paths = app.add_subcommand("paths", "K-shortest path count and stretch");
  add_common(paths);
  paths->add_option("--k", cfg.k, "max paths")->check(CLI::PositiveNumber);

  auto* single = app.add_subcommand("single-failure",
                                    "single link/node failure resilience");
  add_common(single);
  single->add_option("--mode", mode_token, "link or node")
      ->check(CLI::IsMember({"link", "node"}));
  single->add_option("--vantage", vantage_token, "adjacent or source")
      ->check(CLI::IsMember({"adjacent", "source"}));

  auto* multi = app.add_subcommand("multi-failure",
                                   "iterated random failure chains");
  add_common(multi);
  multi->add_option("--k", cfg.k, "max chained failures")
      ->check(CLI::PositiveNumber);
  multi->add_option("--runs", cfg.runs, "repetitions")
      ->check(CLI::PositiveNumber);
  multi->add_option("--seed", cfg.seed, "RNG seed");

  auto* bench = app.add_subcommand("bench", "FIB computation runtime");
  add_common(bench);
  bench->add_option("--repetitions", cfg.repetitions, "timed repetitions")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  cfg.mode = mode_token == "node" ? FailureMode::Node : FailureMode::Link;
  cfg.vantage = vantage_token == "source" ? Vantage::Source : Vantage::Adjacent;

  try {
    if (compute->parsed()) return cmd_compute(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (paths->parsed()) return cmd_paths(cfg);
    if (single->parsed()) return cmd_single_failure(cfg);
    if (multi->parsed()) return cmd_multi_failure(cfg);
    if (bench->parsed()) return cmd_bench(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
