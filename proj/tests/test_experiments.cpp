#include <doctest.h>

#include <sstream>

#include "lfid/experiments.hpp"
#include "lfid/lfid_pipeline.hpp"
#include "test_util.hpp"

using namespace lfid;

namespace {

std::string records_csv(const Topology& topo,
                        const std::vector<TrialRecord>& records) {
  OutputMeta meta;
  meta.schema = "test";
  meta.topology_hash = topology_hash(topo);
  std::ostringstream out;
  write_trials_csv(out, meta, topo, records);
  return out.str();
}

}  // namespace

TEST_CASE("k_path_stats on the 5-ring: exactly two paths everywhere") {
  const Topology topo = testutil::ring(5);
  ExperimentConfig config;
  config.k = 4;
  const auto records = k_path_stats(topo, nullptr, "opt", config);
  const auto cells = aggregate_k_paths(records);
  CHECK(cells.at(1).pct == doctest::Approx(100.0));
  CHECK(cells.at(2).pct == doctest::Approx(100.0));
  CHECK(cells.at(3).pct == doctest::Approx(0.0));
  // OPT paths are the undirected reference, so stretch is identically 1.
  REQUIRE(cells.at(1).avg_stretch.has_value());
  CHECK(*cells.at(1).avg_stretch == doctest::Approx(1.0));
  REQUIRE(cells.at(2).avg_stretch.has_value());
  CHECK(*cells.at(2).avg_stretch == doctest::Approx(1.0));
  CHECK(!cells.at(3).avg_stretch.has_value());
  // Cost columns still carry the raw detour costs.
  for (const TrialRecord& r : records) {
    if (r.k == 2 && r.recovered) {
      CHECK(*r.path_cost >= 3000);
      CHECK(*r.path_cost == *r.optimal_cost);
    }
  }
}

TEST_CASE("k_path_stats with a FIB restricts to FIB arcs") {
  const Topology topo = testutil::ring(6);
  const AllNodeFib dw = compute_dw(topo);
  ExperimentConfig config;
  config.k = 3;
  const auto cells = aggregate_k_paths(k_path_stats(topo, &dw, "dw", config));
  CHECK(cells.at(1).pct == doctest::Approx(100.0));
  // Only antipodal pairs (1 in 5) have a second downward path.
  CHECK(cells.at(2).pct == doctest::Approx(20.0));

  const AllNodeFib lfid = compute_lfid(topo);
  const auto lcells =
      aggregate_k_paths(k_path_stats(topo, &lfid, "lfid", config));
  CHECK(lcells.at(2).pct == doctest::Approx(100.0));
}

TEST_CASE("k=1 stretch is exactly 1.0 for every algorithm") {
  for (const Topology& topo : testutil::small_corpus(6, 909)) {
    ExperimentConfig config;
    config.k = 2;
    for (Algorithm algo : {Algorithm::Ecmp, Algorithm::Dw, Algorithm::Dwe,
                           Algorithm::Lfid}) {
      const AllNodeFib fib = compute_fib(topo, algo);
      const auto records =
          k_path_stats(topo, &fib, algorithm_token(algo), config);
      for (const TrialRecord& r : records) {
        if (r.k == 1) {
          REQUIRE(r.stretch.has_value());
          CHECK(*r.stretch == doctest::Approx(1.0));
        }
      }
    }
  }
}

TEST_CASE("aggregate_k_paths suppresses stretch under 5% availability") {
  std::vector<TrialRecord> records;
  for (int i = 0; i < 100; ++i) {
    TrialRecord r;
    r.k = 1;
    r.src = 0;
    r.dst = 1;
    r.recovered = i < 4;  // 4% have the path
    if (r.recovered) r.stretch = 2.0;
    records.push_back(r);
  }
  const auto cells = aggregate_k_paths(records);
  CHECK(cells.at(1).pct == doctest::Approx(4.0));
  CHECK(!cells.at(1).avg_stretch.has_value());
}

TEST_CASE("single link failure on the triangle") {
  const Topology topo = testutil::ring(3);
  const AllNodeFib dw = compute_dw(topo);
  const AllNodeFib lfid = compute_lfid(topo);
  const auto opt = single_failure_experiment(topo, nullptr, "opt",
                                             FailureMode::Link,
                                             Vantage::Adjacent);
  const auto dwr = single_failure_experiment(topo, &dw, "dw",
                                             FailureMode::Link,
                                             Vantage::Adjacent);
  const auto lr = single_failure_experiment(topo, &lfid, "lfid",
                                            FailureMode::Link,
                                            Vantage::Adjacent);
  REQUIRE(!opt.empty());
  for (const TrialRecord& r : opt) CHECK(r.recovered);
  for (const TrialRecord& r : dwr) CHECK(!r.recovered);
  for (const TrialRecord& r : lr) CHECK(r.recovered);

  CHECK(*protection_relative_to_opt(dwr, opt) == doctest::Approx(0.0));
  CHECK(*protection_relative_to_opt(lr, opt) == doctest::Approx(100.0));
}

TEST_CASE("single node failure skips paths without intermediate nodes") {
  const Topology topo = testutil::ring(3);
  // Every shortest path is a single link, so there is nothing to fail.
  CHECK(single_failure_experiment(topo, nullptr, "opt", FailureMode::Node,
                                  Vantage::Adjacent)
            .empty());

  const Topology path = testutil::path_graph(3);
  const auto records = single_failure_experiment(path, nullptr, "opt",
                                                 FailureMode::Node,
                                                 Vantage::Adjacent);
  // Only the 0<->2 pairs cross node 1, and its loss cuts the graph.
  REQUIRE(records.size() == 2);
  for (const TrialRecord& r : records) CHECK(!r.recovered);
}

TEST_CASE("source vantage can differ from adjacent vantage") {
  // DW gives node a two downward options (b, d) but node b only the direct
  // link. The canonical a-c path runs a-b-c; failing link b-c strands the
  // adjacent node b, while backtracking to the source finds a-d-c.
  std::istringstream in("a b 1\nb c 1\na d 2\nd c 1\n");
  const Topology topo = load_topology(in);
  const AllNodeFib dw = compute_dw(topo);
  const NodeId a = topo.node_by_label("a");
  const NodeId c = topo.node_by_label("c");

  const auto adjacent = single_failure_experiment(topo, &dw, "dw",
                                                  FailureMode::Link,
                                                  Vantage::Adjacent);
  const auto source = single_failure_experiment(topo, &dw, "dw",
                                                FailureMode::Link,
                                                Vantage::Source);
  int adj_ok = 0, src_ok = 0;
  for (const TrialRecord& r : adjacent) {
    if (r.src == a && r.dst == c && r.recovered) ++adj_ok;
  }
  for (const TrialRecord& r : source) {
    if (r.src == a && r.dst == c && r.recovered) ++src_ok;
  }
  CHECK(adj_ok == 1);  // only the first-hop failure is survivable in place
  CHECK(src_ok == 2);
}

TEST_CASE("protection_relative_to_opt is absent when OPT never recovers") {
  const Topology topo = testutil::path_graph(3);
  const auto opt = single_failure_experiment(topo, nullptr, "opt",
                                             FailureMode::Node,
                                             Vantage::Adjacent);
  REQUIRE(!opt.empty());
  CHECK(!protection_relative_to_opt(opt, opt).has_value());
}

TEST_CASE("multi-failure chains on the 6-ring with LFID") {
  const Topology topo = testutil::ring(6);
  const AllNodeFib lfid = compute_lfid(topo);
  ExperimentConfig config;
  config.k = 3;
  config.runs = 5;
  config.seed = 11;
  const auto records = multi_failure_experiment(topo, &lfid, "lfid", config);
  const auto cells = aggregate_multi_failure(records);
  // Any single ring link failure is survivable.
  CHECK(cells.at(1).recovery_pct == doctest::Approx(100.0));
  CHECK(cells.at(1).chains == 5 * 6 * 5);
  for (const TrialRecord& r : records) {
    if (r.recovered) {
      REQUIRE(r.stretch.has_value());
      CHECK(*r.stretch >= 1.0);
      // First failure: the single surviving route is also the best
      // continuation from the vantage node.
      if (r.k == 1) CHECK(*r.stretch == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("multi-failure output is deterministic across worker counts") {
  const Topology topo = random_connected_graph(12, 8, 1, 5, 3);
  const AllNodeFib lfid = compute_lfid(topo);
  ExperimentConfig base;
  base.k = 4;
  base.runs = 3;
  base.seed = 99;
  ExperimentConfig parallel = base;
  parallel.workers = 4;
  const auto a = multi_failure_experiment(topo, &lfid, "lfid", base);
  const auto b = multi_failure_experiment(topo, &lfid, "lfid", parallel);
  CHECK(records_csv(topo, a) == records_csv(topo, b));
  const auto again = multi_failure_experiment(topo, &lfid, "lfid", base);
  CHECK(records_csv(topo, a) == records_csv(topo, again));
}

TEST_CASE("trial CSV carries metadata header and fixed-precision stretch") {
  const Topology topo = testutil::ring(3);
  TrialRecord r;
  r.algorithm = "lfid";
  r.scenario = "kpaths";
  r.src = 0;
  r.dst = 2;
  r.k = 1;
  r.recovered = true;
  r.path_cost = 1000;
  r.optimal_cost = 1000;
  r.stretch = 1.0;

  OutputMeta meta;
  meta.schema = "trials/1";
  meta.topology_hash = topology_hash(topo);
  meta.algorithms = "lfid";
  meta.config = "k=1";
  meta.seed = 7;

  std::ostringstream out;
  write_trials_csv(out, meta, topo, {r});
  const std::string text = out.str();
  CHECK(text.find("# schema: trials/1") != std::string::npos);
  CHECK(text.find("# seed: 7") != std::string::npos);
  CHECK(text.find("# rng: ") != std::string::npos);
  CHECK(text.find("algorithm,scenario,run,src,dst,k,recovered,") !=
        std::string::npos);
  CHECK(text.find("lfid,kpaths,0,r0,r2,1,1,1000,1000,1.000000") !=
        std::string::npos);
}

TEST_CASE("trial JSON round-trips through the writer") {
  const Topology topo = testutil::ring(3);
  TrialRecord r;
  r.algorithm = "dw";
  r.scenario = "single";
  r.src = 1;
  r.dst = 0;
  r.k = 1;

  OutputMeta meta;
  meta.schema = "trials/1";
  meta.topology_hash = topology_hash(topo);
  std::ostringstream out;
  write_trials_json(out, meta, topo, {r});
  CHECK(out.str().find("\"schema\"") != std::string::npos);
  CHECK(out.str().find("\"dw\"") != std::string::npos);
}

TEST_CASE("runtime_benchmark produces one row per cell") {
  const Topology topo = testutil::ring(6);
  const auto rows = runtime_benchmark(topo, "ring6",
                                      {Algorithm::Dw, Algorithm::Lfid}, 2,
                                      {1u, 2u});
  CHECK(rows.size() == 2 * 2 * 2);
  for (const BenchRow& row : rows) {
    CHECK(row.topology == "ring6");
    CHECK(row.millis >= 0.0);
  }
  std::ostringstream out;
  OutputMeta meta;
  meta.schema = "bench/1";
  write_bench_csv(out, meta, rows);
  CHECK(out.str().find("topology,algorithm,workers,repetition,millis") !=
        std::string::npos);
}
