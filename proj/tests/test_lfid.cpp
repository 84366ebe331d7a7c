#include <doctest.h>

#include <sstream>

#include "lfid/forwarding.hpp"
#include "lfid/lfid_pipeline.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace lfid;

TEST_CASE("6-ring: remove_loops deletes nothing, every node keeps 2 entries") {
  const Topology topo = testutil::ring(6);
  const AllNodeFib filled = fill_fib(topo);
  const AllNodeFib lfid = compute_lfid(topo);
  CHECK(lfid == filled);
  for (NodeId dst = 0; dst < 6; ++dst) {
    for (NodeId x = 0; x < 6; ++x) {
      if (x != dst) CHECK(lfid.at(x, dst).size() == 2);
    }
    CHECK(enumerate_all_walks(lfid, dst).loop_free);
  }
}

TEST_CASE("triangle: both upward entries survive") {
  const Topology topo = testutil::ring(3);
  const AllNodeFib lfid = compute_lfid(topo);
  for (NodeId dst = 0; dst < 3; ++dst) {
    for (NodeId x = 0; x < 3; ++x) {
      if (x == dst) continue;
      const NexthopList& entries = lfid.at(x, dst);
      REQUIRE(entries.size() == 2);
      CHECK(entries[0].kind == NexthopKind::Downward);
      CHECK(entries[1].kind == NexthopKind::Upward);
    }
    CHECK(enumerate_all_walks(lfid, dst).loop_free);
  }
}

TEST_CASE("remove_loops ordering: high-cost upward entries go first") {
  // sp to D: 3 = 1, 2 = 2, 1 = 3. Upward entries for dst D:
  // (3 -> 1) cost 8, (3 -> 2) cost 7, (2 -> 1) cost 5.
  // Node 3 is popped first (3 remaining entries vs 2) and loses both upward
  // entries; (2 -> 1) is then loop-safe and survives.
  std::istringstream in("D 3 1\n3 2 1\n2 1 1\n1 3 3\nD 1 5\n");
  const Topology topo = load_topology(in);
  const NodeId d = topo.node_by_label("D");
  const NodeId n1 = topo.node_by_label("1");
  const NodeId n2 = topo.node_by_label("2");
  const NodeId n3 = topo.node_by_label("3");

  const AllNodeFib filled = fill_fib(topo);
  REQUIRE(filled.at(n3, d).size() == 3);
  REQUIRE(filled.find(n3, d, n1)->cost == 8000);
  REQUIRE(filled.find(n3, d, n1)->kind == NexthopKind::Upward);
  REQUIRE(filled.find(n3, d, n2)->cost == 7000);
  REQUIRE(filled.find(n3, d, n2)->kind == NexthopKind::Upward);
  REQUIRE(filled.find(n2, d, n1)->cost == 5000);
  REQUIRE(filled.find(n2, d, n1)->kind == NexthopKind::Upward);

  const AllNodeFib pruned = remove_loops(filled, topo);
  CHECK(pruned.find(n3, d, n1) == nullptr);
  CHECK(pruned.find(n3, d, n2) == nullptr);
  CHECK(pruned.find(n3, d, d) != nullptr);
  CHECK(pruned.find(n2, d, n1) != nullptr);
  CHECK(pruned.find(n2, d, n3) != nullptr);
  CHECK(enumerate_all_walks(pruned, d).loop_free);
}

TEST_CASE("remove_dead_ends: single entry pointing back kills the upward arc") {
  AllNodeFib fib(4);
  fib.add(1, 0, {0, 1000, NexthopKind::Downward, {}});
  fib.add(2, 0, {1, 2000, NexthopKind::Downward, {}});
  fib.add(2, 0, {3, 4000, NexthopKind::Upward, {}});
  fib.add(3, 0, {2, 3000, NexthopKind::Downward, {}});

  const AllNodeFib pruned = remove_dead_ends(fib);
  CHECK(pruned.find(2, 0, 3) == nullptr);
  CHECK(pruned.find(2, 0, 1) != nullptr);
  CHECK(pruned.find(3, 0, 2) != nullptr);  // Downward entries are never deleted
}

TEST_CASE("remove_dead_ends cascades") {
  AllNodeFib fib(4);
  fib.add(1, 0, {0, 1000, NexthopKind::Downward, {}});
  fib.add(1, 0, {2, 5000, NexthopKind::Upward, {}});
  fib.add(2, 0, {1, 2000, NexthopKind::Downward, {}});
  fib.add(2, 0, {3, 6000, NexthopKind::Upward, {}});
  fib.add(3, 0, {2, 3000, NexthopKind::Downward, {}});

  const AllNodeFib pruned = remove_dead_ends(fib);
  // (2 -> 3) falls first; node 2 then has a single entry back to 1, so
  // (1 -> 2) falls on the rescan.
  CHECK(pruned.find(2, 0, 3) == nullptr);
  CHECK(pruned.find(1, 0, 2) == nullptr);
  CHECK(pruned.at(1, 0).size() == 1);
  CHECK(pruned.at(2, 0).size() == 1);
  CHECK(pruned.at(3, 0).size() == 1);
}

TEST_CASE("remove_dead_ends keeps entries whose target has other options") {
  AllNodeFib fib(4);
  fib.add(1, 0, {0, 1000, NexthopKind::Downward, {}});
  fib.add(2, 0, {1, 2000, NexthopKind::Downward, {}});
  fib.add(2, 0, {3, 6000, NexthopKind::Upward, {}});
  fib.add(3, 0, {2, 3000, NexthopKind::Downward, {}});
  fib.add(3, 0, {1, 4000, NexthopKind::Downward, {}});

  const AllNodeFib pruned = remove_dead_ends(fib);
  CHECK(pruned == fib);
}

TEST_CASE("Abilene: upward entries survive the pipeline") {
  const Topology topo = load_topology_file(testutil::data_path("abilene.txt"),
                                           WeightMode::HopCount);
  const AllNodeFib lfid = compute_lfid(topo);
  int upward = 0;
  for (NodeId x = 0; x < topo.node_count(); ++x) {
    for (NodeId dst = 0; dst < topo.node_count(); ++dst) {
      for (const NexthopEntry& e : lfid.at(x, dst)) {
        if (e.kind == NexthopKind::Upward) ++upward;
      }
    }
  }
  CHECK(upward > 0);
  for (NodeId dst = 0; dst < topo.node_count(); ++dst) {
    CHECK(enumerate_all_walks(lfid, dst).loop_free);
  }
}

TEST_CASE("pipeline invariants on the random corpus") {
  for (const Topology& topo : testutil::small_corpus(20, 4242)) {
    const AllNodeFib filled = fill_fib(topo);
    const AllNodeFib lfid = compute_lfid(topo);
    const int n = topo.node_count();

    for (NodeId x = 0; x < n; ++x) {
      for (NodeId dst = 0; dst < n; ++dst) {
        // Only deletions happen, and only of Upward entries.
        for (const NexthopEntry& e : lfid.at(x, dst)) {
          const NexthopEntry* orig = filled.find(x, dst, e.neighbor);
          REQUIRE(orig != nullptr);
          CHECK(orig->cost == e.cost);
          CHECK(orig->kind == e.kind);
        }
        for (const NexthopEntry& e : filled.at(x, dst)) {
          if (lfid.find(x, dst, e.neighbor) == nullptr) {
            CHECK(e.kind == NexthopKind::Upward);
          }
        }
        // No node is left stranded.
        if (x != dst) CHECK(!lfid.at(x, dst).empty());
      }
    }

    for (NodeId dst = 0; dst < n; ++dst) {
      const WalkVerdict verdict = enumerate_all_walks(lfid, dst);
      CHECK(verdict.loop_free);
      for (NodeId src = 0; src < n; ++src) {
        if (src == dst) continue;
        const auto walk = greedy_forward(lfid, topo, src, dst);
        REQUIRE(walk.has_value());
        CHECK(walk->nodes.size() <= static_cast<std::size_t>(n));
      }
    }
  }
}

TEST_CASE("pipeline output is independent of the worker count") {
  for (const Topology& topo : testutil::small_corpus(8, 7)) {
    PipelineOptions one, four;
    one.workers = 1;
    four.workers = 4;
    CHECK(compute_lfid(topo, one) == compute_lfid(topo, four));
  }
}
