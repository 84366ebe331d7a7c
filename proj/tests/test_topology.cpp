#include <doctest.h>

#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "lfid/topology.hpp"
#include "test_util.hpp"

using namespace lfid;

namespace {

// Label-keyed link set, for comparing topologies across id remapping.
std::set<std::tuple<std::string, std::string, Cost>> link_set(
    const Topology& topo) {
  std::set<std::tuple<std::string, std::string, Cost>> out;
  for (const Link& l : topo.links()) {
    std::string a = topo.label(l.a), b = topo.label(l.b);
    if (b < a) std::swap(a, b);
    out.insert({a, b, l.weight});
  }
  return out;
}

}  // namespace

TEST_CASE("triangle edge list parses") {
  std::istringstream in("A B 1\nB C 1\nC A 1\n");
  const Topology topo = load_topology(in);
  CHECK(topo.node_count() == 3);
  CHECK(topo.link_count() == 3);
  for (const Link& l : topo.links()) CHECK(l.weight == 1000);
  CHECK(topo.connected());
}

TEST_CASE("bundled Abilene has 11 nodes, 14 links, mean degree 2.55") {
  const Topology topo = load_topology_file(testutil::data_path("abilene.txt"));
  CHECK(topo.node_count() == 11);
  CHECK(topo.link_count() == 14);
  CHECK(2.0 * topo.link_count() / topo.node_count() ==
        doctest::Approx(2.55).epsilon(0.01));
  CHECK(topo.connected());
}

TEST_CASE("parser reports malformed input with line numbers") {
  SUBCASE("self-loop") {
    std::istringstream in("A A 1\n");
    CHECK_THROWS_WITH_AS(load_topology(in),
                         doctest::Contains("line 1"), TopologyError);
  }
  SUBCASE("duplicate link") {
    std::istringstream in("A B 1\nB A 2\n");
    CHECK_THROWS_WITH_AS(load_topology(in),
                         doctest::Contains("line 2"), TopologyError);
  }
  SUBCASE("bad weight") {
    std::istringstream in("A B x\n");
    CHECK_THROWS_AS(load_topology(in), TopologyError);
  }
  SUBCASE("zero weight") {
    std::istringstream in("A B 0\n");
    CHECK_THROWS_AS(load_topology(in), TopologyError);
  }
  SUBCASE("too many fraction digits") {
    std::istringstream in("A B 1.0005\n");
    CHECK_THROWS_AS(load_topology(in), TopologyError);
  }
  SUBCASE("missing second node") {
    std::istringstream in("A\n");
    CHECK_THROWS_AS(load_topology(in), TopologyError);
  }
}

TEST_CASE("weights become milli-units; hop-count mode overrides") {
  std::istringstream in("A B 22.5\nB C 3\n");
  const Topology topo = load_topology(in);
  CHECK(topo.link_weight(0, 1) == 22500);
  CHECK(topo.link_weight(1, 2) == 3000);

  std::istringstream in2("A B 22.5\nB C 3\n");
  const Topology hop = load_topology(in2, WeightMode::HopCount);
  CHECK(hop.link_weight(0, 1) == 1000);
  CHECK(hop.link_weight(1, 2) == 1000);
}

TEST_CASE("omitted weight defaults to 1.0; comments and blanks ignored") {
  std::istringstream in("# header\nA B\n\nB C 2 # trailing comment\n");
  const Topology topo = load_topology(in);
  CHECK(topo.link_weight(0, 1) == 1000);
  CHECK(topo.link_weight(1, 2) == 2000);
}

TEST_CASE("serialize / load round-trips to an equivalent topology") {
  const auto graphs = testutil::small_corpus(20, 77);
  for (const Topology& topo : graphs) {
    std::istringstream in(serialize_topology(topo));
    const Topology back = load_topology(in);
    CHECK(back.node_count() == topo.node_count());
    CHECK(link_set(back) == link_set(topo));
  }
  const Topology abilene =
      load_topology_file(testutil::data_path("abilene.txt"));
  std::istringstream in(serialize_topology(abilene));
  CHECK(link_set(load_topology(in)) == link_set(abilene));
}

TEST_CASE("random_connected_graph forced small cases") {
  const Topology two = random_connected_graph(2, 0, 1, 1, 7);
  CHECK(two.node_count() == 2);
  CHECK(two.link_count() == 1);
  CHECK(two.links()[0].weight == 1000);

  const Topology tree = random_connected_graph(5, 0, 1, 5, 99);
  CHECK(tree.link_count() == 4);
  CHECK(tree.connected());
}

TEST_CASE("random_connected_graph is seed-deterministic") {
  const Topology a = random_connected_graph(9, 6, 1, 10, 42);
  const Topology b = random_connected_graph(9, 6, 1, 10, 42);
  CHECK(a.link_count() == 14);
  CHECK(a.connected());
  CHECK(a == b);
  const Topology c = random_connected_graph(9, 6, 1, 10, 43);
  CHECK(!(a == c));
}

TEST_CASE("random_connected_graph rejects infeasible edge counts") {
  CHECK_THROWS_AS(random_connected_graph(4, 4, 1, 1, 1), TopologyError);
  CHECK_THROWS_AS(random_connected_graph(1, 0, 1, 1, 1), TopologyError);
  CHECK_THROWS_AS(random_connected_graph(4, 0, 0, 1, 1), TopologyError);
}

TEST_CASE("corpus graphs are connected and scaling keeps adjacency") {
  for (const Topology& topo : testutil::small_corpus(50, 123)) {
    REQUIRE(topo.connected());
    const Topology scaled = topo.scaled(7);
    for (NodeId x = 0; x < topo.node_count(); ++x) {
      REQUIRE(scaled.neighbors(x).size() == topo.neighbors(x).size());
      for (std::size_t i = 0; i < topo.neighbors(x).size(); ++i) {
        CHECK(scaled.neighbors(x)[i].id == topo.neighbors(x)[i].id);
        CHECK(scaled.neighbors(x)[i].weight ==
              topo.neighbors(x)[i].weight * 7);
      }
    }
  }
}

TEST_CASE("disconnected input is accepted and tracked per component") {
  std::istringstream in("A B 1\nC D 1\n");
  const Topology topo = load_topology(in);
  CHECK(topo.component_count() == 2);
  CHECK(topo.component(0) == topo.component(1));
  CHECK(topo.component(0) != topo.component(2));
}
