#include <doctest.h>

#include "oracles.hpp"
#include "rfwsn/rng.hpp"
#include "rfwsn/routing/ant_node.hpp"

using namespace rfwsn;
using namespace rfwsn::routing;

namespace {

SimTime secs(double s) { return SimTime::from_seconds(s); }

}  // namespace

TEST_CASE("forward ant memory keeps the last two nodes") {
  ForwardAnt a;
  CHECK(a.memory_size() == 0);
  a.remember(4);
  CHECK(a.in_memory(4));
  CHECK_FALSE(a.in_memory(kNoNode));
  a.remember(7);
  a.remember(9);
  CHECK(a.memory_size() == 2);
  CHECK_FALSE(a.in_memory(4));
  CHECK(a.memory() == std::array<NodeId, 2>{7, 9});
}

TEST_CASE("forward ant energy statistics") {
  ForwardAnt a;
  a.record_energy(1.5);
  a.record_energy(0.5);
  a.record_energy(1.0);
  CHECK(a.min_energy == 0.5);
  CHECK(a.avg_energy == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(a.energy_samples == 3);
}

TEST_CASE("ant records expire") {
  AntRecordStore s;
  s.store({1, 2, 3, secs(5)});
  CHECK(s.find(1, secs(4.999)) != nullptr);
  CHECK(s.find(1, secs(5)) == nullptr);
  CHECK(s.size() == 0);
  s.store({1, 2, 3, secs(5)});
  s.store({2, 2, 3, secs(10)});
  CHECK(s.purge_expired(secs(6)) == 1);
  CHECK(s.size() == 1);
  s.store({2, 4, 5, secs(12)});
  CHECK(s.size() == 1);
  CHECK(s.find(2, secs(11))->previous_node == 4);
}

TEST_CASE("forward-ant flow through a line 0 - 1 - 2 (sink)") {
  const ProtocolParams params;
  std::vector<AntNode> nodes;
  const Adjacency adj{{1}, {0, 2}, {1}};
  for (NodeId i = 0; i < 3; ++i) {
    nodes.emplace_back(i, 2, ProtocolKind::EEABR, params);
    nodes.back().initialize(adj[i]);
  }
  Rng rng(1);
  ForwardAnt ant;
  ant.id = 77;
  ant.source = 0;
  ant.destination = 2;

  const NeighborEnergies at0{{1, 1.8}};
  auto o = nodes[0].handle_forward_ant(ant, kNoNode, secs(0), 2.0, at0, rng);
  CHECK(o.verdict == ForwardVerdict::Forwarded);
  CHECK(o.next == 1);
  CHECK(ant.hops == 0);

  // Node 1 must not send the ant back to 0 (memory).
  const NeighborEnergies at1{{0, 2.0}, {2, 1.0}};
  o = nodes[1].handle_forward_ant(ant, 0, secs(0.1), 1.8, at1, rng);
  CHECK(o.verdict == ForwardVerdict::Forwarded);
  CHECK(o.next == 2);
  CHECK(ant.hops == 1);

  o = nodes[2].handle_forward_ant(ant, 1, secs(0.2), 1.0, {}, rng);
  CHECK(o.verdict == ForwardVerdict::ArrivedAtSink);
  CHECK(ant.hops == 2);
  CHECK(ant.min_energy == 1.8);
  CHECK(ant.avg_energy == doctest::Approx(1.9).epsilon(1e-15));

  auto [back, deposit] = nodes[2].make_backward_ant(ant);
  // 1 / (2 - (1.8 - 2) / (1.9 - 2)) = 1 / (2 - 2): guarded.
  CHECK(deposit.clamped);
  CHECK(back.hops_from_sink == 1);
  const auto first = nodes[2].backward_first_hop(ant, secs(0.3));
  REQUIRE(first.has_value());
  CHECK(*first == 1);

  const double tau_before = nodes[1].table().pheromone(2, 2);
  auto b = nodes[1].handle_backward_ant(back, 2, secs(0.4));
  CHECK(b.verdict == BackwardVerdict::Forwarded);
  CHECK(b.next == 0);
  CHECK(nodes[1].table().pheromone(2, 2) ==
        doctest::Approx(0.9 * tau_before + deposit.value / 1.0).epsilon(1e-12));
  CHECK(back.hops_from_sink == 2);

  b = nodes[0].handle_backward_ant(back, 1, secs(0.5));
  CHECK(b.verdict == BackwardVerdict::Completed);

  SUBCASE("revisiting a node that holds the record eliminates the ant") {
    ForwardAnt again;
    again.id = 5;
    again.destination = 2;
    nodes[1].records().store({5, 0, 2, secs(100)});
    const auto e = nodes[1].handle_forward_ant(again, 0, secs(1), 1.0, at1, rng);
    CHECK(e.verdict == ForwardVerdict::Eliminated);
    CHECK(e.reason == Elimination::Loop);
  }
  SUBCASE("backward ant after the record timed out is lost") {
    ForwardAnt late;
    late.id = 6;
    late.source = 0;
    late.destination = 2;
    nodes[1].handle_forward_ant(late, 0, secs(10), 1.0, at1, rng);
    BackwardAnt bl{6, 0, 2, 1.0, 1};
    CHECK(nodes[1].handle_backward_ant(bl, 2, secs(10) + params.record_timeout).verdict ==
          BackwardVerdict::Lost);
  }
}

TEST_CASE("dead end eliminates the ant") {
  const ProtocolParams params;
  AntNode n(1, 5, ProtocolKind::IEEABR, params);
  const std::vector<NodeId> nbrs{0};
  n.initialize(nbrs);
  ForwardAnt a;
  a.id = 1;
  a.destination = 5;
  a.remember(0);
  Rng rng(3);
  const auto o = n.handle_forward_ant(a, 0, SimTime{}, 1.0, NeighborEnergies{{0, 1.0}}, rng);
  CHECK(o.verdict == ForwardVerdict::Eliminated);
  CHECK(o.reason == Elimination::DeadEnd);
}

TEST_CASE("data packet handling") {
  const ProtocolParams params;
  AntNode n(1, 9, ProtocolKind::EEABR, params);
  const std::vector<NodeId> nbrs{0, 2, 3};
  n.initialize(nbrs);
  n.table().set_pheromone(9, 2, 5.0);
  const NeighborEnergies e{{0, 1.0}, {2, 1.0}, {3, 1.0}};

  DataPacket foreign;
  foreign.next_node = 4;
  const RoutingTable before = n.table();
  CHECK(n.handle_data_packet(foreign, 0, e).verdict == DataVerdict::DiscardedOverheard);
  CHECK(n.table().entries(9) == before.entries(9));

  DataPacket p;
  p.next_node = 1;
  p.sequence_number = 42;
  p.visited_count = 3;
  const auto o = n.handle_data_packet(p, 0, e);
  CHECK(o.verdict == DataVerdict::Forwarded);
  CHECK(o.next == 2);
  CHECK(p.next_node == 2);
  CHECK(p.visited_count == 4);

  DataPacket dup;
  dup.next_node = 1;
  dup.sequence_number = 42;
  CHECK(n.handle_data_packet(dup, 3, e).verdict == DataVerdict::DiscardedDuplicate);

  SUBCASE("argmax skips the previous hop and breaks ties by id") {
    DataPacket q;
    q.next_node = 1;
    q.sequence_number = 43;
    const auto r = n.handle_data_packet(q, 2, e);
    CHECK(r.next == 0);
  }
  SUBCASE("sink delivers") {
    AntNode sink(9, 9, ProtocolKind::EEABR, params);
    DataPacket s;
    s.next_node = 9;
    CHECK(sink.handle_data_packet(s, 1, {}).verdict == DataVerdict::Delivered);
  }
}

TEST_CASE("destination-aware node sends data straight to an adjacent sink") {
  const ProtocolParams params;
  const std::vector<NodeId> nbrs{0, 2, 9};
  const NeighborEnergies e{{0, 2.0}, {2, 2.0}, {9, 0.1}};
  AntNode ie(1, 9, ProtocolKind::IEEABR, params);
  ie.initialize(nbrs);
  ie.table().set_pheromone(9, 2, 50.0);
  CHECK(*ie.data_next_hop(0, e) == 9);
  AntNode ee(1, 9, ProtocolKind::EEABR, params);
  ee.initialize(nbrs);
  ee.table().set_pheromone(9, 2, 50.0);
  CHECK(*ee.data_next_hop(0, e) == 2);
}

TEST_CASE("no directed edge is traversed twice by one ant (graphs up to 5 nodes)") {
  for (const auto kind : {ProtocolKind::IEEABR, ProtocolKind::EEABR}) {
    const oracle::LoopCheck c = oracle::exhaustive_ant_walks(5, kind);
    CHECK(c.graphs == 1 + 4 + 38 + 728);
    CHECK(c.walks > 0);
    CHECK(c.arrivals > 0);
    CHECK(c.repeated_edges == 0);
  }
}
