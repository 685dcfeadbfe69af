#include <doctest.h>

#include <cmath>
#include <sstream>

#include "rfwsn/sim/report.hpp"
#include "rfwsn/sim/simulator.hpp"

using namespace rfwsn;
using namespace rfwsn::sim;
using energy::RadioState;
using routing::ProtocolKind;

namespace {

std::int64_t state_ns(const NodeReport& n, RadioState s) {
  return n.ledger.state_ns[static_cast<std::size_t>(s)];
}

// initial - final == drawn - harvested, and drawn matches currents x times.
void check_ledger(const RunResult& r) {
  const std::int64_t horizon = SimTime::from_seconds(r.scenario.duration_s).ns();
  for (const auto& n : r.nodes) {
    CHECK(n.ledger.total_ns() == horizon);
    CHECK(std::abs((n.initial_mah - n.final_mah) -
                   (n.ledger.drawn_mah - n.ledger.harvest_credited_mah)) < 1e-6);
    if (n.ledger.depleted_at_ns >= 0) continue;
    double expected = 0.0;
    for (const auto s : energy::kAllRadioStates) {
      expected += r.scenario.consumption.state_current_ma(s) *
                  static_cast<double>(state_ns(n, s)) / 3.6e12;
    }
    CHECK(std::abs(n.ledger.drawn_mah - expected) < 1e-6);
  }
}

void check_conservation(const RunResult& r) {
  const RunCounters& c = r.counters;
  CHECK(c.packets_delivered <= c.packets_generated);
  CHECK(c.packets_delivered + c.packets_dropped_total() + c.packets_in_flight ==
        c.packets_generated);
  CHECK(c.causality_violations == 0);
  CHECK(c.reassembly_errors == 0);
}

void check_timeline(const RunResult& r) {
  const auto& s = r.timeline.samples;
  REQUIRE_FALSE(s.empty());
  CHECK(s.front().time_s == 0.0);
  CHECK(s.back().time_s == r.scenario.duration_s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(0.0 <= s[i].minimum_residual);
    CHECK(s[i].minimum_residual <= s[i].average_residual);
    CHECK(s[i].average_residual <= 1.0);
    if (i > 0) CHECK(s[i].time_s > s[i - 1].time_s);
  }
}

std::string timeline_csv(const RunResult& r) {
  std::ostringstream out;
  write_timeline_csv(out, r);
  return out.str();
}

}  // namespace

TEST_CASE("idle network drains the sleep current only") {
  Scenario s;
  s.traffic_enabled = false;
  const RunResult r = run(s);
  REQUIRE(r.nodes.size() == 10);
  for (const auto& n : r.nodes) {
    CHECK(n.initial_mah - n.final_mah == doctest::Approx(0.062).epsilon(1e-9));
    CHECK(state_ns(n, RadioState::Sleep) == 3'600'000'000'000);
  }
  CHECK(r.timeline.samples.size() == 61);
  check_ledger(r);
}

TEST_CASE("a harvester next to every node keeps batteries full") {
  Scenario s;
  s.traffic_enabled = false;
  s.area_width_m = s.area_height_m = 1.0;
  s.harvesting.enabled = true;
  s.harvesting.x_m = s.harvesting.y_m = 0.5;
  const RunResult r = run(s);
  CHECK(r.timeline.samples.back().average_residual == 1.0);
  for (const auto& n : r.nodes) {
    CHECK(n.harvest_current_ua > 62.0);
    CHECK(n.ledger.harvest_credited_mah < n.ledger.harvest_offered_mah);
  }
  check_ledger(r);
}

TEST_CASE("two-node exchange: exact radio time per state") {
  Scenario s;
  s.node_count = 2;
  s.protocol = ProtocolKind::MinHop;
  s.cbr_interval_s = 3600;
  const Topology topo = build_topology({{0, 0}, {10, 0}}, s.radio_range_m);
  const RunResult r = run(s, topo);
  REQUIRE(r.counters.messages_generated == 1);
  CHECK(r.counters.messages_reassembled == 1);
  CHECK(r.counters.packets_delivered == 4);

  const std::int64_t control = 2'048'000;          // 512 bits at 250 kb/s
  const std::int64_t packet = 4'000'000'000;       // 1 Mb at 250 kb/s, over 4 parts
  const std::int64_t proc = 5'000'000;             // 5 ms before every transmission
  const NodeReport& src = r.nodes[0];
  const NodeReport& sink = r.nodes[1];
  CHECK(state_ns(src, RadioState::Tx) == control + packet);
  CHECK(state_ns(src, RadioState::Idle) == 5 * proc);
  CHECK(state_ns(src, RadioState::Rx) == control);
  CHECK(state_ns(sink, RadioState::Rx) == control + packet);
  CHECK(state_ns(sink, RadioState::Tx) == control);
  CHECK(state_ns(sink, RadioState::Idle) == proc);
  check_ledger(r);
}

TEST_CASE("full-frame overhearing costs more listening than header-only") {
  Scenario s;
  s.protocol = ProtocolKind::MinHop;
  s.seed = 3;
  Scenario h = s;
  h.baseline_overhear = routing::OverhearPolicy::HeaderOnly;
  const RunResult full = run(s);
  const RunResult header = run(h);
  std::int64_t rx_full = 0, rx_header = 0;
  for (const auto& n : full.nodes) rx_full += state_ns(n, RadioState::Rx);
  for (const auto& n : header.nodes) rx_header += state_ns(n, RadioState::Rx);
  CHECK(rx_full > rx_header);
  CHECK(full.counters.packets_generated == header.counters.packets_generated);
}

TEST_CASE("ledger, conservation and timeline invariants across protocols and sizes") {
  for (const auto proto : {ProtocolKind::IEEABR, ProtocolKind::EEABR, ProtocolKind::MinHop}) {
    for (const double bits : {1e6, 1e3}) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        Scenario s;
        s.seed = seed;
        s.protocol = proto;
        s.packet_size_bits = bits;
        s.cbr_interval_s = bits > 1e4 ? 300 : 20;
        const RunResult r = run(s);
        check_ledger(r);
        check_conservation(r);
        check_timeline(r);
        CHECK(r.counters.packets_generated > 0);
        CHECK(r.counters.packets_delivered > 0);
      }
    }
  }
}

TEST_CASE("depleted nodes drop out and accounting still closes") {
  Scenario s;
  s.battery_capacity_mah = 0.5;
  s.battery_initial_mah = 0.5;
  s.cbr_interval_s = 30;
  for (const auto proto : {ProtocolKind::IEEABR, ProtocolKind::MinHop}) {
    s.protocol = proto;
    const RunResult r = run(s);
    std::size_t dead = 0;
    for (const auto& n : r.nodes) {
      if (n.ledger.depleted_at_ns >= 0) {
        ++dead;
        CHECK(n.final_mah == 0.0);
      }
      CHECK(n.ledger.total_ns() == 3'600'000'000'000);
      CHECK(std::abs((n.initial_mah - n.final_mah) - n.ledger.drawn_mah) < 1e-9);
    }
    CHECK(dead > 0);
    check_conservation(r);
    check_timeline(r);
    CHECK(r.timeline.samples.back().minimum_residual == 0.0);
  }
}

TEST_CASE("same seed, same bytes") {
  for (const auto proto : {ProtocolKind::IEEABR, ProtocolKind::EEABR, ProtocolKind::MinHop}) {
    Scenario s;
    s.seed = 11;
    s.protocol = proto;
    const RunResult a = run(s);
    const RunResult b = run(s);
    CHECK(a.timeline == b.timeline);
    CHECK(timeline_csv(a) == timeline_csv(b));
    CHECK(a.routing_tables == b.routing_tables);
  }
}

TEST_CASE("topology and traffic do not depend on the protocol") {
  Scenario s;
  s.seed = 5;
  std::vector<RunResult> runs;
  for (const auto proto : {ProtocolKind::IEEABR, ProtocolKind::EEABR, ProtocolKind::MinHop}) {
    s.protocol = proto;
    runs.push_back(run(s));
  }
  for (std::size_t i = 1; i < runs.size(); ++i) {
    CHECK(runs[i].topology == runs[0].topology);
    CHECK(runs[i].generation_log == runs[0].generation_log);
  }
  CHECK(runs[0].generation_log.size() == 9 * 12);
}

TEST_CASE("queue is drained up to the horizon") {
  Scenario s;
  s.duration_s = 95;
  s.sample_interval_s = 60;
  const RunResult r = run(s);
  CHECK(r.counters.causality_violations == 0);
  CHECK(r.counters.events_processed > 0);
  REQUIRE(r.timeline.samples.size() == 3);
  CHECK(r.timeline.samples[1].time_s == 60);
  CHECK(r.timeline.samples[2].time_s == 95);
}

TEST_CASE("invalid scenarios are refused") {
  Scenario s;
  s.node_count = 1;
  CHECK_THROWS_AS(run(s), std::invalid_argument);
  s = Scenario{};
  s.duration_s = 0;
  CHECK_THROWS_AS(run(s), std::invalid_argument);
  s = Scenario{};
  s.harvesting.enabled = true;
  s.harvesting.x_m = 500;
  CHECK_THROWS_AS(run(s), std::invalid_argument);
  s = Scenario{};
  s.node_count = 40;
  s.area_width_m = s.area_height_m = 5000;
  s.radio_range_m = 10;
  CHECK_THROWS_AS(run(s), TopologyError);
}
