#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rfwsn/energy.hpp"
#include "rfwsn/harvester.hpp"
#include "rfwsn/routing/protocol.hpp"
#include "rfwsn/sim/scenario.hpp"
#include "rfwsn/sim/topology.hpp"
#include "rfwsn/types.hpp"

namespace rfwsn::sim {

enum class EventKind : std::uint8_t {
  TransmissionComplete = 0,
  RecordTimeout = 1,
  AntLaunch = 2,
  CbrGenerate = 3,
  HarvestTick = 4,
  MetricSample = 5,
};

struct MetricSample {
  double time_s = 0.0;
  double average_residual = 0.0;
  double minimum_residual = 0.0;
  std::uint64_t packets_delivered = 0;
  std::uint64_t packets_generated = 0;
  std::uint64_t ants_launched = 0;
  std::uint64_t ants_completed = 0;

  friend bool operator==(const MetricSample&, const MetricSample&) = default;
};

struct MetricsTimeline {
  std::vector<MetricSample> samples;

  friend bool operator==(const MetricsTimeline&, const MetricsTimeline&) = default;
};

/// Where one node's charge went during a run.
struct NodeLedger {
  std::array<std::int64_t, energy::kRadioStateCount> state_ns{};
  double drawn_mah = 0.0;             // actually removed from the battery
  double harvest_credited_mah = 0.0;  // actually added (after saturation)
  double harvest_offered_mah = 0.0;   // current x tick, before saturation
  std::int64_t depleted_at_ns = -1;   // -1: never depleted

  std::int64_t total_ns() const;
};

struct NodeReport {
  NodeId id = kNoNode;
  Position position;
  double initial_mah = 0.0;
  double final_mah = 0.0;
  double harvest_current_ua = 0.0;
  NodeLedger ledger;
};

struct RunCounters {
  std::uint64_t packets_generated = 0;
  std::uint64_t packets_delivered = 0;
  std::array<std::uint64_t, routing::kDropReasonCount> packets_dropped{};
  std::uint64_t packets_in_flight = 0;
  std::uint64_t messages_generated = 0;
  std::uint64_t messages_reassembled = 0;
  std::uint64_t reassembly_errors = 0;
  std::uint64_t ants_launched = 0;
  std::uint64_t ants_arrived = 0;
  std::uint64_t ants_completed = 0;
  std::uint64_t ants_eliminated = 0;
  std::uint64_t ants_lost = 0;
  std::uint64_t deposit_clamps = 0;
  std::uint64_t frames_sent = 0;
  std::uint64_t events_processed = 0;
  std::uint64_t events_beyond_horizon = 0;
  std::uint64_t causality_violations = 0;

  std::uint64_t packets_dropped_total() const;
};

struct RunResult {
  Scenario scenario;
  Topology topology;
  MetricsTimeline timeline;
  std::vector<NodeReport> nodes;
  RunCounters counters;
  /// (source, time) of every CBR message, in generation order.
  std::vector<std::pair<NodeId, SimTime>> generation_log;
  /// Routing-table dump taken at the horizon (CSV).
  std::string routing_tables;
};

/// Resolves the scenario's harvest curve (embedded, or from curve_file).
harvest::HarvestCurve resolve_curve(const HarvestSetup& setup);

/// Runs one scenario to its horizon. Throws std::invalid_argument for an
/// invalid scenario and TopologyError when no connected placement exists.
RunResult run(const Scenario& scenario);

/// Same, on a caller-supplied topology (node_count must match).
RunResult run(const Scenario& scenario, const Topology& topology);

}  // namespace rfwsn::sim
