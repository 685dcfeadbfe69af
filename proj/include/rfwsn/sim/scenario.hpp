#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "rfwsn/energy.hpp"
#include "rfwsn/harvester.hpp"
#include "rfwsn/routing/params.hpp"

namespace rfwsn::sim {

struct HarvestSetup {
  bool enabled = false;
  double x_m = 0.0;
  double y_m = 0.0;
  harvest::Receiver receiver = harvest::Receiver::P2110;
  harvest::Antenna antenna = harvest::Antenna::Dipole;
  std::string curve_file;  // empty: embedded curves

  friend bool operator==(const HarvestSetup&, const HarvestSetup&) = default;
};

/// Everything one simulation run depends on. Node node_count-1 is the sink.
struct Scenario {
  std::uint64_t seed = 1;
  std::size_t node_count = 10;
  double area_width_m = 200.0;
  double area_height_m = 200.0;
  double radio_range_m = 100.0;
  double data_rate_bps = 250'000.0;
  double packet_size_bits = 1'000'000.0;
  double control_packet_bits = 512.0;
  double header_bits = 64.0;
  bool traffic_enabled = true;  // false: no CBR data and no ants
  double cbr_interval_s = 300.0;
  double duration_s = 3600.0;
  double sample_interval_s = 60.0;
  double harvest_tick_s = 1.0;
  double processing_time_s = 0.005;

  routing::ProtocolKind protocol = routing::ProtocolKind::IEEABR;
  routing::OverhearPolicy baseline_overhear = routing::OverhearPolicy::FullFrame;
  routing::ProtocolParams protocol_params;

  energy::ConsumptionProfile consumption;
  double battery_capacity_mah = 1150.0;
  double battery_voltage_v = 3.7;
  double battery_initial_mah = 1150.0;
  double peukert_n = 1.0;

  HarvestSetup harvesting;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  NodeId sink() const { return static_cast<NodeId>(node_count - 1); }
  energy::Battery battery_template() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Deployment area (square side, meters) used for a network of `node_count`
/// nodes: 200 m for 10, 300 m for 20, ... 600 m from 50 nodes up.
double deployment_side_for(std::size_t node_count);

}  // namespace rfwsn::sim
