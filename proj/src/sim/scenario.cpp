#include "rfwsn/sim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rfwsn::sim {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

void Scenario::validate() const {
  require(node_count >= 2, "node_count must be at least 2 (one sink plus one source)");
  require(node_count < (1u << 24), "node_count too large");
  require(positive(area_width_m) && positive(area_height_m), "area must be positive");
  require(positive(radio_range_m), "radio_range_m must be positive");
  require(positive(data_rate_bps), "data_rate_bps must be positive");
  require(positive(packet_size_bits), "packet_size_bits must be positive");
  require(positive(control_packet_bits), "control_packet_bits must be positive");
  require(positive(header_bits), "header_bits must be positive");
  require(header_bits <= packet_size_bits, "header_bits must not exceed packet_size_bits");
  require(positive(cbr_interval_s), "cbr_interval_s must be positive");
  require(positive(duration_s), "duration_s must be positive");
  require(positive(sample_interval_s), "sample_interval_s must be positive");
  require(positive(harvest_tick_s), "harvest_tick_s must be positive");
  require(processing_time_s >= 0.0 && std::isfinite(processing_time_s),
          "processing_time_s must be non-negative");
  consumption.validate();
  protocol_params.validate();
  require(positive(battery_capacity_mah), "battery_capacity_mah must be positive");
  require(positive(battery_voltage_v), "battery_voltage_v must be positive");
  require(battery_initial_mah >= 0.0 && battery_initial_mah <= battery_capacity_mah,
          "battery_initial_mah must lie in [0, battery_capacity_mah]");
  require(peukert_n >= 1.0, "peukert_n must be >= 1");
  if (harvesting.enabled) {
    require(harvesting.x_m >= 0.0 && harvesting.x_m <= area_width_m && harvesting.y_m >= 0.0 &&
                harvesting.y_m <= area_height_m,
            "harvest source must lie inside the deployment area");
  }
}

energy::Battery Scenario::battery_template() const {
  return energy::Battery(battery_capacity_mah, battery_voltage_v, peukert_n, battery_initial_mah);
}

double deployment_side_for(std::size_t node_count) {
  if (node_count <= 10) return 200.0;
  if (node_count <= 20) return 300.0;
  if (node_count <= 30) return 400.0;
  if (node_count <= 40) return 500.0;
  return 600.0;
}

}  // namespace rfwsn::sim
