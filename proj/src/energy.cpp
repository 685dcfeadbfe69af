#include "rfwsn/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rfwsn::energy {

std::string_view to_string(RadioState s) {
  switch (s) {
    case RadioState::Sleep: return "sleep";
    case RadioState::Idle: return "idle";
    case RadioState::Tx: return "tx";
    case RadioState::Rx: return "rx";
  }
  return "?";
}

void ConsumptionProfile::validate() const {
  if (!(sleep_current_ua > 0.0) || !(idle_processor_current_ma > 0.0) ||
      !(tx_current_ma > 0.0) || !(rx_current_ma > 0.0)) {
    throw std::invalid_argument("consumption currents must be positive");
  }
}

double ConsumptionProfile::state_current_ma(RadioState state) const {
  switch (state) {
    case RadioState::Sleep: return sleep_current_ua / 1000.0;
    case RadioState::Idle: return idle_processor_current_ma;
    case RadioState::Tx: return tx_current_ma + idle_processor_current_ma;
    case RadioState::Rx: return rx_current_ma + idle_processor_current_ma;
  }
  throw std::invalid_argument("unknown radio state");
}

Battery::Battery(double rated_capacity_mah, double voltage_v, double peukert_n)
    : Battery(rated_capacity_mah, voltage_v, peukert_n, rated_capacity_mah) {}

Battery::Battery(double rated_capacity_mah, double voltage_v, double peukert_n,
                 double charge_mah)
    : rated_capacity_mah_(rated_capacity_mah),
      voltage_v_(voltage_v),
      peukert_n_(peukert_n),
      charge_mah_(charge_mah) {
  if (!(rated_capacity_mah > 0.0)) throw std::invalid_argument("battery capacity must be positive");
  if (!(voltage_v > 0.0)) throw std::invalid_argument("battery voltage must be positive");
  if (!(peukert_n >= 1.0)) throw std::invalid_argument("Peukert exponent must be >= 1");
  if (!(charge_mah >= 0.0) || charge_mah > rated_capacity_mah) {
    throw std::invalid_argument("battery charge must lie in [0, capacity]");
  }
}

double peukert_runtime(const Battery& battery, double draw_a) {
  if (!(draw_a > 0.0)) throw std::invalid_argument("discharge current must be positive");
  const double capacity_ah = battery.rated_capacity_mah() / 1000.0;
  return capacity_ah / std::pow(draw_a, battery.peukert_n());
}

double effective_drawn_mah(const Battery& battery, double current_ma, double duration_s) {
  if (duration_s < 0.0 || current_ma < 0.0) {
    throw std::invalid_argument("drain current and duration must be non-negative");
  }
  double drawn = current_ma * duration_s / 3600.0;
  const double one_c = battery.one_c_current_ma();
  if (battery.peukert_n() > 1.0 && current_ma > one_c) {
    drawn *= std::pow(current_ma / one_c, battery.peukert_n() - 1.0);
  }
  return drawn;
}

Battery drain_current(const Battery& battery, double current_ma, double duration_s) {
  Battery out = battery;
  out.charge_mah_ =
      std::max(0.0, battery.charge_mah_ - effective_drawn_mah(battery, current_ma, duration_s));
  return out;
}

Battery drain(const Battery& battery, const ConsumptionProfile& profile, RadioState state,
              double duration_s) {
  return drain_current(battery, profile.state_current_ma(state), duration_s);
}

Battery charge(const Battery& battery, double current_ua, double duration_s) {
  if (duration_s < 0.0 || current_ua < 0.0) {
    throw std::invalid_argument("charging current and duration must be non-negative");
  }
  Battery out = battery;
  out.charge_mah_ = std::min(battery.rated_capacity_mah_,
                             battery.charge_mah_ + current_ua / 1000.0 * duration_s / 3600.0);
  return out;
}

double residual_fraction(const Battery& battery) {
  return battery.charge_mah() / battery.rated_capacity_mah();
}

}  // namespace rfwsn::energy
