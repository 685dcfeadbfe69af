#pragma once

#include <array>
#include <cstddef>
#include <string_view>

// Per-node charge accounting. Charges are in mAh, currents in mA unless the
// name says otherwise, durations in seconds, Peukert runtimes in hours.

namespace rfwsn::energy {

enum class RadioState : std::size_t { Sleep = 0, Idle = 1, Tx = 2, Rx = 3 };
inline constexpr std::size_t kRadioStateCount = 4;
inline constexpr std::array<RadioState, kRadioStateCount> kAllRadioStates{
    RadioState::Sleep, RadioState::Idle, RadioState::Tx, RadioState::Rx};

std::string_view to_string(RadioState s);

/// Current draws of one node model. Defaults are the Libelium Waspmote.
struct ConsumptionProfile {
  double sleep_current_ua = 62.0;
  double idle_processor_current_ma = 9.0;
  double tx_current_ma = 50.26;
  double rx_current_ma = 49.56;

  /// Throws std::invalid_argument if any current is non-positive.
  void validate() const;

  /// Total draw in mA while in `state`. Tx and Rx include the processor.
  double state_current_ma(RadioState state) const;

  friend bool operator==(const ConsumptionProfile&, const ConsumptionProfile&) = default;
};

class Battery {
 public:
  /// A full battery. Throws std::invalid_argument on capacity <= 0 or n < 1.
  Battery(double rated_capacity_mah, double voltage_v, double peukert_n = 1.0);
  Battery(double rated_capacity_mah, double voltage_v, double peukert_n, double charge_mah);

  double rated_capacity_mah() const noexcept { return rated_capacity_mah_; }
  double voltage_v() const noexcept { return voltage_v_; }
  double peukert_n() const noexcept { return peukert_n_; }
  double charge_mah() const noexcept { return charge_mah_; }
  bool depleted() const noexcept { return charge_mah_ <= 0.0; }

  /// 1C reference current: the rated capacity delivered in one hour.
  double one_c_current_ma() const noexcept { return rated_capacity_mah_; }

  friend bool operator==(const Battery&, const Battery&) = default;

 private:
  friend Battery drain(const Battery&, const ConsumptionProfile&, RadioState, double);
  friend Battery drain_current(const Battery&, double, double);
  friend Battery charge(const Battery&, double, double);

  double rated_capacity_mah_;
  double voltage_v_;
  double peukert_n_;
  double charge_mah_;
};

/// T = C / I^n with C in Ah and I in A; hours.
double peukert_runtime(const Battery& battery, double draw_a);

/// Charge removed by drawing `current_ma` for `duration_s`, including the
/// Peukert penalty above the 1C rate.
double effective_drawn_mah(const Battery& battery, double current_ma, double duration_s);

Battery drain(const Battery& battery, const ConsumptionProfile& profile, RadioState state,
              double duration_s);

/// Drain at an arbitrary current (mA).
Battery drain_current(const Battery& battery, double current_ma, double duration_s);

/// Adds current x duration, saturating at the rated capacity.
Battery charge(const Battery& battery, double current_ua, double duration_s);

double residual_fraction(const Battery& battery);

}  // namespace rfwsn::energy
