#include "rfwsn/rf_link.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rfwsn::rf {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

double sphere_area(double radius_m) {
  return 4.0 * std::numbers::pi * radius_m * radius_m;
}

}  // namespace

AntennaGain AntennaGain::from_dbi(double dbi) {
  if (!std::isfinite(dbi)) throw std::invalid_argument("antenna gain must be finite");
  return AntennaGain(dbi);
}

AntennaGain AntennaGain::from_linear(double ratio) {
  return AntennaGain(linear_to_dbi(ratio));
}

double AntennaGain::linear() const { return dbi_to_linear(dbi_); }

void LinkBudget::validate() const {
  require_positive(tx_power_w, "transmit power");
  require_positive(frequency_hz, "frequency");
  require_positive(distance_m, "distance");
}

double dbi_to_linear(double gain_db) {
  if (!std::isfinite(gain_db)) throw std::invalid_argument("gain must be finite");
  return std::pow(10.0, gain_db / 10.0);
}

double linear_to_dbi(double ratio) {
  require_positive(ratio, "linear gain");
  return 10.0 * std::log10(ratio);
}

double wavelength(double frequency_hz) {
  require_positive(frequency_hz, "frequency");
  return kSpeedOfLight / frequency_hz;
}

double friis_received_power(const LinkBudget& link) {
  link.validate();
  const double path_factor =
      wavelength(link.frequency_hz) / (4.0 * std::numbers::pi * link.distance_m);
  return link.tx_power_w * link.tx_gain.linear() * link.rx_gain.linear() * path_factor *
         path_factor;
}

double isotropic_power_density(double tx_power_w, double distance_m) {
  require_positive(tx_power_w, "transmit power");
  require_positive(distance_m, "distance");
  return tx_power_w / sphere_area(distance_m);
}

double directional_power_density(double tx_power_w, AntennaGain tx_gain, double distance_m) {
  require_positive(tx_power_w, "transmit power");
  require_positive(distance_m, "distance");
  // Gain of exactly 0 dBi must reproduce the isotropic result bit for bit.
  const double g = tx_gain.dbi() == 0.0 ? 1.0 : tx_gain.linear();
  return tx_power_w * g / sphere_area(distance_m);
}

double gain_from_intensities(double actual_w_per_sr, double isotropic_w_per_sr) {
  require_positive(isotropic_w_per_sr, "isotropic intensity");
  require_positive(actual_w_per_sr, "antenna intensity");
  return actual_w_per_sr / isotropic_w_per_sr;
}

double watts_to_dbm(double watts) {
  require_positive(watts, "power");
  return 10.0 * std::log10(watts * 1000.0);
}

}  // namespace rfwsn::rf
