#pragma once

// Free-space link budget: Friis received power, wavelength, power density.
//
// All quantities are SI (watts, meters, hertz). Gains in dBi are converted
// to linear power ratios at the boundary. The Friis relation assumes the far
// field; it is not rejected at short range.

namespace rfwsn::rf {

/// Speed of light as used throughout the link budget (m/s).
inline constexpr double kSpeedOfLight = 3.0e8;

/// Antenna gain stored in dBi.
class AntennaGain {
 public:
  static AntennaGain from_dbi(double dbi);
  static AntennaGain from_linear(double ratio);

  double dbi() const noexcept { return dbi_; }
  double linear() const;

  friend bool operator==(const AntennaGain&, const AntennaGain&) = default;

 private:
  explicit AntennaGain(double dbi) : dbi_(dbi) {}
  double dbi_ = 0.0;
};

struct LinkBudget {
  double tx_power_w = 0.0;
  AntennaGain tx_gain = AntennaGain::from_dbi(0.0);
  AntennaGain rx_gain = AntennaGain::from_dbi(0.0);
  double frequency_hz = 0.0;
  double distance_m = 0.0;

  /// Throws std::invalid_argument unless power, frequency and distance are positive.
  void validate() const;
};

double dbi_to_linear(double gain_db);
double linear_to_dbi(double ratio);

double wavelength(double frequency_hz);

/// P_t * G_t * G_r * (lambda / (4 pi R))^2.
double friis_received_power(const LinkBudget& link);

/// P_t / (4 pi R^2), W/m^2.
double isotropic_power_density(double tx_power_w, double distance_m);

/// P_t * G_t / (4 pi R^2), W/m^2.
double directional_power_density(double tx_power_w, AntennaGain tx_gain, double distance_m);

/// Ratio of an antenna's peak radiation intensity to an isotropic radiator's.
double gain_from_intensities(double actual_w_per_sr, double isotropic_w_per_sr);

double watts_to_dbm(double watts);

}  // namespace rfwsn::rf
