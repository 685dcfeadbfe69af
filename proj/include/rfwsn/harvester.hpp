#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Table-driven model of the Powercast P2110/P1110 receivers. Each curve maps
// distance from a 3 W EIRP, 915 MHz transmitter to harvested power, charging
// current and the tabulated recharge time. Distances stay in feet here.

namespace rfwsn::harvest {

enum class Receiver { P2110, P1110 };
enum class Antenna { Dipole, Patch };

std::string_view to_string(Receiver r);
std::string_view to_string(Antenna a);
std::optional<Receiver> parse_receiver(std::string_view s);
std::optional<Antenna> parse_antenna(std::string_view s);

struct Knot {
  double distance_ft = 0.0;
  double power_uw = 0.0;
  double current_ua = 0.0;
  double recharge_h = 0.0;

  friend bool operator==(const Knot&, const Knot&) = default;
};

struct HarvestSample {
  double power_uw = 0.0;
  double current_ua = 0.0;

  bool out_of_range() const noexcept { return power_uw == 0.0 && current_ua == 0.0; }
};

class CurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable after construction; the constructor enforces every invariant.
class HarvestCurve {
 public:
  /// Current x recharge time may deviate at most this far from the curve median.
  static constexpr double kChargeTolerance = 0.10;

  HarvestCurve(Receiver receiver, Antenna antenna, std::vector<Knot> knots);

  Receiver receiver() const noexcept { return receiver_; }
  Antenna antenna() const noexcept { return antenna_; }
  const std::vector<Knot>& knots() const noexcept { return knots_; }
  std::string label() const;

  /// Log-linear interpolation between knots. Clamps below the first knot,
  /// returns zero beyond the last one.
  HarvestSample at(double distance_ft) const;

  friend bool operator==(const HarvestCurve&, const HarvestCurve&) = default;

 private:
  Receiver receiver_;
  Antenna antenna_;
  std::vector<Knot> knots_;
};

struct HarvestSource {
  double x_m = 0.0;
  double y_m = 0.0;
  HarvestCurve curve;
  bool enabled = true;
};

/// The four measured curves (P2110/P1110 x dipole/patch).
const std::vector<HarvestCurve>& embedded_curves();

/// Throws CurveError naming the pair when it has no embedded curve.
const HarvestCurve& embedded_curve(Receiver receiver, Antenna antenna);

/// Parses curve-override text. Format (blank lines and '#' comments ignored):
///
///   receiver=P2110
///   antenna=patch
///   distance_ft,power_uW,current_uA,recharge_h
///   5,1925,1604,42.24
///   ...
///
/// A new receiver= line starts another curve. Throws CurveError with a line number.
std::vector<HarvestCurve> load_curves(std::istream& in);
std::vector<HarvestCurve> load_curves_file(const std::string& path);

/// Writes curves in the same format load_curves reads.
void write_curves(std::ostream& out, const std::vector<HarvestCurve>& curves);

HarvestSample harvest_at(const HarvestCurve& curve, double distance_ft);

/// Hours to replace `drawn_mah` at a constant charging current; nullopt when
/// the current is zero (nothing harvested).
std::optional<double> recharge_time(double drawn_mah, double charging_current_ua);

inline constexpr double kMetersPerFoot = 0.3048;
inline double meters_to_feet(double m) { return m / kMetersPerFoot; }

}  // namespace rfwsn::harvest
