#pragma once

#include <optional>
#include <string_view>

#include "rfwsn/types.hpp"

namespace rfwsn::routing {

enum class ProtocolKind { IEEABR, EEABR, MinHop };

std::string_view to_string(ProtocolKind k);
std::optional<ProtocolKind> parse_protocol(std::string_view s);

/// How neighbours that are not the addressee spend radio time on a unicast frame.
enum class OverhearPolicy { HeaderOnly, FullFrame };

std::string_view to_string(OverhearPolicy p);
std::optional<OverhearPolicy> parse_overhear_policy(std::string_view s);

/// Tunables of the ant protocols. None of these are fixed by the protocol
/// description; the defaults are this simulator's choices.
struct ProtocolParams {
  double alpha = 1.0;           // trail exponent
  double beta = 1.0;            // visibility exponent
  double rho = 0.1;             // evaporation on the reinforced link
  double phi = 1.0;             // backward-ant attenuation coefficient
  double tau_min = 1e-4;        // pheromone floor
  double initial_energy = 2.0;  // C: full-battery energy in ant units
  double deposit_max = 10.0;
  double deposit_min = 1e-6;
  SimTime record_timeout = SimTime::from_ns(5'000'000'000);
  SimTime ant_interval = SimTime::from_ns(10'000'000'000);
  int data_parts = 4;  // M

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;

  friend bool operator==(const ProtocolParams&, const ProtocolParams&) = default;
};

}  // namespace rfwsn::routing
