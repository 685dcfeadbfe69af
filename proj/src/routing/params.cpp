#include "rfwsn/routing/params.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace rfwsn::routing {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(ProtocolKind k) {
  switch (k) {
    case ProtocolKind::IEEABR: return "IEEABR";
    case ProtocolKind::EEABR: return "EEABR";
    case ProtocolKind::MinHop: return "MinHop";
  }
  return "?";
}

std::optional<ProtocolKind> parse_protocol(std::string_view s) {
  const auto l = lower(s);
  if (l == "ieeabr") return ProtocolKind::IEEABR;
  if (l == "eeabr") return ProtocolKind::EEABR;
  if (l == "minhop") return ProtocolKind::MinHop;
  return std::nullopt;
}

std::string_view to_string(OverhearPolicy p) {
  return p == OverhearPolicy::HeaderOnly ? "header" : "full";
}

std::optional<OverhearPolicy> parse_overhear_policy(std::string_view s) {
  const auto l = lower(s);
  if (l == "header") return OverhearPolicy::HeaderOnly;
  if (l == "full") return OverhearPolicy::FullFrame;
  return std::nullopt;
}

void ProtocolParams::validate() const {
  const auto bad = [](const char* what) { throw std::invalid_argument(what); };
  if (!(alpha >= 0.0)) bad("alpha must be >= 0");
  if (!(beta >= 0.0)) bad("beta must be >= 0");
  if (!(rho >= 0.0 && rho < 1.0)) bad("rho must lie in [0, 1)");
  if (!(phi > 0.0)) bad("phi must be > 0");
  if (!(tau_min > 0.0)) bad("tau_min must be > 0");
  if (!(initial_energy > 0.0)) bad("initial_energy must be > 0");
  if (!(deposit_min > 0.0 && deposit_max >= deposit_min)) bad("deposit bounds are inconsistent");
  if (record_timeout <= SimTime{}) bad("ant record timeout must be > 0");
  if (ant_interval <= SimTime{}) bad("ant interval must be > 0");
  if (data_parts < 1 || data_parts > 255) bad("data_parts must lie in [1, 255]");
}

}  // namespace rfwsn::routing
