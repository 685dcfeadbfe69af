#include "rfwsn/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "rfwsn/format.hpp"

namespace rfwsn::cli {

ConfigError::ConfigError(std::string source, int line, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " +
                         message),
      line_(line) {}

namespace {

struct BadValue {
  std::string what;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& v) {
  double out = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size() || !std::isfinite(out)) {
    throw BadValue{"expected a number, got '" + v + "'"};
  }
  return out;
}

template <typename Int>
Int to_int(const std::string& v) {
  Int out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) {
    throw BadValue{"expected a non-negative integer, got '" + v + "'"};
  }
  return out;
}

bool to_bool(const std::string& v) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw BadValue{"expected true or false, got '" + v + "'"};
}

std::string from_bool(bool b) { return b ? "true" : "false"; }

SimTime to_duration(const std::string& v) {
  const double s = to_double(v);
  if (s < 0.0) throw BadValue{"expected a non-negative duration, got '" + v + "'"};
  return SimTime::from_seconds(s);
}

struct Field {
  std::string key;
  std::function<std::string(const RunConfig&)> get;
  std::function<void(RunConfig&, const std::string&)> set;
};

#define RF_DOUBLE(key, member)                                                 \
  Field {                                                                      \
    key, [](const RunConfig& c) { return format_double(c.member); },           \
        [](RunConfig& c, const std::string& v) { c.member = to_double(v); }    \
  }

const std::vector<Field>& fields() {
  static const std::vector<Field> all = {
      {"seed", [](const RunConfig& c) { return std::to_string(c.scenario.seed); },
       [](RunConfig& c, const std::string& v) { c.scenario.seed = to_int<std::uint64_t>(v); }},
      {"node_count", [](const RunConfig& c) { return std::to_string(c.scenario.node_count); },
       [](RunConfig& c, const std::string& v) { c.scenario.node_count = to_int<std::size_t>(v); }},
      RF_DOUBLE("area_width_m", scenario.area_width_m),
      RF_DOUBLE("area_height_m", scenario.area_height_m),
      RF_DOUBLE("radio_range_m", scenario.radio_range_m),
      RF_DOUBLE("data_rate_bps", scenario.data_rate_bps),
      RF_DOUBLE("packet_size_bits", scenario.packet_size_bits),
      RF_DOUBLE("control_packet_bits", scenario.control_packet_bits),
      RF_DOUBLE("header_bits", scenario.header_bits),
      {"traffic", [](const RunConfig& c) { return from_bool(c.scenario.traffic_enabled); },
       [](RunConfig& c, const std::string& v) { c.scenario.traffic_enabled = to_bool(v); }},
      RF_DOUBLE("cbr_interval_s", scenario.cbr_interval_s),
      RF_DOUBLE("duration_s", scenario.duration_s),
      RF_DOUBLE("sample_interval_s", scenario.sample_interval_s),
      RF_DOUBLE("harvest_tick_s", scenario.harvest_tick_s),
      RF_DOUBLE("processing_time_s", scenario.processing_time_s),
      {"protocol",
       [](const RunConfig& c) { return std::string(routing::to_string(c.scenario.protocol)); },
       [](RunConfig& c, const std::string& v) {
         const auto p = routing::parse_protocol(v);
         if (!p) throw BadValue{"unknown protocol '" + v + "' (valid: IEEABR, EEABR, MinHop)"};
         c.scenario.protocol = *p;
       }},
      {"minhop_overhear",
       [](const RunConfig& c) {
         return std::string(routing::to_string(c.scenario.baseline_overhear));
       },
       [](RunConfig& c, const std::string& v) {
         const auto p = routing::parse_overhear_policy(v);
         if (!p) throw BadValue{"unknown overhear policy '" + v + "' (valid: header, full)"};
         c.scenario.baseline_overhear = *p;
       }},
      RF_DOUBLE("alpha", scenario.protocol_params.alpha),
      RF_DOUBLE("beta", scenario.protocol_params.beta),
      RF_DOUBLE("rho", scenario.protocol_params.rho),
      RF_DOUBLE("phi", scenario.protocol_params.phi),
      RF_DOUBLE("tau_min", scenario.protocol_params.tau_min),
      RF_DOUBLE("initial_energy", scenario.protocol_params.initial_energy),
      RF_DOUBLE("deposit_min", scenario.protocol_params.deposit_min),
      RF_DOUBLE("deposit_max", scenario.protocol_params.deposit_max),
      {"record_timeout_s",
       [](const RunConfig& c) {
         return format_double(c.scenario.protocol_params.record_timeout.seconds());
       },
       [](RunConfig& c, const std::string& v) {
         c.scenario.protocol_params.record_timeout = to_duration(v);
       }},
      {"ant_interval_s",
       [](const RunConfig& c) {
         return format_double(c.scenario.protocol_params.ant_interval.seconds());
       },
       [](RunConfig& c, const std::string& v) {
         c.scenario.protocol_params.ant_interval = to_duration(v);
       }},
      {"data_parts",
       [](const RunConfig& c) { return std::to_string(c.scenario.protocol_params.data_parts); },
       [](RunConfig& c, const std::string& v) {
         c.scenario.protocol_params.data_parts = to_int<int>(v);
       }},
      RF_DOUBLE("sleep_current_ua", scenario.consumption.sleep_current_ua),
      RF_DOUBLE("idle_current_ma", scenario.consumption.idle_processor_current_ma),
      RF_DOUBLE("tx_current_ma", scenario.consumption.tx_current_ma),
      RF_DOUBLE("rx_current_ma", scenario.consumption.rx_current_ma),
      RF_DOUBLE("battery_capacity_mah", scenario.battery_capacity_mah),
      RF_DOUBLE("battery_voltage_v", scenario.battery_voltage_v),
      RF_DOUBLE("battery_initial_mah", scenario.battery_initial_mah),
      RF_DOUBLE("peukert_n", scenario.peukert_n),
      {"harvest", [](const RunConfig& c) { return from_bool(c.scenario.harvesting.enabled); },
       [](RunConfig& c, const std::string& v) { c.scenario.harvesting.enabled = to_bool(v); }},
      RF_DOUBLE("harvest_x_m", scenario.harvesting.x_m),
      RF_DOUBLE("harvest_y_m", scenario.harvesting.y_m),
      {"harvest_receiver",
       [](const RunConfig& c) {
         return std::string(harvest::to_string(c.scenario.harvesting.receiver));
       },
       [](RunConfig& c, const std::string& v) {
         const auto r = harvest::parse_receiver(v);
         if (!r) throw BadValue{"unknown receiver '" + v + "' (valid: P2110, P1110)"};
         c.scenario.harvesting.receiver = *r;
       }},
      {"harvest_antenna",
       [](const RunConfig& c) {
         return std::string(harvest::to_string(c.scenario.harvesting.antenna));
       },
       [](RunConfig& c, const std::string& v) {
         const auto a = harvest::parse_antenna(v);
         if (!a) throw BadValue{"unknown antenna '" + v + "' (valid: dipole, patch)"};
         c.scenario.harvesting.antenna = *a;
       }},
      {"harvest_curve_file", [](const RunConfig& c) { return c.scenario.harvesting.curve_file; },
       [](RunConfig& c, const std::string& v) { c.scenario.harvesting.curve_file = v; }},
      {"out_dir", [](const RunConfig& c) { return c.out_dir; },
       [](RunConfig& c, const std::string& v) { c.out_dir = v; }},
      {"quiet", [](const RunConfig& c) { return from_bool(c.quiet); },
       [](RunConfig& c, const std::string& v) { c.quiet = to_bool(v); }},
  };
  return all;
}

#undef RF_DOUBLE

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& f : fields()) k.push_back(f.key);
    return k;
  }();
  return keys;
}

RunConfig parse_config(std::istream& in, const std::string& source) {
  std::map<std::string, const Field*> by_key;
  for (const auto& f : fields()) by_key.emplace(f.key, &f);

  RunConfig config;
  std::set<std::string> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(source, line_no, "expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    const auto it = by_key.find(key);
    if (it == by_key.end()) throw ConfigError(source, line_no, "unknown key '" + key + "'");
    if (!seen.insert(key).second) {
      throw ConfigError(source, line_no, "key '" + key + "' given more than once");
    }
    try {
      it->second->set(config, value);
    } catch (const BadValue& e) {
      throw ConfigError(source, line_no, key + ": " + e.what);
    }
  }

  sim::Scenario& s = config.scenario;
  if (!seen.contains("area_width_m") && !seen.contains("area_height_m")) {
    s.area_width_m = s.area_height_m = sim::deployment_side_for(s.node_count);
  } else if (!seen.contains("area_width_m") || !seen.contains("area_height_m")) {
    throw ConfigError(source, 0, "area_width_m and area_height_m must be given together");
  }
  if (!seen.contains("battery_initial_mah")) s.battery_initial_mah = s.battery_capacity_mah;
  if (s.harvesting.enabled && !seen.contains("harvest_x_m") && !seen.contains("harvest_y_m")) {
    s.harvesting.x_m = s.area_width_m / 2.0;
    s.harvesting.y_m = s.area_height_m / 2.0;
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(source, 0, e.what());
  }
  return config;
}

RunConfig parse_config_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_config(in, source);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open file");
  return parse_config(in, path);
}

std::string write_config(const RunConfig& config) {
  std::string out;
  for (const auto& f : fields()) {
    out += f.key;
    out += " = ";
    out += f.get(config);
    out += '\n';
  }
  return out;
}

}  // namespace rfwsn::cli
