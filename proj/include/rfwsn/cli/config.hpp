#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfwsn/sim/scenario.hpp"

namespace rfwsn::cli {

/// A scenario plus where and how loudly to report it.
struct RunConfig {
  sim::Scenario scenario;
  std::string out_dir = ".";
  bool quiet = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parse failure with the offending line (0 when not tied to a line).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string source, int line, const std::string& message);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Every accepted key, in the order the effective config is written.
const std::vector<std::string>& config_keys();

/// `key = value` lines; '#' starts a comment. Unknown keys, repeated keys and
/// malformed values are errors. When the area is not given it follows
/// node_count; battery_initial_mah defaults to the capacity.
RunConfig parse_config(std::istream& in, const std::string& source = "<config>");
RunConfig parse_config_text(const std::string& text, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

/// Every key with its effective value; parse_config() of it reproduces `config`.
std::string write_config(const RunConfig& config);

}  // namespace rfwsn::cli
