#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rfwsn/cli/config.hpp"
#include "rfwsn/routing/params.hpp"

// Subcommand bodies, separated from argument parsing so tests can drive them.
// Each returns a process exit status and reports problems on `err`.

namespace rfwsn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Writes timeline.csv, summary.json and tables.csv into config.out_dir.
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Writes comparison.csv into config.out_dir and echoes it to `out` unless quiet.
int cmd_compare(const RunConfig& config, const std::vector<std::string>& protocols,
                long long repetitions, unsigned workers, std::ostream& out, std::ostream& err);

struct LinkBudgetArgs {
  double tx_power_w = 3.0;
  double tx_gain_dbi = 0.0;
  double rx_gain_dbi = 0.0;
  double frequency_hz = 915e6;
  double distance_m = 0.0;
};
int cmd_linkbudget(const LinkBudgetArgs& args, std::ostream& out, std::ostream& err);

struct HarvestArgs {
  std::string receiver = "P2110";
  std::string antenna = "dipole";
  double distance_ft = 0.0;
  double drawn_mah = 264.5;
  std::string curve_file;  // empty: embedded curves
};
int cmd_harvest(const HarvestArgs& args, std::ostream& out, std::ostream& err);

/// Parses protocol names; nullopt (with a message on err) on the first unknown one.
std::optional<std::vector<routing::ProtocolKind>> parse_protocol_list(
    const std::vector<std::string>& names, std::ostream& err);

}  // namespace rfwsn::cli
