// rfwsn: run, compare, linkbudget and harvest subcommands.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rfwsn/cli/commands.hpp"
#include "rfwsn/cli/config.hpp"

namespace {

using namespace rfwsn::cli;

struct ScenarioFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  bool quiet = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "scenario configuration file (key = value)");
    cmd->add_option("--seed", seed, "override the configured seed");
    cmd->add_option("--out-dir", out_dir, "directory for output artifacts");
    cmd->add_flag("--quiet", quiet, "suppress progress output");
  }

  std::optional<RunConfig> load() const {
    RunConfig cfg;
    try {
      cfg = config_path.empty() ? parse_config_text("", "<defaults>") : load_config(config_path);
    } catch (const ConfigError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return std::nullopt;
    }
    if (seed) cfg.scenario.seed = *seed;
    if (out_dir) cfg.out_dir = *out_dir;
    if (quiet) cfg.quiet = true;
    return cfg;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RF-harvesting sensor network simulator with ant-based routing"};
  app.require_subcommand(1);

  ScenarioFlags run_flags;
  auto* run = app.add_subcommand("run", "simulate one scenario and write timeline/summary");
  run_flags.attach(run);

  ScenarioFlags cmp_flags;
  std::vector<std::string> protocols{"IEEABR", "EEABR", "MinHop"};
  long long reps = 20;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  auto* compare = app.add_subcommand("compare", "paired-seed protocol comparison");
  cmp_flags.attach(compare);
  compare->add_option("--protocols", protocols, "protocols to compare (IEEABR, EEABR, MinHop)")
      ->delimiter(',');
  compare->add_option("--reps", reps, "number of seeds");
  compare->add_option("--workers", workers, "parallel worker threads");

  LinkBudgetArgs lb;
  auto* link = app.add_subcommand("linkbudget", "free-space received power and power density");
  link->add_option("--tx-power-w", lb.tx_power_w, "transmit power, W")->capture_default_str();
  link->add_option("--tx-gain-dbi", lb.tx_gain_dbi, "transmit antenna gain, dBi")
      ->capture_default_str();
  link->add_option("--rx-gain-dbi", lb.rx_gain_dbi, "receive antenna gain, dBi")
      ->capture_default_str();
  link->add_option("--frequency-hz", lb.frequency_hz, "carrier frequency, Hz")
      ->capture_default_str();
  link->add_option("--distance-m", lb.distance_m, "separation, m")->required();

  HarvestArgs hv;
  auto* harvest = app.add_subcommand("harvest", "harvested power and current at a distance");
  harvest->add_option("--receiver", hv.receiver, "P2110 or P1110")->capture_default_str();
  harvest->add_option("--antenna", hv.antenna, "dipole or patch")->capture_default_str();
  harvest->add_option("--distance-ft", hv.distance_ft, "distance from the transmitter, ft")
      ->required();
  harvest->add_option("--drawn-mah", hv.drawn_mah, "charge to replace, mAh")
      ->capture_default_str();
  harvest->add_option("--curves", hv.curve_file, "curve file overriding the embedded tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*run) {
    const auto cfg = run_flags.load();
    return cfg ? cmd_run(*cfg, std::cout, std::cerr) : kExitUsage;
  }
  if (*compare) {
    const auto cfg = cmp_flags.load();
    return cfg ? cmd_compare(*cfg, protocols, reps, workers, std::cout, std::cerr) : kExitUsage;
  }
  if (*link) return cmd_linkbudget(lb, std::cout, std::cerr);
  if (*harvest) return cmd_harvest(hv, std::cout, std::cerr);
  return kExitUsage;
}
