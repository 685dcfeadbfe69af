#include "rfwsn/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rfwsn/format.hpp"
#include "rfwsn/harvester.hpp"
#include "rfwsn/rf_link.hpp"
#include "rfwsn/sim/compare.hpp"
#include "rfwsn/sim/report.hpp"
#include "rfwsn/sim/simulator.hpp"

namespace rfwsn::cli {

namespace {

namespace fs = std::filesystem;

bool write_file(const fs::path& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  f << content;
  if (!f) {
    err << "error: cannot write " << path.string() << '\n';
    return false;
  }
  return true;
}

bool ensure_dir(const std::string& dir, std::ostream& err) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    err << "error: cannot create output directory " << dir << ": " << ec.message() << '\n';
    return false;
  }
  return true;
}

}  // namespace

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  sim::RunResult result;
  try {
    result = sim::run(config.scenario);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  if (!ensure_dir(config.out_dir, err)) return kExitFailure;

  std::ostringstream timeline, summary;
  sim::write_timeline_csv(timeline, result);
  sim::write_summary_json(summary, result, write_config(config));
  const fs::path dir(config.out_dir);
  if (!write_file(dir / "timeline.csv", timeline.str(), err) ||
      !write_file(dir / "summary.json", summary.str(), err) ||
      !write_file(dir / "tables.csv", result.routing_tables, err)) {
    return kExitFailure;
  }
  if (!config.quiet) {
    const auto& last = result.timeline.samples.back();
    out << "seed " << config.scenario.seed << ", " << routing::to_string(config.scenario.protocol)
        << ": average residual " << format_double(last.average_residual) << ", minimum "
        << format_double(last.minimum_residual) << ", delivered " << last.packets_delivered
        << "/" << last.packets_generated << " packets\n"
        << "wrote " << (dir / "timeline.csv").string() << ", " << (dir / "summary.json").string()
        << ", " << (dir / "tables.csv").string() << '\n';
  }
  return kExitOk;
}

std::optional<std::vector<routing::ProtocolKind>> parse_protocol_list(
    const std::vector<std::string>& names, std::ostream& err) {
  std::vector<routing::ProtocolKind> out;
  for (const auto& n : names) {
    const auto p = routing::parse_protocol(n);
    if (!p) {
      err << "error: unknown protocol '" << n << "' (valid: IEEABR, EEABR, MinHop)\n";
      return std::nullopt;
    }
    out.push_back(*p);
  }
  if (out.empty()) {
    err << "error: at least one protocol is required (valid: IEEABR, EEABR, MinHop)\n";
    return std::nullopt;
  }
  return out;
}

int cmd_compare(const RunConfig& config, const std::vector<std::string>& protocols,
                long long repetitions, unsigned workers, std::ostream& out, std::ostream& err) {
  const auto kinds = parse_protocol_list(protocols, err);
  if (!kinds) return kExitUsage;
  if (repetitions < 1) {
    err << "error: --reps must be at least 1\n";
    return kExitUsage;
  }
  sim::ComparisonTable table;
  try {
    table = sim::compare_protocols(config.scenario, *kinds,
                                   static_cast<std::size_t>(repetitions), workers);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  std::ostringstream csv;
  sim::write_comparison_csv(csv, table);
  if (!ensure_dir(config.out_dir, err)) return kExitFailure;
  if (!write_file(fs::path(config.out_dir) / "comparison.csv", csv.str(), err)) {
    return kExitFailure;
  }
  if (!config.quiet) out << csv.str();
  return kExitOk;
}

int cmd_linkbudget(const LinkBudgetArgs& args, std::ostream& out, std::ostream& err) {
  rf::LinkBudget link;
  link.tx_power_w = args.tx_power_w;
  link.tx_gain = rf::AntennaGain::from_dbi(args.tx_gain_dbi);
  link.rx_gain = rf::AntennaGain::from_dbi(args.rx_gain_dbi);
  link.frequency_hz = args.frequency_hz;
  link.distance_m = args.distance_m;
  double pr = 0.0;
  double density = 0.0;
  try {
    link.validate();
    pr = rf::friis_received_power(link);
    density = rf::directional_power_density(link.tx_power_w, link.tx_gain, link.distance_m);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  out << "wavelength_m = " << format_double(rf::wavelength(link.frequency_hz)) << '\n'
      << "tx_gain_linear = " << format_double(link.tx_gain.linear()) << '\n'
      << "rx_gain_linear = " << format_double(link.rx_gain.linear()) << '\n'
      << "received_power_w = " << format_double(pr) << '\n'
      << "received_power_mw = " << format_double(pr * 1e3) << '\n'
      << "received_power_dbm = " << format_double(rf::watts_to_dbm(pr)) << '\n'
      << "power_density_w_per_m2 = " << format_double(density) << '\n';
  return kExitOk;
}

int cmd_harvest(const HarvestArgs& args, std::ostream& out, std::ostream& err) {
  const auto receiver = harvest::parse_receiver(args.receiver);
  const auto antenna = harvest::parse_antenna(args.antenna);
  if (!receiver || !antenna) {
    err << "error: unknown receiver/antenna pair '" << args.receiver << "/" << args.antenna
        << "' (valid: P2110/dipole, P2110/patch, P1110/dipole, P1110/patch)\n";
    return kExitUsage;
  }
  if (!(args.distance_ft > 0.0)) {
    err << "usage error: distance must be positive\n";
    return kExitUsage;
  }
  if (!(args.drawn_mah >= 0.0)) {
    err << "usage error: drawn charge must be non-negative\n";
    return kExitUsage;
  }
  harvest::HarvestCurve curve = harvest::embedded_curve(*receiver, *antenna);
  if (!args.curve_file.empty()) {
    sim::HarvestSetup setup;
    setup.receiver = *receiver;
    setup.antenna = *antenna;
    setup.curve_file = args.curve_file;
    try {
      curve = sim::resolve_curve(setup);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitFailure;
    }
  }
  const harvest::HarvestSample s = harvest::harvest_at(curve, args.distance_ft);
  out << "curve = " << curve.label() << '\n'
      << "distance_ft = " << format_double(args.distance_ft) << '\n'
      << "power_uw = " << format_double(s.power_uw) << '\n'
      << "current_ua = " << format_double(s.current_ua) << '\n';
  const auto hours = harvest::recharge_time(args.drawn_mah, s.current_ua);
  if (s.out_of_range() || !hours) {
    out << "note = out of range: beyond the last measured distance ("
        << format_double(curve.knots().back().distance_ft) << " ft), nothing is harvested\n";
  } else {
    out << "recharge_h_for_" << format_double(args.drawn_mah) << "_mah = " << format_double(*hours)
        << '\n';
  }
  return kExitOk;
}

}  // namespace rfwsn::cli
