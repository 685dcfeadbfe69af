#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rfwsn/cli/commands.hpp"
#include "rfwsn/cli/config.hpp"

using namespace rfwsn;
using namespace rfwsn::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("rfwsn_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

// Set RFWSN_UPDATE_GOLDEN=1 to rewrite the reference files after an intended change.
void check_golden(const std::string& name, const std::string& actual) {
  const fs::path path = fs::path(RFWSN_GOLDEN_DIR) / name;
  const char* update = std::getenv("RFWSN_UPDATE_GOLDEN");
  if (update != nullptr && std::string(update) == "1") {
    std::ofstream(path, std::ios::binary) << actual;
  }
  REQUIRE_MESSAGE(fs::exists(path), path.string());
  CHECK(slurp(path) == actual);
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("linkbudget prints the Friis terms") {
  std::ostringstream out, err;
  LinkBudgetArgs a;
  a.distance_m = 0.6;
  REQUIRE(cmd_linkbudget(a, out, err) == kExitOk);
  CHECK(contains(out.str(), "received_power_w = 0.005672824489515"));
  CHECK(contains(out.str(), "received_power_dbm = 7.53799347214611"));

  std::ostringstream out2;
  a.tx_gain_dbi = 2.15;
  REQUIRE(cmd_linkbudget(a, out2, err) == kExitOk);
  CHECK(contains(out2.str(), "tx_gain_linear = 1.6405897731995"));

  std::ostringstream out3, err3;
  a.distance_m = -1;
  CHECK(cmd_linkbudget(a, out3, err3) == kExitUsage);
  CHECK(contains(err3.str(), "usage error"));
  a.distance_m = 1;
  a.frequency_hz = 0;
  CHECK(cmd_linkbudget(a, out3, err3) == kExitUsage);
}

TEST_CASE("harvest reproduces table rows and flags out-of-range distances") {
  std::ostringstream out, err;
  HarvestArgs a;
  a.distance_ft = 2;
  REQUIRE(cmd_harvest(a, out, err) == kExitOk);
  CHECK(contains(out.str(), "power_uw = 3687\n"));
  CHECK(contains(out.str(), "current_ua = 3073\n"));

  std::ostringstream out2;
  a.receiver = "P1110";
  a.antenna = "dipole";
  a.distance_ft = 7;
  REQUIRE(cmd_harvest(a, out2, err) == kExitOk);
  CHECK(contains(out2.str(), "power_uw = 86\n"));
  CHECK(contains(out2.str(), "current_ua = 22\n"));

  std::ostringstream out3;
  a.distance_ft = 100;
  REQUIRE(cmd_harvest(a, out3, err) == kExitOk);
  CHECK(contains(out3.str(), "current_ua = 0\n"));
  CHECK(contains(out3.str(), "out of range"));

  std::ostringstream out4, err4;
  a.receiver = "P9999";
  CHECK(cmd_harvest(a, out4, err4) == kExitUsage);
  CHECK(contains(err4.str(), "P2110/dipole"));
}

TEST_CASE("run writes the three artifacts, deterministically") {
  const fs::path dir = scratch("run");
  RunConfig c;
  c.out_dir = dir.string();
  c.quiet = true;
  std::ostringstream out, err;
  REQUIRE(cmd_run(c, out, err) == kExitOk);
  CHECK(out.str().empty());
  const std::string timeline = slurp(dir / "timeline.csv");
  CHECK(timeline.rfind("# seed=1 protocol=IEEABR\ntime_s,average_residual,", 0) == 0);
  CHECK(count_lines(timeline) == 2 + 61);
  CHECK(fs::file_size(dir / "summary.json") > 0);
  CHECK(fs::file_size(dir / "tables.csv") > 0);
  CHECK(contains(slurp(dir / "summary.json"), "\"effective_config\""));
  check_golden("timeline_seed1_ieeabr.csv", timeline);

  REQUIRE(cmd_run(c, out, err) == kExitOk);
  CHECK(slurp(dir / "timeline.csv") == timeline);
  fs::remove_all(dir);
}

TEST_CASE("run reports scenario errors") {
  RunConfig c;
  c.scenario.node_count = 40;
  c.scenario.area_width_m = c.scenario.area_height_m = 5000;
  c.scenario.radio_range_m = 10;
  c.out_dir = scratch("bad").string();
  std::ostringstream out, err;
  CHECK(cmd_run(c, out, err) == kExitFailure);
  CHECK(contains(err.str(), "could not place a connected network"));
}

TEST_CASE("compare writes the table") {
  const fs::path dir = scratch("compare");
  RunConfig c;
  c.scenario.duration_s = 900;
  c.out_dir = dir.string();
  std::ostringstream out, err;
  REQUIRE(cmd_compare(c, {"IEEABR", "EEABR", "MinHop"}, 2, 2, out, err) == kExitOk);
  const std::string csv = slurp(dir / "comparison.csv");
  CHECK(count_lines(csv) == 1 + 6 + 3);
  CHECK(contains(out.str(), csv));
  check_golden("comparison_seed1_2reps.csv", csv);
  fs::remove_all(dir);

  std::ostringstream out2, err2;
  CHECK(cmd_compare(c, {"IEEABR", "AODV"}, 2, 1, out2, err2) == kExitUsage);
  CHECK(contains(err2.str(), "valid: IEEABR, EEABR, MinHop"));
  CHECK(cmd_compare(c, {"IEEABR"}, 0, 1, out2, err2) == kExitUsage);
}
