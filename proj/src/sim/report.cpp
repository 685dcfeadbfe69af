#include "rfwsn/sim/report.hpp"

#include <nlohmann/json.hpp>
#include <ostream>

#include "rfwsn/format.hpp"

namespace rfwsn::sim {

void write_timeline_csv(std::ostream& out, const RunResult& result) {
  out << "# seed=" << result.scenario.seed
      << " protocol=" << routing::to_string(result.scenario.protocol) << '\n';
  out << kTimelineHeader << '\n';
  for (const auto& s : result.timeline.samples) {
    out << format_double(s.time_s) << ',' << format_double(s.average_residual) << ','
        << format_double(s.minimum_residual) << ',' << s.packets_delivered << ','
        << s.packets_generated << ',' << s.ants_launched << ',' << s.ants_completed << '\n';
  }
}

void write_summary_json(std::ostream& out, const RunResult& result,
                        const std::string& effective_config) {
  using nlohmann::ordered_json;
  const RunCounters& c = result.counters;
  ordered_json j;
  j["seed"] = result.scenario.seed;
  j["protocol"] = routing::to_string(result.scenario.protocol);
  j["duration_s"] = result.scenario.duration_s;
  if (!result.timeline.samples.empty()) {
    const auto& last = result.timeline.samples.back();
    j["final_average_residual"] = last.average_residual;
    j["final_minimum_residual"] = last.minimum_residual;
  }

  ordered_json packets;
  packets["generated"] = c.packets_generated;
  packets["delivered"] = c.packets_delivered;
  ordered_json dropped = ordered_json::object();
  for (std::size_t i = 0; i < routing::kDropReasonCount; ++i) {
    dropped[std::string(routing::to_string(static_cast<routing::DropReason>(i)))] =
        c.packets_dropped[i];
  }
  packets["dropped"] = dropped;
  packets["in_flight"] = c.packets_in_flight;
  packets["messages_generated"] = c.messages_generated;
  packets["messages_reassembled"] = c.messages_reassembled;
  j["packets"] = packets;

  ordered_json ants;
  ants["launched"] = c.ants_launched;
  ants["arrived"] = c.ants_arrived;
  ants["completed"] = c.ants_completed;
  ants["eliminated"] = c.ants_eliminated;
  ants["lost"] = c.ants_lost;
  ants["deposit_clamps"] = c.deposit_clamps;
  j["ants"] = ants;
  j["frames_sent"] = c.frames_sent;
  j["events_processed"] = c.events_processed;

  ordered_json nodes = ordered_json::array();
  for (const auto& n : result.nodes) {
    ordered_json e;
    e["id"] = n.id;
    e["x_m"] = n.position.x;
    e["y_m"] = n.position.y;
    e["residual"] = n.final_mah / result.scenario.battery_capacity_mah;
    e["initial_mah"] = n.initial_mah;
    e["final_mah"] = n.final_mah;
    e["drawn_mah"] = n.ledger.drawn_mah;
    e["harvested_mah"] = n.ledger.harvest_credited_mah;
    ordered_json states;
    for (const auto s : energy::kAllRadioStates) {
      states[std::string(energy::to_string(s))] =
          static_cast<double>(n.ledger.state_ns[static_cast<std::size_t>(s)]) * 1e-9;
    }
    e["state_seconds"] = states;
    e["depleted"] = n.ledger.depleted_at_ns >= 0;
    nodes.push_back(e);
  }
  j["nodes"] = nodes;
  j["effective_config"] = effective_config;
  out << j.dump(2) << '\n';
}

}  // namespace rfwsn::sim
