#pragma once

#include <iosfwd>
#include <string>

#include "rfwsn/sim/simulator.hpp"

namespace rfwsn::sim {

/// Column order of the timeline CSV. Frozen.
inline constexpr const char* kTimelineHeader =
    "time_s,average_residual,minimum_residual,packets_delivered,packets_generated,"
    "ants_launched,ants_completed";

/// A "# seed=<seed> protocol=<name>" line, the header, then one row per sample.
void write_timeline_csv(std::ostream& out, const RunResult& result);

/// Structured summary: final averages, counters, per-node residuals and
/// ledgers, plus `effective_config` verbatim.
void write_summary_json(std::ostream& out, const RunResult& result,
                        const std::string& effective_config);

}  // namespace rfwsn::sim
