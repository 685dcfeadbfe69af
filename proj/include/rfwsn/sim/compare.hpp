#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rfwsn/routing/params.hpp"
#include "rfwsn/sim/scenario.hpp"

namespace rfwsn::sim {

struct ComparisonRow {
  routing::ProtocolKind protocol = routing::ProtocolKind::IEEABR;
  std::uint64_t seed = 0;
  double avg_residual = 0.0;  // average residual, averaged over the timeline samples
  double min_residual = 0.0;  // minimum residual, averaged over the timeline samples
  std::uint64_t packets_generated = 0;
  std::uint64_t packets_delivered = 0;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

struct ComparisonAggregate {
  routing::ProtocolKind protocol = routing::ProtocolKind::IEEABR;
  std::size_t runs = 0;
  double mean_avg_residual = 0.0;
  double mean_min_residual = 0.0;
};

/// Rows ordered by seed, then by the order protocols were requested.
struct ComparisonTable {
  std::vector<routing::ProtocolKind> protocols;
  std::vector<ComparisonRow> rows;

  std::vector<ComparisonAggregate> aggregates() const;
  const ComparisonRow& at(routing::ProtocolKind protocol, std::uint64_t seed) const;
};

/// Runs every protocol on seeds base.seed, base.seed+1, ... (repetitions of
/// them). The topology and traffic of a seed are shared by all protocols.
/// `workers` > 1 runs scenarios in parallel; the table is the same either way.
ComparisonTable compare_protocols(const Scenario& base,
                                  const std::vector<routing::ProtocolKind>& protocols,
                                  std::size_t repetitions, unsigned workers = 1);

/// protocol,seed,avg_residual,min_residual rows followed by one
/// protocol,mean,... aggregate row per protocol.
void write_comparison_csv(std::ostream& out, const ComparisonTable& table);

}  // namespace rfwsn::sim
