#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>

#include "rfwsn/types.hpp"

namespace rfwsn::routing {

/// Explores toward `destination`. Carries only the last two visited nodes;
/// loop detection relies on the per-node AntRecord store instead.
struct ForwardAnt {
  std::uint64_t id = 0;
  NodeId source = kNoNode;
  NodeId destination = kNoNode;
  std::uint32_t hops = 0;  // Fd
  double min_energy = std::numeric_limits<double>::infinity();
  double avg_energy = 0.0;
  std::uint32_t energy_samples = 0;

  void remember(NodeId node);
  bool in_memory(NodeId node) const;
  std::size_t memory_size() const noexcept { return memory_size_; }
  /// Oldest first.
  std::array<NodeId, 2> memory() const noexcept { return memory_; }

  /// Folds one visited node's energy into EMin and the running EAvg.
  void record_energy(double energy);

 private:
  std::array<NodeId, 2> memory_{kNoNode, kNoNode};
  std::size_t memory_size_ = 0;
};

struct BackwardAnt {
  std::uint64_t id = 0;
  NodeId source = kNoNode;       // where the forward ant started; the backward ant dies there
  NodeId destination = kNoNode;  // routing-table entry being reinforced
  double deposit = 0.0;          // delta tau computed at the destination
  std::uint32_t hops_from_sink = 1;  // Bd
};

struct AntRecord {
  std::uint64_t ant_id = 0;
  NodeId previous_node = kNoNode;  // kNoNode at the ant's source
  NodeId forward_node = kNoNode;   // kNoNode until the ant leaves (or at the destination)
  SimTime expires_at;
};

/// One live record per ant id; expired records are invisible to lookups.
class AntRecordStore {
 public:
  AntRecord* find(std::uint64_t ant_id, SimTime now);
  /// Stores (or replaces) the record for `record.ant_id`.
  void store(const AntRecord& record);
  void erase(std::uint64_t ant_id);
  std::size_t purge_expired(SimTime now);
  std::size_t size() const noexcept { return records_.size(); }

 private:
  std::map<std::uint64_t, AntRecord> records_;
};

}  // namespace rfwsn::routing
