#pragma once

#include <optional>
#include <span>
#include <unordered_set>
#include <utility>

#include "rfwsn/rng.hpp"
#include "rfwsn/routing/ants.hpp"
#include "rfwsn/routing/data_packet.hpp"
#include "rfwsn/routing/params.hpp"
#include "rfwsn/routing/routing_table.hpp"

namespace rfwsn::routing {

enum class ForwardVerdict { Forwarded, Eliminated, ArrivedAtSink };
enum class Elimination { None, Loop, DeadEnd };

struct ForwardOutcome {
  ForwardVerdict verdict = ForwardVerdict::Eliminated;
  NodeId next = kNoNode;
  Elimination reason = Elimination::None;
};

enum class BackwardVerdict { Forwarded, Completed, Lost };

struct BackwardOutcome {
  BackwardVerdict verdict = BackwardVerdict::Lost;
  NodeId next = kNoNode;
};

enum class DataVerdict { Forwarded, DiscardedOverheard, Delivered, DiscardedDuplicate, DeadEnd };

struct DataOutcome {
  DataVerdict verdict = DataVerdict::DeadEnd;
  NodeId next = kNoNode;
};

/// Protocol state of one node running IEEABR or EEABR: pheromone table, ant
/// records and the data-packet loop guard. Every route leads to `sink`.
class AntNode {
 public:
  AntNode(NodeId id, NodeId sink, ProtocolKind kind, const ProtocolParams& params);

  NodeId id() const noexcept { return id_; }
  NodeId sink() const noexcept { return sink_; }
  ProtocolKind kind() const noexcept { return kind_; }
  const RoutingTable& table() const noexcept { return table_; }
  RoutingTable& table() noexcept { return table_; }
  AntRecordStore& records() noexcept { return records_; }

  /// IEEABR starts destination-aware, EEABR uniform. No-op at the sink.
  void initialize(std::span<const NodeId> neighbors);

  /// Processes a forward ant delivered from `from` (kNoNode when it is launched
  /// here). `choose(table, ant)` picks the next hop or returns nullopt.
  template <class Chooser>
  ForwardOutcome handle_forward_ant(ForwardAnt& ant, NodeId from, SimTime now, double own_energy,
                                    Chooser&& choose);

  /// Same, sampling the next hop over `neighbors` (live neighbours and their energies).
  ForwardOutcome handle_forward_ant(ForwardAnt& ant, NodeId from, SimTime now, double own_energy,
                                    const NeighborEnergies& neighbors, Rng& rng);

  /// Builds the backward ant for an ant that arrived here and the first hop back.
  std::pair<BackwardAnt, Deposit> make_backward_ant(const ForwardAnt& ant) const;
  std::optional<NodeId> backward_first_hop(const ForwardAnt& ant, SimTime now);

  /// Reinforces the link toward `from` and names the next node on the way back.
  BackwardOutcome handle_backward_ant(BackwardAnt& ant, NodeId from, SimTime now);

  /// Overheard packets are dropped after the header. Addressed packets are
  /// delivered at the sink, otherwise routed to the best admissible neighbour.
  DataOutcome handle_data_packet(DataPacket& packet, NodeId from,
                                 const NeighborEnergies& neighbors);

  /// Deterministic data next hop: the sink if destination-aware and adjacent,
  /// else the highest tau^alpha E^beta neighbour other than `from`, lowest id on ties.
  std::optional<NodeId> data_next_hop(NodeId from, const NeighborEnergies& neighbors) const;

  SelectionWeights weights() const {
    return {params_.alpha, params_.beta, params_.initial_energy};
  }

 private:
  NodeId id_;
  NodeId sink_;
  ProtocolKind kind_;
  ProtocolParams params_;
  RoutingTable table_;
  AntRecordStore records_;
  std::unordered_set<std::uint64_t> seen_sequence_numbers_;
};

template <class Chooser>
ForwardOutcome AntNode::handle_forward_ant(ForwardAnt& ant, NodeId from, SimTime now,
                                           double own_energy, Chooser&& choose) {
  if (records_.find(ant.id, now) != nullptr) {
    return {ForwardVerdict::Eliminated, kNoNode, Elimination::Loop};
  }
  if (from != kNoNode) ++ant.hops;
  ant.remember(id_);
  const SimTime expiry = now + params_.record_timeout;
  if (id_ == ant.destination) {
    records_.store({ant.id, from, kNoNode, expiry});
    return {ForwardVerdict::ArrivedAtSink, kNoNode, Elimination::None};
  }
  ant.record_energy(own_energy);
  const std::optional<NodeId> next = choose(std::as_const(table_), std::as_const(ant));
  if (!next) return {ForwardVerdict::Eliminated, kNoNode, Elimination::DeadEnd};
  records_.store({ant.id, from, *next, expiry});
  return {ForwardVerdict::Forwarded, *next, Elimination::None};
}

}  // namespace rfwsn::routing
