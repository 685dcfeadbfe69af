#include "rfwsn/routing/ant_node.hpp"

namespace rfwsn::routing {

AntNode::AntNode(NodeId id, NodeId sink, ProtocolKind kind, const ProtocolParams& params)
    : id_(id), sink_(sink), kind_(kind), params_(params), table_(id) {
  if (kind == ProtocolKind::MinHop) {
    throw std::invalid_argument("AntNode runs IEEABR or EEABR only");
  }
}

void AntNode::initialize(std::span<const NodeId> neighbors) {
  if (id_ == sink_) return;
  if (kind_ == ProtocolKind::IEEABR) {
    init_destination_aware(table_, neighbors, sink_);
  } else {
    init_uniform(table_, neighbors, sink_);
  }
}

ForwardOutcome AntNode::handle_forward_ant(ForwardAnt& ant, NodeId from, SimTime now,
                                           double own_energy, const NeighborEnergies& neighbors,
                                           Rng& rng) {
  return handle_forward_ant(ant, from, now, own_energy,
                            [&](const RoutingTable& table, const ForwardAnt& a) {
                              return select_next_hop(table, a, neighbors, rng, weights());
                            });
}

std::pair<BackwardAnt, Deposit> AntNode::make_backward_ant(const ForwardAnt& ant) const {
  const Deposit d =
      compute_deposit(params_.initial_energy, ant.min_energy, ant.avg_energy,
                      static_cast<double>(ant.hops), params_.deposit_min, params_.deposit_max);
  return {BackwardAnt{ant.id, ant.source, ant.destination, d.value, 1}, d};
}

std::optional<NodeId> AntNode::backward_first_hop(const ForwardAnt& ant, SimTime now) {
  const AntRecord* rec = records_.find(ant.id, now);
  if (rec == nullptr || rec->previous_node == kNoNode) return std::nullopt;
  const NodeId prev = rec->previous_node;
  records_.erase(ant.id);
  return prev;
}

BackwardOutcome AntNode::handle_backward_ant(BackwardAnt& ant, NodeId from, SimTime now) {
  const AntRecord* rec = records_.find(ant.id, now);
  if (rec == nullptr || rec->forward_node != from) return {BackwardVerdict::Lost, kNoNode};
  const NodeId previous = rec->previous_node;
  records_.erase(ant.id);
  apply_backward_update(table_, ant, Link{id_, from}, params_.rho, params_.phi,
                        params_.tau_min);
  if (id_ == ant.source) return {BackwardVerdict::Completed, kNoNode};
  if (previous == kNoNode) return {BackwardVerdict::Lost, kNoNode};
  return {BackwardVerdict::Forwarded, previous};
}

std::optional<NodeId> AntNode::data_next_hop(NodeId from,
                                             const NeighborEnergies& neighbors) const {
  if (kind_ == ProtocolKind::IEEABR && neighbors.contains(sink_) && table_.has_link(sink_, sink_)) {
    return sink_;
  }
  const NodeId excluded[] = {from};
  const auto probs = selection_probabilities(table_, sink_, neighbors,
                                             std::span<const NodeId>(excluded, 1), weights());
  std::optional<NodeId> best;
  double best_p = -1.0;
  for (const auto& [n, p] : probs) {
    if (p > best_p) {
      best = n;
      best_p = p;
    }
  }
  return best;
}

DataOutcome AntNode::handle_data_packet(DataPacket& packet, NodeId from,
                                        const NeighborEnergies& neighbors) {
  if (packet.next_node != id_) return {DataVerdict::DiscardedOverheard, kNoNode};
  if (id_ == sink_) return {DataVerdict::Delivered, kNoNode};
  if (!seen_sequence_numbers_.insert(packet.sequence_number).second) {
    return {DataVerdict::DiscardedDuplicate, kNoNode};
  }
  ++packet.visited_count;
  const auto next = data_next_hop(from, neighbors);
  if (!next) return {DataVerdict::DeadEnd, kNoNode};
  packet.next_node = *next;
  return {DataVerdict::Forwarded, *next};
}

}  // namespace rfwsn::routing
