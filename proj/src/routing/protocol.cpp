#include "rfwsn/routing/protocol.hpp"

#include <algorithm>
#include <ostream>

#include "rfwsn/format.hpp"

namespace rfwsn::routing {

bool is_data(const Frame& f) { return std::holds_alternative<DataPacket>(f); }

std::string_view to_string(DropReason r) {
  switch (r) {
    case DropReason::Loop: return "loop";
    case DropReason::DeadEnd: return "dead_end";
    case DropReason::NoRoute: return "no_route";
    case DropReason::NodeDepleted: return "node_depleted";
    case DropReason::BufferOverflow: return "buffer_overflow";
  }
  return "?";
}

void Protocol::launch_ant(const NetworkView&, NodeId, Rng&, Effects&) {}
void Protocol::on_timer(const NetworkView&, NodeId, Effects&) {}
void Protocol::write_tables(std::ostream& out) const {
  out << "node,destination,neighbor,tau,probability\n";
}

// ---------------------------------------------------------------------------
// Ant protocols

AntRouting::AntRouting(ProtocolKind kind, const ProtocolParams& params)
    : kind_(kind), params_(params) {
  if (kind == ProtocolKind::MinHop) throw std::invalid_argument("AntRouting needs an ant protocol");
  params_.validate();
}

void AntRouting::initialize(const NetworkView& view) {
  const Adjacency& adj = view.adjacency();
  nodes_.clear();
  nodes_.reserve(adj.size());
  for (NodeId id = 0; id < adj.size(); ++id) {
    nodes_.emplace_back(id, view.sink(), kind_, params_);
    nodes_.back().initialize(adj[id]);
  }
}

double AntRouting::energy(const NetworkView& view, NodeId node) const {
  return std::clamp(view.residual(node), 0.0, 1.0) * params_.initial_energy;
}

NeighborEnergies AntRouting::live_neighbors(const NetworkView& view, NodeId node) const {
  NeighborEnergies out;
  for (const NodeId n : view.adjacency()[node]) {
    if (view.alive(n)) out.emplace(n, energy(view, n));
  }
  return out;
}

void AntRouting::route_data(const NetworkView& view, NodeId at, NodeId from, DataPacket packet,
                            Effects& out) {
  const DataOutcome o = nodes_[at].handle_data_packet(packet, from, live_neighbors(view, at));
  switch (o.verdict) {
    case DataVerdict::Forwarded: out.sends.push_back({at, o.next, std::move(packet)}); break;
    case DataVerdict::Delivered: out.delivered.push_back(std::move(packet)); break;
    case DataVerdict::DiscardedDuplicate: out.drops.push_back(DropReason::Loop); break;
    case DataVerdict::DeadEnd: out.drops.push_back(DropReason::DeadEnd); break;
    case DataVerdict::DiscardedOverheard: break;
  }
}

void AntRouting::originate_data(const NetworkView& view, NodeId source, DataPacket packet, Rng&,
                                Effects& out) {
  packet.next_node = source;
  route_data(view, source, kNoNode, std::move(packet), out);
}

void AntRouting::forward_ant(const NetworkView& view, NodeId at, NodeId from, ForwardAnt ant,
                             Rng& rng, Effects& out) {
  AntNode& node = nodes_[at];
  const ForwardOutcome o =
      node.handle_forward_ant(ant, from, view.now(), energy(view, at),
                              live_neighbors(view, at), rng);
  switch (o.verdict) {
    case ForwardVerdict::Forwarded:
      out.timers.emplace_back(at, view.now() + params_.record_timeout);
      out.sends.push_back({at, o.next, std::move(ant)});
      break;
    case ForwardVerdict::Eliminated: ++out.ants_eliminated; break;
    case ForwardVerdict::ArrivedAtSink: {
      ++out.ants_arrived;
      auto [back, deposit] = node.make_backward_ant(ant);
      if (deposit.clamped) ++out.deposit_clamps;
      const auto hop = node.backward_first_hop(ant, view.now());
      if (hop && view.alive(*hop)) {
        out.sends.push_back({at, *hop, back});
      } else {
        ++out.ants_lost;
      }
      break;
    }
  }
}

void AntRouting::launch_ant(const NetworkView& view, NodeId source, Rng& rng, Effects& out) {
  if (source == view.sink()) return;
  ForwardAnt ant;
  ant.id = next_ant_id_++;
  ant.source = source;
  ant.destination = view.sink();
  ++out.ants_launched;
  forward_ant(view, source, kNoNode, std::move(ant), rng, out);
}

void AntRouting::receive(const NetworkView& view, NodeId at, NodeId from, const Frame& frame,
                         Rng& rng, Effects& out) {
  if (const auto* data = std::get_if<DataPacket>(&frame)) {
    route_data(view, at, from, *data, out);
  } else if (const auto* fwd = std::get_if<ForwardAnt>(&frame)) {
    forward_ant(view, at, from, *fwd, rng, out);
  } else if (const auto* bwd = std::get_if<BackwardAnt>(&frame)) {
    BackwardAnt ant = *bwd;
    const BackwardOutcome o = nodes_[at].handle_backward_ant(ant, from, view.now());
    switch (o.verdict) {
      case BackwardVerdict::Forwarded:
        if (view.alive(o.next)) {
          out.sends.push_back({at, o.next, ant});
        } else {
          ++out.ants_lost;
        }
        break;
      case BackwardVerdict::Completed: ++out.ants_completed; break;
      case BackwardVerdict::Lost: ++out.ants_lost; break;
    }
  }
}

void AntRouting::on_timer(const NetworkView& view, NodeId node, Effects&) {
  nodes_.at(node).records().purge_expired(view.now());
}

void AntRouting::write_tables(std::ostream& out) const {
  Protocol::write_tables(out);
  for (const AntNode& n : nodes_) {
    for (const NodeId d : n.table().destinations()) {
      const auto probs = n.table().probabilities(d, params_.alpha);
      for (const auto& [nbr, tau] : n.table().entries(d)) {
        out << n.id() << ',' << d << ',' << nbr << ',' << format_double(tau) << ','
            << format_double(probs.at(nbr)) << '\n';
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Min-hop baseline

MinHopRouting::MinHopRouting(OverhearPolicy overhear) : overhear_(overhear) {}

void MinHopRouting::initialize(const NetworkView& view) {
  const std::size_t n = view.adjacency().size();
  sources_.assign(n, SourceState{});
  seen_requests_.assign(n, {});
  next_request_id_ = 1;
}

bool MinHopRouting::route_usable(const NetworkView& view,
                                 const std::vector<NodeId>& route) const {
  return std::all_of(route.begin(), route.end(), [&](NodeId n) { return view.alive(n); });
}

void MinHopRouting::send_along(const std::vector<NodeId>& route, NodeId at, DataPacket packet,
                               Effects& out) {
  const auto it = std::find(route.begin(), route.end(), at);
  if (it == route.end() || it + 1 == route.end()) {
    out.drops.push_back(DropReason::NoRoute);
    return;
  }
  ++packet.visited_count;
  packet.next_node = *(it + 1);
  out.sends.push_back({at, packet.next_node, std::move(packet)});
}

void MinHopRouting::originate_data(const NetworkView& view, NodeId source, DataPacket packet,
                                   Rng&, Effects& out) {
  SourceState& s = sources_.at(source);
  if (s.route && route_usable(view, *s.route)) {
    send_along(*s.route, source, std::move(packet), out);
    return;
  }
  s.route.reset();
  s.pending.push_back(std::move(packet));
  if (s.pending.size() > kMaxPending) {
    s.pending.pop_front();
    out.drops.push_back(DropReason::BufferOverflow);
  }
  const bool stale = s.discovering &&
                     (view.now() - s.discovery_started).ns() > kDiscoveryTimeoutNs;
  if (!s.discovering || stale) {
    s.discovering = true;
    s.discovery_started = view.now();
    const RouteRequest req{next_request_id_++, source};
    seen_requests_[source].insert(req.id);
    out.sends.push_back({source, kBroadcast, req});
  }
}

void MinHopRouting::receive(const NetworkView& view, NodeId at, NodeId from, const Frame& frame,
                            Rng&, Effects& out) {
  (void)from;
  if (const auto* req = std::get_if<RouteRequest>(&frame)) {
    if (!seen_requests_[at].insert(req->id).second) return;
    if (at != view.sink()) {
      out.sends.push_back({at, kBroadcast, *req});
      return;
    }
    auto path = min_hop_route(view.adjacency(), req->source, view.sink(),
                              [&](NodeId n) { return view.alive(n); });
    if (!path || path->size() < 2) return;
    const NodeId back = (*path)[path->size() - 2];
    out.sends.push_back({at, back, RouteReply{req->source, std::move(*path)}});
  } else if (const auto* rep = std::get_if<RouteReply>(&frame)) {
    if (at == rep->source) {
      SourceState& s = sources_.at(at);
      s.route = rep->path;
      s.discovering = false;
      while (!s.pending.empty()) {
        send_along(*s.route, at, std::move(s.pending.front()), out);
        s.pending.pop_front();
      }
      return;
    }
    const auto it = std::find(rep->path.begin(), rep->path.end(), at);
    if (it == rep->path.end() || it == rep->path.begin()) return;
    const NodeId back = *(it - 1);
    if (view.alive(back)) out.sends.push_back({at, back, *rep});
  } else if (const auto* data = std::get_if<DataPacket>(&frame)) {
    if (at == view.sink()) {
      out.delivered.push_back(*data);
      return;
    }
    SourceState& s = sources_.at(seqno::source(data->sequence_number));
    if (!s.route || !route_usable(view, *s.route)) {
      s.route.reset();
      out.drops.push_back(DropReason::NoRoute);
      return;
    }
    send_along(*s.route, at, *data, out);
  }
}

std::size_t MinHopRouting::buffered_data() const {
  std::size_t n = 0;
  for (const auto& s : sources_) n += s.pending.size();
  return n;
}

std::optional<std::vector<NodeId>> MinHopRouting::route(NodeId source) const {
  return sources_.at(source).route;
}

void MinHopRouting::write_tables(std::ostream& out) const {
  out << "source,route\n";
  for (NodeId id = 0; id < sources_.size(); ++id) {
    if (!sources_[id].route) continue;
    out << id << ',';
    const auto& r = *sources_[id].route;
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
    out << '\n';
  }
}

std::unique_ptr<Protocol> make_protocol(ProtocolKind kind, const ProtocolParams& params,
                                        OverhearPolicy baseline_overhear) {
  if (kind == ProtocolKind::MinHop) return std::make_unique<MinHopRouting>(baseline_overhear);
  return std::make_unique<AntRouting>(kind, params);
}

}  // namespace rfwsn::routing
