#pragma once

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <memory>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "rfwsn/rng.hpp"
#include "rfwsn/routing/ant_node.hpp"
#include "rfwsn/routing/ants.hpp"
#include "rfwsn/routing/data_packet.hpp"
#include "rfwsn/routing/min_hop.hpp"
#include "rfwsn/routing/params.hpp"

// Common surface between the simulator and a routing protocol. The simulator
// owns time, radios and batteries; a protocol only decides what to send.

namespace rfwsn::routing {

inline constexpr NodeId kBroadcast = kNoNode - 1;

struct RouteRequest {
  std::uint64_t id = 0;
  NodeId source = kNoNode;
};

struct RouteReply {
  NodeId source = kNoNode;
  std::vector<NodeId> path;  // source ... sink
};

using Frame = std::variant<DataPacket, ForwardAnt, BackwardAnt, RouteRequest, RouteReply>;

bool is_data(const Frame& f);

struct Transmission {
  NodeId from = kNoNode;
  NodeId to = kNoNode;  // kBroadcast reaches every live neighbour
  Frame frame;
};

enum class DropReason { Loop, DeadEnd, NoRoute, NodeDepleted, BufferOverflow };
inline constexpr std::size_t kDropReasonCount = 5;
std::string_view to_string(DropReason r);

struct Effects {
  std::vector<Transmission> sends;
  std::vector<DataPacket> delivered;
  std::vector<DropReason> drops;  // one entry per dropped data packet
  std::vector<std::pair<NodeId, SimTime>> timers;
  std::uint64_t ants_launched = 0;
  std::uint64_t ants_arrived = 0;
  std::uint64_t ants_completed = 0;
  std::uint64_t ants_eliminated = 0;
  std::uint64_t ants_lost = 0;
  std::uint64_t deposit_clamps = 0;
};

/// What a protocol may observe about the network at the current instant.
class NetworkView {
 public:
  virtual ~NetworkView() = default;
  virtual SimTime now() const = 0;
  virtual NodeId sink() const = 0;
  virtual const Adjacency& adjacency() const = 0;
  virtual bool alive(NodeId node) const = 0;
  /// Residual battery fraction in [0, 1].
  virtual double residual(NodeId node) const = 0;
};

class Protocol {
 public:
  virtual ~Protocol() = default;

  virtual ProtocolKind kind() const = 0;
  virtual OverhearPolicy overhear_policy() const = 0;
  virtual bool launches_ants() const { return false; }

  virtual void initialize(const NetworkView& view) = 0;
  /// A freshly generated packet at its source (next_node == source).
  virtual void originate_data(const NetworkView& view, NodeId source, DataPacket packet, Rng& rng,
                              Effects& out) = 0;
  virtual void launch_ant(const NetworkView& view, NodeId source, Rng& rng, Effects& out);
  /// A frame addressed to `at` (or broadcast) finished arriving from `from`.
  virtual void receive(const NetworkView& view, NodeId at, NodeId from, const Frame& frame,
                       Rng& rng, Effects& out) = 0;
  virtual void on_timer(const NetworkView& view, NodeId node, Effects& out);

  /// Data packets held inside the protocol (not on air); they count as in flight at the horizon.
  virtual std::size_t buffered_data() const { return 0; }
  /// CSV routing state dump (node,destination,neighbor,tau,probability).
  virtual void write_tables(std::ostream& out) const;
};

/// IEEABR and EEABR: identical machinery, differing only in table start-up and
/// the destination-adjacent data shortcut.
class AntRouting final : public Protocol {
 public:
  AntRouting(ProtocolKind kind, const ProtocolParams& params);

  ProtocolKind kind() const override { return kind_; }
  OverhearPolicy overhear_policy() const override { return OverhearPolicy::HeaderOnly; }
  bool launches_ants() const override { return true; }

  void initialize(const NetworkView& view) override;
  void originate_data(const NetworkView& view, NodeId source, DataPacket packet, Rng& rng,
                      Effects& out) override;
  void launch_ant(const NetworkView& view, NodeId source, Rng& rng, Effects& out) override;
  void receive(const NetworkView& view, NodeId at, NodeId from, const Frame& frame, Rng& rng,
               Effects& out) override;
  void on_timer(const NetworkView& view, NodeId node, Effects& out) override;
  void write_tables(std::ostream& out) const override;

  const AntNode& node(NodeId id) const { return nodes_.at(id); }

 private:
  NeighborEnergies live_neighbors(const NetworkView& view, NodeId node) const;
  double energy(const NetworkView& view, NodeId node) const;
  void route_data(const NetworkView& view, NodeId at, NodeId from, DataPacket packet,
                  Effects& out);
  void forward_ant(const NetworkView& view, NodeId at, NodeId from, ForwardAnt ant, Rng& rng,
                   Effects& out);

  ProtocolKind kind_;
  ProtocolParams params_;
  std::vector<AntNode> nodes_;
  std::uint64_t next_ant_id_ = 1;
};

/// Reactive shortest-path baseline: a flooded route request, a reply along the
/// min-hop path, data pinned to that path until a node on it is depleted.
class MinHopRouting final : public Protocol {
 public:
  static constexpr std::size_t kMaxPending = 64;
  static constexpr std::int64_t kDiscoveryTimeoutNs = 10'000'000'000;

  explicit MinHopRouting(OverhearPolicy overhear);

  ProtocolKind kind() const override { return ProtocolKind::MinHop; }
  OverhearPolicy overhear_policy() const override { return overhear_; }

  void initialize(const NetworkView& view) override;
  void originate_data(const NetworkView& view, NodeId source, DataPacket packet, Rng& rng,
                      Effects& out) override;
  void receive(const NetworkView& view, NodeId at, NodeId from, const Frame& frame, Rng& rng,
               Effects& out) override;
  std::size_t buffered_data() const override;
  void write_tables(std::ostream& out) const override;

  std::optional<std::vector<NodeId>> route(NodeId source) const;
  std::uint64_t discoveries() const noexcept { return next_request_id_ - 1; }

 private:
  struct SourceState {
    std::optional<std::vector<NodeId>> route;
    std::deque<DataPacket> pending;
    bool discovering = false;
    SimTime discovery_started;
  };

  bool route_usable(const NetworkView& view, const std::vector<NodeId>& route) const;
  void send_along(const std::vector<NodeId>& route, NodeId at, DataPacket packet, Effects& out);

  OverhearPolicy overhear_;
  std::vector<SourceState> sources_;
  std::vector<std::set<std::uint64_t>> seen_requests_;
  std::uint64_t next_request_id_ = 1;
};

std::unique_ptr<Protocol> make_protocol(ProtocolKind kind, const ProtocolParams& params,
                                        OverhearPolicy baseline_overhear);

}  // namespace rfwsn::routing
