#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rfwsn/rng.hpp"
#include "rfwsn/routing/ants.hpp"
#include "rfwsn/types.hpp"

namespace rfwsn::routing {

class IsolatedNodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Initial next-hop probabilities when the destination is one of `neighbor_count`
/// neighbours: (9N-5)/(4N^2) for the destination, (4N-5)/(4N^2) for each other
/// neighbour (0 when N = 1).
struct DestinationShares {
  Fraction destination;
  Fraction other;
};
DestinationShares destination_shares(std::size_t neighbor_count);

/// Residual energies of candidate neighbours, in ant energy units [0, C].
using NeighborEnergies = std::map<NodeId, double>;

/// Per-node pheromone store: destination -> neighbour -> tau.
class RoutingTable {
 public:
  explicit RoutingTable(NodeId owner) : owner_(owner) {}

  NodeId owner() const noexcept { return owner_; }

  bool has_destination(NodeId destination) const;
  bool has_link(NodeId destination, NodeId neighbor) const;
  double pheromone(NodeId destination, NodeId neighbor) const;
  void set_pheromone(NodeId destination, NodeId neighbor, double tau);

  /// Neighbour -> tau for one destination, ordered by node id.
  const std::map<NodeId, double>& entries(NodeId destination) const;
  std::vector<NodeId> destinations() const;

  /// tau^alpha normalised over all neighbours of `destination` (selection
  /// probabilities when every neighbour has the same energy).
  std::map<NodeId, double> probabilities(NodeId destination, double alpha = 1.0) const;

 private:
  NodeId owner_;
  std::map<NodeId, std::map<NodeId, double>> entries_;
};

/// Every neighbour gets tau = 1/N for `destination`. Throws IsolatedNodeError
/// on an empty neighbour set.
void init_uniform(RoutingTable& table, std::span<const NodeId> neighbors, NodeId destination);

/// Destination-aware start: when `destination` is a neighbour it gets the
/// destination share and the rest the other share; otherwise uniform.
void init_destination_aware(RoutingTable& table, std::span<const NodeId> neighbors,
                            NodeId destination);

/// E = 1 / (c - e + 1e-6 c). Throws std::invalid_argument unless 0 <= e <= c.
double visibility(double initial_energy, double node_energy);

struct SelectionWeights {
  double alpha = 1.0;
  double beta = 1.0;
  double initial_energy = 2.0;
};

/// Normalised tau^alpha * E^beta over neighbours of `destination` that appear in
/// `energies` and are not in `excluded`. Ordered by node id; empty when no
/// neighbour is admissible.
std::vector<std::pair<NodeId, double>> selection_probabilities(
    const RoutingTable& table, NodeId destination, const NeighborEnergies& energies,
    std::span<const NodeId> excluded, const SelectionWeights& weights);

/// Samples the next hop for a forward ant, excluding its memory. nullopt is a
/// dead end: every neighbour is in memory or unreachable.
std::optional<NodeId> select_next_hop(const RoutingTable& table, const ForwardAnt& ant,
                                      const NeighborEnergies& energies, Rng& rng,
                                      const SelectionWeights& weights);

struct Deposit {
  double value = 0.0;
  bool clamped = false;
};

/// delta tau = 1 / (C - (EMin - Fd) / (EAvg - Fd)), kept inside
/// [deposit_min, deposit_max]. A vanishing EAvg - Fd or a non-positive
/// denominator yields deposit_max with `clamped` set.
Deposit compute_deposit(double initial_energy, double emin, double eavg, double fd,
                        double deposit_min = 1e-6, double deposit_max = 10.0);

struct Link {
  NodeId from = kNoNode;  // node whose table is updated
  NodeId to = kNoNode;    // neighbour the backward ant arrived from
};

/// tau(r,s) <- (1 - rho) tau(r,s) + deposit / (phi * Bd), floored at tau_min,
/// then advances the ant one hop (Bd + 1). Throws ProtocolError when the link
/// is not in the table.
void apply_backward_update(RoutingTable& table, BackwardAnt& ant, Link link, double rho,
                           double phi, double tau_min);

}  // namespace rfwsn::routing
