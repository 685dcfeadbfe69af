#include "rfwsn/routing/routing_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rfwsn::routing {

DestinationShares destination_shares(std::size_t neighbor_count) {
  if (neighbor_count == 0) throw IsolatedNodeError("node has no neighbours");
  const auto n = static_cast<std::int64_t>(neighbor_count);
  const std::int64_t den = 4 * n * n;
  return {Fraction{9 * n - 5, den}, n > 1 ? Fraction{4 * n - 5, den} : Fraction{0, 1}};
}

bool RoutingTable::has_destination(NodeId destination) const {
  return entries_.contains(destination);
}

bool RoutingTable::has_link(NodeId destination, NodeId neighbor) const {
  const auto it = entries_.find(destination);
  return it != entries_.end() && it->second.contains(neighbor);
}

double RoutingTable::pheromone(NodeId destination, NodeId neighbor) const {
  if (!has_link(destination, neighbor)) {
    throw ProtocolError("node " + std::to_string(owner_) + " has no entry for neighbour " +
                        std::to_string(neighbor) + " toward " + std::to_string(destination));
  }
  return entries_.at(destination).at(neighbor);
}

void RoutingTable::set_pheromone(NodeId destination, NodeId neighbor, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("pheromone must be positive and finite");
  }
  entries_[destination][neighbor] = tau;
}

const std::map<NodeId, double>& RoutingTable::entries(NodeId destination) const {
  static const std::map<NodeId, double> empty;
  const auto it = entries_.find(destination);
  return it == entries_.end() ? empty : it->second;
}

std::vector<NodeId> RoutingTable::destinations() const {
  std::vector<NodeId> out;
  out.reserve(entries_.size());
  for (const auto& [d, _] : entries_) out.push_back(d);
  return out;
}

std::map<NodeId, double> RoutingTable::probabilities(NodeId destination, double alpha) const {
  std::map<NodeId, double> out;
  double total = 0.0;
  for (const auto& [n, tau] : entries(destination)) {
    const double w = std::pow(tau, alpha);
    out[n] = w;
    total += w;
  }
  for (auto& [n, p] : out) p /= total;
  return out;
}

void init_uniform(RoutingTable& table, std::span<const NodeId> neighbors, NodeId destination) {
  if (neighbors.empty()) {
    throw IsolatedNodeError("node " + std::to_string(table.owner()) + " has no neighbours");
  }
  const double tau = 1.0 / static_cast<double>(neighbors.size());
  for (const NodeId n : neighbors) table.set_pheromone(destination, n, tau);
}

void init_destination_aware(RoutingTable& table, std::span<const NodeId> neighbors,
                            NodeId destination) {
  if (neighbors.empty()) {
    throw IsolatedNodeError("node " + std::to_string(table.owner()) + " has no neighbours");
  }
  if (std::find(neighbors.begin(), neighbors.end(), destination) == neighbors.end()) {
    init_uniform(table, neighbors, destination);
    return;
  }
  const DestinationShares shares = destination_shares(neighbors.size());
  for (const NodeId n : neighbors) {
    table.set_pheromone(destination, n,
                        n == destination ? shares.destination.value() : shares.other.value());
  }
}

double visibility(double initial_energy, double node_energy) {
  if (!(initial_energy > 0.0)) throw std::invalid_argument("initial energy must be positive");
  if (!(node_energy >= 0.0) || node_energy > initial_energy) {
    throw std::invalid_argument("node energy must lie in [0, initial energy]");
  }
  return 1.0 / (initial_energy - node_energy + 1e-6 * initial_energy);
}

std::vector<std::pair<NodeId, double>> selection_probabilities(
    const RoutingTable& table, NodeId destination, const NeighborEnergies& energies,
    std::span<const NodeId> excluded, const SelectionWeights& weights) {
  std::vector<std::pair<NodeId, double>> out;
  double total = 0.0;
  for (const auto& [n, tau] : table.entries(destination)) {
    const auto e = energies.find(n);
    if (e == energies.end()) continue;
    if (std::find(excluded.begin(), excluded.end(), n) != excluded.end()) continue;
    const double w = std::pow(tau, weights.alpha) *
                     std::pow(visibility(weights.initial_energy, e->second), weights.beta);
    out.emplace_back(n, w);
    total += w;
  }
  for (auto& [_, p] : out) p /= total;
  return out;
}

std::optional<NodeId> select_next_hop(const RoutingTable& table, const ForwardAnt& ant,
                                      const NeighborEnergies& energies, Rng& rng,
                                      const SelectionWeights& weights) {
  const auto mem = ant.memory();
  const auto probs = selection_probabilities(
      table, ant.destination, energies, std::span<const NodeId>(mem.data(), ant.memory_size()),
      weights);
  if (probs.empty()) return std::nullopt;
  const double u = rng.uniform();
  double acc = 0.0;
  for (const auto& [n, p] : probs) {
    acc += p;
    if (u < acc) return n;
  }
  return probs.back().first;
}

Deposit compute_deposit(double initial_energy, double emin, double eavg, double fd,
                        double deposit_min, double deposit_max) {
  if (eavg < emin) throw std::invalid_argument("EAvg must not be below EMin");
  if (!(fd >= 0.0)) throw std::invalid_argument("hop distance must be non-negative");
  const double spread = eavg - fd;
  if (std::abs(spread) < 1e-9) return {deposit_max, true};
  const double denom = initial_energy - (emin - fd) / spread;
  if (!(denom > 0.0)) return {deposit_max, true};
  const double v = 1.0 / denom;
  if (v > deposit_max) return {deposit_max, true};
  if (v < deposit_min) return {deposit_min, true};
  return {v, false};
}

void apply_backward_update(RoutingTable& table, BackwardAnt& ant, Link link, double rho,
                           double phi, double tau_min) {
  if (link.from != table.owner() || !table.has_link(ant.destination, link.to)) {
    throw ProtocolError("backward ant " + std::to_string(ant.id) + " crossed unknown link " +
                        std::to_string(link.from) + "->" + std::to_string(link.to));
  }
  if (ant.hops_from_sink < 1) throw ProtocolError("backward ant hop count must be >= 1");
  const double tau = table.pheromone(ant.destination, link.to);
  const double updated =
      (1.0 - rho) * tau + ant.deposit / (phi * static_cast<double>(ant.hops_from_sink));
  table.set_pheromone(ant.destination, link.to, std::max(tau_min, updated));
  ++ant.hops_from_sink;
}

}  // namespace rfwsn::routing
