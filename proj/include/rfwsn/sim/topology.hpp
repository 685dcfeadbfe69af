#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rfwsn/routing/min_hop.hpp"

namespace rfwsn::sim {

struct Position {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

double distance(Position a, Position b);

struct Topology {
  std::vector<Position> positions;
  routing::Adjacency adjacency;

  friend bool operator==(const Topology&, const Topology&) = default;
};

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unit-disk graph: two nodes are neighbours when strictly closer than `range`.
Topology build_topology(std::vector<Position> positions, double range_m);

bool is_connected(const routing::Adjacency& adjacency);

/// Uniform placement from the seeded stream, redrawn until connected. Throws
/// TopologyError naming (count, area, range) after `max_attempts` failures.
Topology generate_topology(std::uint64_t seed, std::size_t node_count, double width_m,
                           double height_m, double range_m, int max_attempts = 1000);

}  // namespace rfwsn::sim
