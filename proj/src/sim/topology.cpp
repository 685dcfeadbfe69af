#include "rfwsn/sim/topology.hpp"

#include <cmath>
#include <string>

#include "rfwsn/format.hpp"
#include "rfwsn/rng.hpp"

namespace rfwsn::sim {

double distance(Position a, Position b) { return std::hypot(a.x - b.x, a.y - b.y); }

Topology build_topology(std::vector<Position> positions, double range_m) {
  Topology t;
  t.positions = std::move(positions);
  const std::size_t n = t.positions.size();
  t.adjacency.assign(n, {});
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (distance(t.positions[i], t.positions[j]) < range_m) {
        t.adjacency[i].push_back(j);
        t.adjacency[j].push_back(i);
      }
    }
  }
  return t;  // lists come out sorted: i ascends for j's list, j ascends for i's
}

bool is_connected(const routing::Adjacency& adjacency) {
  if (adjacency.empty()) return true;
  std::vector<bool> seen(adjacency.size(), false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (const NodeId v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == adjacency.size();
}

Topology generate_topology(std::uint64_t seed, std::size_t node_count, double width_m,
                           double height_m, double range_m, int max_attempts) {
  if (!(width_m > 0.0) || !(height_m > 0.0) || !(range_m > 0.0)) {
    throw std::invalid_argument("area and radio range must be positive");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Position> pos(node_count);
    for (auto& p : pos) {
      p.x = rng.uniform(0.0, width_m);
      p.y = rng.uniform(0.0, height_m);
    }
    Topology t = build_topology(std::move(pos), range_m);
    if (is_connected(t.adjacency)) return t;
  }
  throw TopologyError("could not place a connected network of " + std::to_string(node_count) +
                      " nodes in " + format_double(width_m) + "x" + format_double(height_m) +
                      " m with radio range " + format_double(range_m) + " m after " +
                      std::to_string(max_attempts) + " attempts");
}

}  // namespace rfwsn::sim
