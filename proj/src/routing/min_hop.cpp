#include "rfwsn/routing/min_hop.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace rfwsn::routing {

std::optional<std::vector<NodeId>> min_hop_route(const Adjacency& adjacency, NodeId source,
                                                 NodeId sink,
                                                 const std::function<bool(NodeId)>& usable) {
  const std::size_t n = adjacency.size();
  if (source >= n || sink >= n) throw std::out_of_range("route endpoint outside topology");
  const auto ok = [&](NodeId v) { return !usable || usable(v); };
  if (!ok(source) || !ok(sink)) return std::nullopt;

  // Hop distance to the sink, then walk greedily from the source taking the
  // smallest id that stays on a shortest path.
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n, kUnreached);
  std::deque<NodeId> frontier{sink};
  dist[sink] = 0;
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop_front();
    for (const NodeId v : adjacency[u]) {
      if (dist[v] != kUnreached || !ok(v)) continue;
      dist[v] = dist[u] + 1;
      frontier.push_back(v);
    }
  }
  if (dist[source] == kUnreached) return std::nullopt;

  std::vector<NodeId> path{source};
  NodeId at = source;
  while (at != sink) {
    NodeId next = kNoNode;
    for (const NodeId v : adjacency[at]) {
      if (dist[v] != kUnreached && dist[v] + 1 == dist[at] && v < next) next = v;
    }
    path.push_back(next);
    at = next;
  }
  return path;
}

}  // namespace rfwsn::routing
