#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rfwsn/types.hpp"

namespace rfwsn::routing {

/// Symmetric neighbour lists indexed by node id, each sorted ascending.
using Adjacency = std::vector<std::vector<NodeId>>;

/// Shortest path by hop count from `source` to `sink`; among equally short
/// paths the lexicographically smallest node sequence. Nodes rejected by
/// `usable` (when given) are avoided. nullopt when no path exists.
std::optional<std::vector<NodeId>> min_hop_route(
    const Adjacency& adjacency, NodeId source, NodeId sink,
    const std::function<bool(NodeId)>& usable = {});

}  // namespace rfwsn::routing
