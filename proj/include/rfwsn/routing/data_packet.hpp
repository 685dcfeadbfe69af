#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rfwsn/types.hpp"

namespace rfwsn::routing {

enum class CodeId : std::uint8_t { Data = 0, Error = 1, Acknowledge = 2 };

/// Sequence numbers pack (source, message, part) so the sink can group parts.
namespace seqno {
constexpr std::uint64_t make(NodeId source, std::uint32_t message, std::uint8_t part) {
  return (static_cast<std::uint64_t>(source & 0xFFFFFFu) << 40) |
         (static_cast<std::uint64_t>(message) << 8) | part;
}
constexpr NodeId source(std::uint64_t sn) { return static_cast<NodeId>(sn >> 40); }
constexpr std::uint32_t message(std::uint64_t sn) {
  return static_cast<std::uint32_t>((sn >> 8) & 0xFFFFFFFFu);
}
constexpr std::uint8_t part(std::uint64_t sn) { return static_cast<std::uint8_t>(sn & 0xFFu); }
/// Identifies the original message (all parts share it).
constexpr std::uint64_t message_key(std::uint64_t sn) { return sn >> 8; }
}  // namespace seqno

/// One part of a split message. The first four fields form the header.
struct DataPacket {
  CodeId code_id = CodeId::Data;      // C_ID
  NodeId next_node = kNoNode;         // N_ID
  std::uint64_t sequence_number = 0;  // S_N
  std::uint32_t visited_count = 0;    // N_k
  std::uint8_t part_index = 1;        // k, 1-based
  std::uint8_t part_count = 1;        // M
  std::vector<std::uint8_t> payload;

  friend bool operator==(const DataPacket&, const DataPacket&) = default;
};

struct DataPart {
  std::uint8_t index = 1;  // 1..count
  std::uint8_t count = 1;
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const DataPart&, const DataPart&) = default;
};

/// Splits `raw` into `m` parts whose sizes differ by at most one byte, larger
/// parts first. With m > raw.size() the trailing parts are empty but indexed.
/// Throws std::invalid_argument when raw is empty or m is outside [1, 255].
std::vector<DataPart> split_payload(std::span<const std::uint8_t> raw, int m);

/// Concatenates parts in index order; nullopt unless exactly indices 1..M of
/// one M are present.
std::optional<std::vector<std::uint8_t>> reassemble(std::vector<DataPart> parts);

}  // namespace rfwsn::routing
