#include "rfwsn/routing/data_packet.hpp"

#include <algorithm>
#include <stdexcept>

namespace rfwsn::routing {

std::vector<DataPart> split_payload(std::span<const std::uint8_t> raw, int m) {
  if (raw.empty()) throw std::invalid_argument("cannot split an empty payload");
  if (m < 1 || m > 255) throw std::invalid_argument("part count must lie in [1, 255]");
  const std::size_t parts = static_cast<std::size_t>(m);
  const std::size_t base = raw.size() / parts;
  const std::size_t extra = raw.size() % parts;

  std::vector<DataPart> out;
  out.reserve(parts);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    const std::size_t len = base + (i < extra ? 1 : 0);
    out.push_back({static_cast<std::uint8_t>(i + 1), static_cast<std::uint8_t>(m),
                   std::vector<std::uint8_t>(raw.begin() + offset, raw.begin() + offset + len)});
    offset += len;
  }
  return out;
}

std::optional<std::vector<std::uint8_t>> reassemble(std::vector<DataPart> parts) {
  if (parts.empty()) return std::nullopt;
  const std::uint8_t count = parts.front().count;
  if (parts.size() != count) return std::nullopt;
  std::sort(parts.begin(), parts.end(),
            [](const DataPart& a, const DataPart& b) { return a.index < b.index; });
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].count != count || parts[i].index != i + 1) return std::nullopt;
    out.insert(out.end(), parts[i].bytes.begin(), parts[i].bytes.end());
  }
  return out;
}

}  // namespace rfwsn::routing
