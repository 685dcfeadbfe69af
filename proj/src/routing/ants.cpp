#include "rfwsn/routing/ants.hpp"

#include <algorithm>

namespace rfwsn::routing {

void ForwardAnt::remember(NodeId node) {
  if (memory_size_ < memory_.size()) {
    memory_[memory_size_++] = node;
    return;
  }
  memory_[0] = memory_[1];
  memory_[1] = node;
}

bool ForwardAnt::in_memory(NodeId node) const {
  return std::find(memory_.begin(), memory_.begin() + memory_size_, node) !=
         memory_.begin() + memory_size_;
}

void ForwardAnt::record_energy(double energy) {
  min_energy = std::min(min_energy, energy);
  ++energy_samples;
  avg_energy += (energy - avg_energy) / static_cast<double>(energy_samples);
}

AntRecord* AntRecordStore::find(std::uint64_t ant_id, SimTime now) {
  auto it = records_.find(ant_id);
  if (it == records_.end()) return nullptr;
  if (it->second.expires_at <= now) {
    records_.erase(it);
    return nullptr;
  }
  return &it->second;
}

void AntRecordStore::store(const AntRecord& record) { records_[record.ant_id] = record; }

void AntRecordStore::erase(std::uint64_t ant_id) { records_.erase(ant_id); }

std::size_t AntRecordStore::purge_expired(SimTime now) {
  return std::erase_if(records_, [now](const auto& kv) { return kv.second.expires_at <= now; });
}

}  // namespace rfwsn::routing
