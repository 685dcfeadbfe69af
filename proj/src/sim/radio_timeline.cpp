#include "rfwsn/sim/radio_timeline.hpp"

#include <stdexcept>

namespace rfwsn::sim {

void RadioTimeline::book(SimTime start, SimTime end, energy::RadioState state) {
  if (start < busy_until() || end < start) {
    throw std::logic_error("radio booking overlaps existing activity");
  }
  if (end == start) return;
  booked_.push_back({start, end, state});
}

}  // namespace rfwsn::sim
