#pragma once

#include <algorithm>
#include <deque>

#include "rfwsn/energy.hpp"
#include "rfwsn/types.hpp"

namespace rfwsn::sim {

/// Future activity of one radio. Intervals are booked in time order and
/// consumed by settle(); any unbooked gap is Sleep.
class RadioTimeline {
 public:
  struct Interval {
    SimTime start;
    SimTime end;
    energy::RadioState state;
  };

  /// Earliest instant at which a new booking may start.
  SimTime busy_until() const noexcept {
    return booked_.empty() ? settled_ : std::max(settled_, booked_.back().end);
  }
  SimTime settled_until() const noexcept { return settled_; }
  bool idle_at(SimTime t) const noexcept { return busy_until() <= t; }

  /// Requires start >= busy_until() and end >= start. Empty intervals are ignored.
  void book(SimTime start, SimTime end, energy::RadioState state);

  /// Walks the timeline from settled_until() to `t`, calling
  /// consume(state, nanoseconds) for each contiguous piece.
  template <typename Consume>
  void settle(SimTime t, Consume&& consume) {
    while (settled_ < t) {
      if (booked_.empty() || booked_.front().start >= t) {
        consume(energy::RadioState::Sleep, (t - settled_).ns());
        settled_ = t;
        break;
      }
      Interval& head = booked_.front();
      if (head.start > settled_) {
        consume(energy::RadioState::Sleep, (head.start - settled_).ns());
        settled_ = head.start;
      }
      const SimTime stop = std::min(head.end, t);
      consume(head.state, (stop - settled_).ns());
      settled_ = stop;
      if (stop == head.end) {
        booked_.pop_front();
      } else {
        head.start = stop;
      }
    }
  }

  std::size_t pending() const noexcept { return booked_.size(); }

 private:
  std::deque<Interval> booked_;
  SimTime settled_;
};

}  // namespace rfwsn::sim
