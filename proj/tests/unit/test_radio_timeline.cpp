#include <doctest.h>

#include <array>
#include <stdexcept>

#include "rfwsn/sim/radio_timeline.hpp"

using namespace rfwsn;
using namespace rfwsn::sim;
using energy::RadioState;

namespace {

SimTime ns(std::int64_t v) { return SimTime::from_ns(v); }

struct Tally {
  std::array<std::int64_t, 4> by_state{};
  void operator()(RadioState s, std::int64_t d) { by_state[static_cast<std::size_t>(s)] += d; }
};

}  // namespace

TEST_CASE("gaps are sleep, bookings are their state") {
  RadioTimeline r;
  r.book(ns(10), ns(15), RadioState::Idle);
  r.book(ns(15), ns(40), RadioState::Tx);
  r.book(ns(50), ns(60), RadioState::Rx);
  CHECK(r.busy_until() == ns(60));
  CHECK_FALSE(r.idle_at(ns(59)));
  CHECK(r.idle_at(ns(60)));
  Tally t;
  r.settle(ns(20), t);
  CHECK(t.by_state == std::array<std::int64_t, 4>{10, 5, 5, 0});
  r.settle(ns(100), t);
  CHECK(t.by_state == std::array<std::int64_t, 4>{10 + 10 + 40, 5, 25, 10});
  CHECK(t.by_state[0] + t.by_state[1] + t.by_state[2] + t.by_state[3] == 100);
  CHECK(r.pending() == 0);
}

TEST_CASE("settling backwards or twice adds nothing") {
  RadioTimeline r;
  Tally t;
  r.settle(ns(50), t);
  r.settle(ns(50), t);
  r.settle(ns(20), t);
  CHECK(t.by_state[0] == 50);
}

TEST_CASE("bookings may not overlap") {
  RadioTimeline r;
  r.book(ns(10), ns(20), RadioState::Tx);
  CHECK_THROWS_AS(r.book(ns(15), ns(30), RadioState::Rx), std::logic_error);
  CHECK_THROWS_AS(r.book(ns(30), ns(25), RadioState::Rx), std::logic_error);
  Tally t;
  r.settle(ns(40), t);
  CHECK_THROWS_AS(r.book(ns(35), ns(45), RadioState::Rx), std::logic_error);
  r.book(ns(40), ns(40), RadioState::Rx);
  CHECK(r.pending() == 0);
}
