#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "rfwsn/energy.hpp"

using namespace rfwsn::energy;

TEST_CASE("state currents") {
  const ConsumptionProfile p;
  CHECK(p.state_current_ma(RadioState::Sleep) == doctest::Approx(0.062).epsilon(1e-15));
  CHECK(p.state_current_ma(RadioState::Idle) == 9.0);
  CHECK(p.state_current_ma(RadioState::Tx) == doctest::Approx(59.26).epsilon(1e-15));
  CHECK(p.state_current_ma(RadioState::Rx) == doctest::Approx(58.56).epsilon(1e-15));
  ConsumptionProfile bad;
  bad.rx_current_ma = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("battery construction") {
  CHECK_THROWS_AS(Battery(0.0, 3.7), std::invalid_argument);
  CHECK_THROWS_AS(Battery(1150, 3.7, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(Battery(1150, 3.7, 1.0, 1200), std::invalid_argument);
  CHECK_THROWS_AS(Battery(1150, 3.7, 1.0, -1), std::invalid_argument);
  const Battery b(1150, 3.7);
  CHECK(b.charge_mah() == 1150);
  CHECK(b.one_c_current_ma() == 1150);
}

TEST_CASE("peukert runtime") {
  CHECK(peukert_runtime(Battery(1000, 3.7, 1.0), 1.0) == 1.0);
  CHECK(peukert_runtime(Battery(1000, 3.7, 1.35), 1.0) == 1.0);
  CHECK(peukert_runtime(Battery(1000, 3.7, 1.3), 2.0) ==
        doctest::Approx(0.40612619817811774).epsilon(1e-12));
  CHECK_THROWS_AS(peukert_runtime(Battery(1000, 3.7), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(peukert_runtime(Battery(1000, 3.7), -1.0), std::invalid_argument);

  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> cap(10, 5000), cur(0.001, 5);
  for (int i = 0; i < 1000; ++i) {
    const double c = cap(gen), a = cur(gen);
    CHECK(peukert_runtime(Battery(c, 3.7, 1.0), a) == (c / 1000.0) / a);
  }
}

TEST_CASE("drain") {
  const ConsumptionProfile p;
  const Battery full(1150, 3.7);
  const Battery after = drain(full, p, RadioState::Tx, 3600.0);
  CHECK(full.charge_mah() - after.charge_mah() == doctest::Approx(59.26).epsilon(1e-12));
  CHECK(drain(full, p, RadioState::Rx, 0.0) == full);

  // Continuous Tx from full: 1150 / 59.26 h.
  const double hours = 1150.0 / p.state_current_ma(RadioState::Tx);
  CHECK(hours == doctest::Approx(19.40600742490719).epsilon(1e-12));
  CHECK(std::abs(hours - 19.39) / 19.39 < 0.005);
  CHECK_FALSE(drain(full, p, RadioState::Tx, hours * 3600.0 * (1 - 1e-9)).depleted());
  CHECK(drain(full, p, RadioState::Tx, hours * 3600.0 * (1 + 1e-9)).depleted());
  CHECK(drain(full, p, RadioState::Tx, 1e6).charge_mah() == 0.0);
}

TEST_CASE("peukert penalty only above 1C") {
  const Battery b(1000, 3.7, 1.3);
  // 500 mA is below 1C: plain coulomb count.
  CHECK(effective_drawn_mah(b, 500, 3600) == doctest::Approx(500).epsilon(1e-12));
  // 2000 mA for 0.1 h: 200 mAh scaled by 2^0.3.
  CHECK(effective_drawn_mah(b, 2000, 360) ==
        doctest::Approx(200 * std::pow(2.0, 0.3)).epsilon(1e-12));
  CHECK(effective_drawn_mah(Battery(1000, 3.7, 1.0), 2000, 360) ==
        doctest::Approx(200).epsilon(1e-12));
}

TEST_CASE("charge") {
  const Battery nearly(1150, 3.7, 1.0, 1149.9);
  CHECK(charge(nearly, 3073, 3600).charge_mah() == 1150.0);
  const Battery empty(1150, 3.7, 1.0, 0.0);
  CHECK(charge(empty, 158, 3600).charge_mah() == doctest::Approx(0.158).epsilon(1e-12));
  CHECK(charge(empty, 0, 1e6) == empty);
}

TEST_CASE("residual fraction") {
  CHECK(residual_fraction(Battery(1150, 3.7)) == 1.0);
  CHECK(residual_fraction(Battery(1150, 3.7, 1.0, 1150 - 264.5)) ==
        doctest::Approx(0.77).epsilon(1e-12));
  CHECK(264.5 == 1150 * 0.23);
  CHECK(residual_fraction(Battery(1150, 3.7, 1.0, 0.0)) == 0.0);
}

TEST_CASE("charge conservation and commutation away from the bounds") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> dur(0, 30), cur(0, 5000);
  std::uniform_int_distribution<int> st(0, 3);
  const ConsumptionProfile p;
  for (int trial = 0; trial < 200; ++trial) {
    Battery b(1150, 3.7, 1.0, 600);
    double expected = 600;
    for (int i = 0; i < 50; ++i) {
      const double d = dur(gen);
      if (i % 2 == 0) {
        const auto s = kAllRadioStates[static_cast<std::size_t>(st(gen))];
        b = drain(b, p, s, d);
        expected -= p.state_current_ma(s) * d / 3600.0;
      } else {
        const double c = cur(gen);
        b = charge(b, c, d);
        expected += c * 1e-3 * d / 3600.0;
      }
    }
    CHECK(std::abs(b.charge_mah() - expected) < 1e-9);
  }
  const Battery start(1150, 3.7, 1.0, 500);
  const Battery ab = charge(drain(start, p, RadioState::Tx, 10), 2000, 20);
  const Battery ba = drain(charge(start, 2000, 20), p, RadioState::Tx, 10);
  CHECK(ab.charge_mah() == doctest::Approx(ba.charge_mah()).epsilon(1e-15));
}
