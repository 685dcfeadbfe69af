#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rfwsn/routing/data_packet.hpp"

using namespace rfwsn::routing;

TEST_CASE("split sizes") {
  const std::vector<std::uint8_t> raw{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  const auto one = split_payload(raw, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].bytes == raw);
  const auto three = split_payload(raw, 3);
  REQUIRE(three.size() == 3);
  CHECK(three[0].bytes.size() == 4);
  CHECK(three[1].bytes.size() == 3);
  CHECK(three[2].bytes.size() == 3);
  CHECK(three[0].index == 1);
  CHECK(three[2].index == 3);
  CHECK(three[2].count == 3);
  CHECK(*reassemble(three) == raw);
}

TEST_CASE("more parts than bytes") {
  const std::vector<std::uint8_t> raw{7, 8};
  const auto parts = split_payload(raw, 4);
  REQUIRE(parts.size() == 4);
  CHECK(parts[0].bytes.size() == 1);
  CHECK(parts[1].bytes.size() == 1);
  CHECK(parts[2].bytes.empty());
  CHECK(parts[3].index == 4);
  CHECK(*reassemble(parts) == raw);
}

TEST_CASE("split preconditions") {
  const std::vector<std::uint8_t> raw{1};
  CHECK_THROWS_AS(split_payload({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(split_payload(raw, 0), std::invalid_argument);
  CHECK_THROWS_AS(split_payload(raw, 256), std::invalid_argument);
}

TEST_CASE("round trip for random payloads and every m up to 16") {
  std::mt19937_64 gen(8);
  std::uniform_int_distribution<int> len(1, 200), byte(0, 255);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::uint8_t> raw(static_cast<std::size_t>(len(gen)));
    for (auto& b : raw) b = static_cast<std::uint8_t>(byte(gen));
    for (int m = 1; m <= 16; ++m) {
      auto parts = split_payload(raw, m);
      std::shuffle(parts.begin(), parts.end(), gen);
      CHECK(*reassemble(parts) == raw);
      std::size_t lo = SIZE_MAX, hi = 0;
      for (const auto& p : parts) {
        lo = std::min(lo, p.bytes.size());
        hi = std::max(hi, p.bytes.size());
      }
      CHECK(hi - lo <= 1);
    }
  }
}

TEST_CASE("reassembly refuses incomplete or inconsistent sets") {
  const std::vector<std::uint8_t> raw{1, 2, 3, 4};
  auto parts = split_payload(raw, 4);
  auto missing = parts;
  missing.pop_back();
  CHECK_FALSE(reassemble(missing).has_value());
  auto dup = parts;
  dup[3] = dup[2];
  CHECK_FALSE(reassemble(dup).has_value());
  auto mixed = parts;
  mixed[0].count = 3;
  CHECK_FALSE(reassemble(mixed).has_value());
  CHECK_FALSE(reassemble({}).has_value());
}

TEST_CASE("sequence numbers pack source, message and part") {
  const auto sn = seqno::make(0xABCDEF, 0x12345678, 3);
  CHECK(seqno::source(sn) == 0xABCDEF);
  CHECK(seqno::message(sn) == 0x12345678);
  CHECK(seqno::part(sn) == 3);
  CHECK(seqno::message_key(sn) == seqno::message_key(seqno::make(0xABCDEF, 0x12345678, 1)));
  CHECK(seqno::message_key(sn) != seqno::message_key(seqno::make(0xABCDEF, 0x12345679, 3)));
}
