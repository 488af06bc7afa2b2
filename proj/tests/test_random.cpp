#include <doctest.h>

#include <set>

#include "adgcolor/random.hpp"

using namespace adgcolor;

TEST_CASE("Philox4x32-10 known answers") {
  // Reference vectors from the Random123 distribution (kat_vectors).
  const auto zero = Philox4x32::hash({0, 0, 0, 0}, {0, 0});
  CHECK(zero == Philox4x32::counter_type{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  const auto ones = Philox4x32::hash({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                     {0xffffffffu, 0xffffffffu});
  CHECK(ones == Philox4x32::counter_type{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  const auto pi = Philox4x32::hash({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                                   {0xa4093822u, 0x299f31d0u});
  CHECK(pi == Philox4x32::counter_type{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("random_bits separates streams and counters") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      seen.insert(random_bits(1, Stream::sim_col_draw, a, b));
      seen.insert(random_bits(1, Stream::tiebreak, a, b));
    }
  CHECK(seen.size() == 512);
  CHECK(random_bits(9, Stream::generator, 5) == random_bits(9, Stream::generator, 5));
}

TEST_CASE("uniform_1_to stays in range") {
  CHECK(uniform_1_to(0, 3) == 1);
  CHECK(uniform_1_to(~std::uint64_t{0}, 3) == 3);
  CounterStream s(4, Stream::generator);
  std::set<std::uint64_t> hit;
  for (int i = 0; i < 1000; ++i) {
    const auto x = uniform_1_to(s.next(), 5);
    CHECK(x >= 1);
    CHECK(x <= 5);
    hit.insert(x);
  }
  CHECK(hit.size() == 5);
}

TEST_CASE("to_unit maps into [0,1)") {
  CHECK(to_unit(0) == 0.0);
  CHECK(to_unit(~std::uint64_t{0}) < 1.0);
}
