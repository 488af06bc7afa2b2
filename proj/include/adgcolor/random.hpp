#pragma once

#include <array>
#include <cstdint>

namespace adgcolor {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). A draw is a
// pure function of (key, counter), so parallel loops can draw per
// (vertex, round) without shared generator state.
class Philox4x32 {
 public:
  using counter_type = std::array<std::uint32_t, 4>;
  using key_type = std::array<std::uint32_t, 2>;

  static constexpr counter_type hash(counter_type ctr, key_type key) noexcept {
    ctr = round(ctr, key);
    for (int r = 1; r < 10; ++r) {
      key[0] += kW0;
      key[1] += kW1;
      ctr = round(ctr, key);
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kM0 = 0xD2511F53u;
  static constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kW0 = 0x9E3779B9u;
  static constexpr std::uint32_t kW1 = 0xBB67AE85u;

  static constexpr counter_type round(counter_type c, key_type k) noexcept {
    const std::uint64_t p0 = std::uint64_t{kM0} * c[0];
    const std::uint64_t p1 = std::uint64_t{kM1} * c[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }
};

// Stream tags keep independent uses of one seed apart.
enum class Stream : std::uint32_t {
  tiebreak = 1,
  sim_col_draw = 2,
  generator = 3,
  rmat = 4,
};

/// 64 random bits for (seed, stream, a, b).
constexpr std::uint64_t random_bits(std::uint64_t seed, Stream stream, std::uint64_t a,
                                    std::uint32_t b = 0) noexcept {
  const Philox4x32::counter_type ctr{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                                     b, static_cast<std::uint32_t>(stream)};
  const Philox4x32::key_type key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  const auto out = Philox4x32::hash(ctr, key);
  return (std::uint64_t{out[1]} << 32) | out[0];
}

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Uniform integer in [1, k] (k >= 1) by multiply-shift.
constexpr std::uint64_t uniform_1_to(std::uint64_t bits, std::uint64_t k) noexcept {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<u128>(bits) * k) >> 64) + 1;
}

// Sequential stream over a fixed (seed, stream) pair; counter advances per draw.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, Stream stream) noexcept : seed_(seed), stream_(stream) {}
  std::uint64_t next() noexcept { return random_bits(seed_, stream_, counter_++); }
  double next_unit() noexcept { return to_unit(next()); }

 private:
  std::uint64_t seed_;
  Stream stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace adgcolor
