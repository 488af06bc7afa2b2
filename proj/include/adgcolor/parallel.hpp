#pragma once

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace adgcolor {

inline int max_threads() noexcept { return omp_get_max_threads(); }

// Sets the OpenMP thread count for the enclosing scope.
class ThreadScope {
 public:
  explicit ThreadScope(int threads) : previous_(omp_get_max_threads()) {
    if (threads > 0) omp_set_num_threads(threads);
  }
  ~ThreadScope() { omp_set_num_threads(previous_); }
  ThreadScope(const ThreadScope&) = delete;
  ThreadScope& operator=(const ThreadScope&) = delete;

 private:
  int previous_;
};

/// Stable parallel filter: keeps in-order elements for which keep(x) holds.
template <class T, class Pred>
std::vector<T> parallel_pack(std::span<const T> in, Pred keep) {
  const std::int64_t n = static_cast<std::int64_t>(in.size());
  constexpr std::int64_t kSerialCutoff = 1 << 14;
  std::vector<T> out;
  if (n < kSerialCutoff || omp_get_max_threads() == 1) {
    for (const T& x : in)
      if (keep(x)) out.push_back(x);
    return out;
  }
  const std::int64_t blocks = std::min<std::int64_t>(n / 2048, 8 * omp_get_max_threads());
  const std::int64_t block = (n + blocks - 1) / blocks;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(blocks) + 1, 0);
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    std::int64_t c = 0;
    for (std::int64_t i = b * block; i < std::min(n, (b + 1) * block); ++i) {
      flags[i] = keep(in[i]) ? 1 : 0;
      c += flags[i];
    }
    counts[b + 1] = c;
  }
  for (std::int64_t b = 0; b < blocks; ++b) counts[b + 1] += counts[b];
  out.resize(static_cast<std::size_t>(counts[blocks]));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    std::int64_t w = counts[b];
    for (std::int64_t i = b * block; i < std::min(n, (b + 1) * block); ++i)
      if (flags[i]) out[w++] = in[i];
  }
  return out;
}

}  // namespace adgcolor
