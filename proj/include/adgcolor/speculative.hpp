#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "adgcolor/coloring.hpp"
#include "adgcolor/graph.hpp"
#include "adgcolor/ordering.hpp"

namespace adgcolor {

// Per-vertex bitmaps B_v of forbidden colors. Vertex v owns bits
// 0..capacity(v)-1; bit 0 is unused. A color at or beyond capacity(v) can
// never be drawn by v, so forbidding it is a no-op.
class ForbiddenPalette {
 public:
  ForbiddenPalette() = default;
  explicit ForbiddenPalette(std::span<const color_t> capacity);

  color_t capacity(vertex_t v) const noexcept { return capacity_[v]; }
  bool test(vertex_t v, color_t c) const noexcept {
    if (c <= 0 || c >= capacity_[v]) return false;
    const auto bit = static_cast<std::uint64_t>(c);
    return (words_[offset_[v] + (bit >> 6)] >> (bit & 63)) & 1u;
  }
  /// Sets bit c of B_v. Not thread-safe for the same v.
  void forbid(vertex_t v, color_t c) noexcept {
    if (c <= 0 || c >= capacity_[v]) return;
    const auto bit = static_cast<std::uint64_t>(c);
    words_[offset_[v] + (bit >> 6)] |= std::uint64_t{1} << (bit & 63);
  }
  /// Smallest color >= 1 not in B_v, or 0 if every bit is set.
  color_t first_free(vertex_t v) const noexcept;

 private:
  std::vector<color_t> capacity_;
  std::vector<std::uint64_t> offset_;
  std::vector<std::uint64_t> words_;
};

enum class DrawRule {
  uniform,        ///< SIM-COL: uniform over {1, ..., palette size}
  smallest_free,  ///< ITR flavour: smallest color not in B_v
};

/// max(1, ceil((1 + mu) * degl)), never below degl + 1 when degl > 0.
color_t sim_col_palette_size(vertex_t degl, double mu) noexcept;

/// 64 * ceil(log2 n) + 64.
std::uint32_t sim_col_round_cap(vertex_t n) noexcept;

class RoundCapError : public std::runtime_error {
 public:
  RoundCapError(const std::string& what, std::uint32_t rounds, std::size_t uncolored, Coloring partial)
      : std::runtime_error(what), rounds_(rounds), uncolored_(uncolored), partial_(std::move(partial)) {}
  std::uint32_t rounds() const noexcept { return rounds_; }
  std::size_t uncolored() const noexcept { return uncolored_; }
  const Coloring& partial() const noexcept { return partial_; }

 private:
  std::uint32_t rounds_;
  std::size_t uncolored_;
  Coloring partial_;
};

// Scratch arrays sized to the whole graph, reused across partitions.
struct SimColWorkspace {
  explicit SimColWorkspace(vertex_t n) : active(n, 0), draw(n, 0) {}
  std::vector<std::uint8_t> active;
  std::vector<color_t> draw;
};

struct SimColParams {
  double mu = 1.0;
  std::uint64_t seed = 0;
  DrawRule rule = DrawRule::uniform;
  std::uint32_t round_cap = 0;  ///< 0 = sim_col_round_cap(n)
  /// Conflict priority for the smallest_free rule (size n). A same-colored
  /// active pair resets only the endpoint with the smaller key.
  std::span<const std::uint64_t> tiebreak = {};
};

/// Colors every vertex of `partition` (colors[v] == 0 on entry) by rounds of
/// draw / detect / broadcast until none is left. Under the uniform rule both
/// endpoints of a same-colored active pair reset; a draw found in B_v resets
/// too. Committed colors never change. Returns the number of rounds.
std::uint32_t sim_col(const Graph& g, std::span<const vertex_t> partition, std::span<const vertex_t> degl,
                      ForbiddenPalette& palette, std::vector<color_t>& colors, SimColWorkspace& work,
                      const SimColParams& params);

struct SpecColoring {
  Coloring coloring;
  std::vector<std::uint32_t> partition_rounds;  ///< rounds per partition, index = l - 1
  std::uint32_t total_rounds = 0;
  color_t max_palette = 0;  ///< largest palette any vertex drew from
};

/// Colors the partitions from the last one down to the first, folding the
/// colors of already-colored neighbors into B_v before each partition.
SpecColoring color_decomposition(const Graph& g, const Decomposition& dec, const SimColParams& params);

/// DEC-ADG: decomposition with eps/12, SIM-COL with mu = eps/4. Color bound
/// ceil((2+eps) d) is certified for 4 < eps <= 8.
SpecColoring dec_adg(const Graph& g, double epsilon, std::uint64_t seed);
bool dec_adg_certified(double epsilon) noexcept;

/// DEC-ADG-ITR: decomposition with eps, smallest-free draws. At most
/// ceil(2(1+eps) d) + 1 colors.
SpecColoring dec_adg_itr(const Graph& g, double epsilon, std::uint64_t seed);

struct ItrResult {
  Coloring coloring;
  std::uint32_t rounds = 0;
};

/// Whole-graph speculative coloring: every uncolored vertex takes the
/// smallest color unused by its neighbors (as of the previous round), then
/// the lower-key endpoint of each monochromatic edge resets. Throws
/// RoundCapError with the partial coloring after max_rounds rounds.
ItrResult itr_baseline(const Graph& g, std::uint64_t seed, std::uint32_t max_rounds);

}  // namespace adgcolor
