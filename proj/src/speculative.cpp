#include "adgcolor/speculative.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "adgcolor/parallel.hpp"
#include "adgcolor/random.hpp"

namespace adgcolor {

ForbiddenPalette::ForbiddenPalette(std::span<const color_t> capacity)
    : capacity_(capacity.begin(), capacity.end()), offset_(capacity.size() + 1, 0) {
  for (std::size_t v = 0; v < capacity.size(); ++v)
    offset_[v + 1] = offset_[v] + (static_cast<std::uint64_t>(std::max<color_t>(capacity[v], 1)) + 63) / 64;
  words_.assign(offset_.back(), 0);
}

color_t ForbiddenPalette::first_free(vertex_t v) const noexcept {
  const std::uint64_t begin = offset_[v], end = offset_[v + 1];
  for (std::uint64_t w = begin; w < end; ++w) {
    std::uint64_t free_bits = ~words_[w];
    if (w == begin) free_bits &= ~std::uint64_t{1};  // color 0 is not a color
    if (free_bits == 0) continue;
    const auto c = static_cast<color_t>((w - begin) * 64 + static_cast<std::uint64_t>(std::countr_zero(free_bits)));
    return c < capacity_[v] ? c : 0;
  }
  return 0;
}

color_t sim_col_palette_size(vertex_t degl, double mu) noexcept {
  if (degl == 0) return 1;
  // Shave representation noise so e.g. 2.25 * 4 stays 9.
  const double x = (1.0 + mu) * static_cast<double>(degl) * (1.0 - 1e-12);
  const auto size = static_cast<color_t>(std::ceil(x));
  return std::max(size, static_cast<color_t>(degl + 1));
}

std::uint32_t sim_col_round_cap(vertex_t n) noexcept {
  const auto log2n = static_cast<std::uint32_t>(std::bit_width(std::max<vertex_t>(n, 2) - 1));
  return 64 * log2n + 64;
}

std::uint32_t sim_col(const Graph& g, std::span<const vertex_t> partition, std::span<const vertex_t> degl,
                      ForbiddenPalette& palette, std::vector<color_t>& colors, SimColWorkspace& work,
                      const SimColParams& params) {
  const std::uint32_t cap = params.round_cap ? params.round_cap : sim_col_round_cap(g.num_vertices());
  const bool uniform = params.rule == DrawRule::uniform;
  if (!uniform && params.tiebreak.size() != g.num_vertices())
    throw std::invalid_argument("sim_col: smallest_free rule needs a tie-break key per vertex");
  auto& active = work.active;
  auto& draw = work.draw;

  std::vector<vertex_t> U(partition.begin(), partition.end());
  for (vertex_t v : U) active[v] = 1;

  std::uint32_t round = 0;
  while (!U.empty()) {
    if (round == cap) {
      for (vertex_t v : U) active[v] = 0;
      throw RoundCapError("sim_col: round cap " + std::to_string(cap) + " reached with " +
                              std::to_string(U.size()) + " vertices uncolored",
                          round, U.size(), Coloring{});
    }
    ++round;
    const auto nu = static_cast<std::int64_t>(U.size());

    // Part 1: draw.
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nu; ++i) {
      const vertex_t v = U[i];
      if (uniform) {
        const auto k = static_cast<std::uint64_t>(sim_col_palette_size(degl[v], params.mu));
        draw[v] = static_cast<color_t>(uniform_1_to(random_bits(params.seed, Stream::sim_col_draw, v, round), k));
      } else {
        draw[v] = palette.first_free(v);
      }
    }

    // Part 2: keep the draw unless it is forbidden or an active neighbor
    // drew the same color.
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < nu; ++i) {
      const vertex_t v = U[i];
      const color_t c = draw[v];
      bool keep = c > 0 && !palette.test(v, c);
      if (keep) {
        for (vertex_t u : g.neighbors(v)) {
          if (!active[u] || draw[u] != c) continue;
          if (uniform || params.tiebreak[u] > params.tiebreak[v] ||
              (params.tiebreak[u] == params.tiebreak[v] && u < v)) {
            keep = false;
            break;
          }
        }
      }
      colors[v] = keep ? c : 0;
    }

    // Part 3: survivors' colors go into the bitmaps of still-active neighbors.
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < nu; ++i) {
      const vertex_t v = U[i];
      if (colors[v] > 0) continue;
      for (vertex_t u : g.neighbors(v))
        if (active[u] && colors[u] > 0) palette.forbid(v, colors[u]);
    }

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nu; ++i)
      if (colors[U[i]] > 0) active[U[i]] = 0;
    U = parallel_pack<vertex_t>(U, [&](vertex_t v) { return colors[v] == 0; });
  }
  return round;
}

SpecColoring color_decomposition(const Graph& g, const Decomposition& dec, const SimColParams& params) {
  const vertex_t n = g.num_vertices();
  const bool uniform = params.rule == DrawRule::uniform;

  std::vector<color_t> capacity(n);
  SpecColoring out;
  for (vertex_t v = 0; v < n; ++v) {
    const color_t top = uniform ? sim_col_palette_size(dec.degl[v], params.mu)
                                : static_cast<color_t>(dec.degl[v] + 1);
    capacity[v] = top + 1;
    out.max_palette = std::max(out.max_palette, top);
  }
  ForbiddenPalette palette(capacity);
  SimColWorkspace work(n);
  out.coloring = Coloring(n);
  auto& colors = out.coloring.colors;
  out.partition_rounds.assign(dec.partitions.size(), 0);

  for (std::size_t l = dec.partitions.size(); l-- > 0;) {
    const auto& part = dec.partitions[l];
    const auto np = static_cast<std::int64_t>(part.size());
    // Only later partitions are colored at this point.
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < np; ++i) {
      const vertex_t v = part[i];
      for (vertex_t u : g.neighbors(v))
        if (colors[u] > 0) palette.forbid(v, colors[u]);
    }
    try {
      out.partition_rounds[l] = sim_col(g, part, dec.degl, palette, colors, work, params);
    } catch (const RoundCapError& e) {
      throw RoundCapError(e.what(), e.rounds(), e.uncolored(), out.coloring);
    }
    out.total_rounds += out.partition_rounds[l];
  }
  return out;
}

bool dec_adg_certified(double epsilon) noexcept { return epsilon > 4.0 && epsilon <= 8.0; }

SpecColoring dec_adg(const Graph& g, double epsilon, std::uint64_t seed) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("dec_adg: epsilon must be > 0");
  const auto dec = adg_decompose(g, epsilon / 12.0, seed);
  SimColParams params;
  params.mu = epsilon / 4.0;
  params.seed = seed;
  params.rule = DrawRule::uniform;
  return color_decomposition(g, dec, params);
}

SpecColoring dec_adg_itr(const Graph& g, double epsilon, std::uint64_t seed) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("dec_adg_itr: epsilon must be > 0");
  const auto dec = adg_decompose(g, epsilon, seed);
  std::vector<std::uint64_t> keys(g.num_vertices());
  for (vertex_t v = 0; v < g.num_vertices(); ++v) keys[v] = tiebreak_key(seed, v);
  SimColParams params;
  params.seed = seed;
  params.rule = DrawRule::smallest_free;
  params.tiebreak = keys;
  return color_decomposition(g, dec, params);
}

ItrResult itr_baseline(const Graph& g, std::uint64_t seed, std::uint32_t max_rounds) {
  if (max_rounds < 1) throw std::invalid_argument("itr_baseline: max_rounds must be >= 1");
  const vertex_t n = g.num_vertices();
  ItrResult out;
  out.coloring = Coloring(n);
  auto& colors = out.coloring.colors;
  std::vector<std::uint64_t> key(n);
  std::vector<color_t> tentative(n, 0);
  std::vector<std::uint8_t> pending(n, 1);
  for (vertex_t v = 0; v < n; ++v) key[v] = tiebreak_key(seed, v);
  std::vector<vertex_t> work(n);
  for (vertex_t v = 0; v < n; ++v) work[v] = v;

  while (!work.empty()) {
    if (out.rounds == max_rounds)
      throw RoundCapError("itr_baseline: round cap " + std::to_string(max_rounds) + " reached with " +
                              std::to_string(work.size()) + " vertices uncolored",
                          out.rounds, work.size(), out.coloring);
    ++out.rounds;
    const auto nw = static_cast<std::int64_t>(work.size());

#pragma omp parallel
    {
      std::vector<std::uint8_t> used(static_cast<std::size_t>(g.max_degree()) + 2, 0);
      std::vector<color_t> touched;
#pragma omp for schedule(dynamic, 256)
      for (std::int64_t i = 0; i < nw; ++i) {
        const vertex_t v = work[i];
        const auto limit = static_cast<color_t>(g.degree(v) + 1);
        for (vertex_t u : g.neighbors(v)) {
          const color_t c = colors[u];
          if (c > 0 && c <= limit && !used[c]) {
            used[c] = 1;
            touched.push_back(c);
          }
        }
        color_t pick = 1;
        while (used[pick]) ++pick;
        for (color_t c : touched) used[c] = 0;
        touched.clear();
        tentative[v] = pick;
      }
    }

#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < nw; ++i) {
      const vertex_t v = work[i];
      bool keep = true;
      for (vertex_t u : g.neighbors(v)) {
        if (!pending[u] || tentative[u] != tentative[v]) continue;
        if (key[u] > key[v] || (key[u] == key[v] && u < v)) {
          keep = false;
          break;
        }
      }
      if (keep) colors[v] = tentative[v];
    }

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nw; ++i)
      if (colors[work[i]] > 0) pending[work[i]] = 0;
    work = parallel_pack<vertex_t>(work, [&](vertex_t v) { return colors[v] == 0; });
  }
  return out;
}

}  // namespace adgcolor
