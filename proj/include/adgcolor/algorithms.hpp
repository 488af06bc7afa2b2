#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "adgcolor/coloring.hpp"
#include "adgcolor/graph.hpp"
#include "adgcolor/ordering.hpp"
#include "adgcolor/report.hpp"

namespace adgcolor {

enum class Algorithm {
  jp_adg,
  jp_adg_m,
  jp_ff,
  jp_r,
  jp_lf,
  jp_llf,
  jp_sl,
  jp_sll,
  dec_adg,
  dec_adg_itr,
  itr,
  greedy_seq,
};

std::string_view to_string(Algorithm a) noexcept;
std::optional<Algorithm> algorithm_from_string(std::string_view name) noexcept;
std::span<const Algorithm> all_algorithms() noexcept;

bool uses_epsilon(Algorithm a) noexcept;
/// 5 for dec-adg (inside its certified window), 0.01 otherwise.
double default_epsilon(Algorithm a) noexcept;

struct AlgoParams {
  std::optional<double> epsilon;  ///< unset -> default_epsilon(algorithm)
  std::uint64_t seed = 0;
  int threads = 0;                ///< 0 -> current OpenMP setting
  /// JP-ADG ordering: sorted ADG-O total order (default) or ADG ranks with
  /// random tie-breaks.
  bool sorted_adg = true;
  UpdateMode update_mode = UpdateMode::push;
  std::uint32_t itr_max_rounds = 0;  ///< 0 -> n + 1, always sufficient
};

struct ColoringRun {
  Coloring coloring;
  RunReport report;
  std::optional<OrderingResult> ordering;  ///< JP variants only
};

/// Runs one algorithm and times its ordering and coloring phases separately.
ColoringRun run_algorithm(const Graph& g, Algorithm a, const AlgoParams& params,
                          std::string_view graph_name = "");

/// JP with the ADG priority.
ColoringRun jp_adg(const Graph& g, double epsilon, std::uint64_t seed);
/// JP with one of the baseline priorities.
ColoringRun jp_with(const Graph& g, OrderKind kind, std::uint64_t seed);

/// Sequential first-fit greedy in natural vertex order.
Coloring greedy_sequential(const Graph& g);

}  // namespace adgcolor
