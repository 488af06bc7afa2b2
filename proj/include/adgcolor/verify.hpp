#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "adgcolor/algorithms.hpp"
#include "adgcolor/coloring.hpp"
#include "adgcolor/graph.hpp"
#include "adgcolor/ordering.hpp"
#include "adgcolor/verdict.hpp"

namespace adgcolor {

/// ceil(x) with floating noise shaved, so 2 * 1.1 * 5 gives 11 and not 12.
double ceil_bound(double x) noexcept;

/// Certified color bound of `a` for degeneracy d, max degree delta.
/// Returns the bound value and the formula that produced it.
struct ColorBound {
  double value = 0.0;
  std::string formula;
};
std::optional<ColorBound> certified_color_bound(Algorithm a, double epsilon, vertex_t d,
                                                vertex_t max_degree);

/// Checks a finished run: properness, the algorithm's color bound against the
/// exact degeneracy, the ordering approximation factor (when an ordering is
/// supplied), the chromatic lower bound for n <= 12 and sqrt(m) >= d/2.
/// Failures are reported as verdicts, never thrown.
std::vector<Verdict> verify_run(const Graph& g, Algorithm a, const AlgoParams& params,
                                const Coloring& coloring, const OrderingResult* ordering = nullptr,
                                std::optional<vertex_t> degeneracy = std::nullopt);

bool all_pass(std::span<const Verdict> verdicts) noexcept;

class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::string graph, std::string algorithm, std::uint64_t seed, Verdict verdict);
  const Verdict& verdict() const noexcept { return verdict_; }

 private:
  Verdict verdict_;
};

struct CorpusEntry {
  std::string name;
  Graph graph;
};

struct SweepRow {
  std::string graph;
  Algorithm algorithm{};
  std::optional<double> epsilon;
  std::uint64_t seed = 0;
  std::uint64_t colors = 0;
  std::uint64_t iterations = 0;
  std::uint64_t time_order_ns = 0;
  std::uint64_t time_color_ns = 0;
};

struct Summary {
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
};

struct SweepCell {
  std::string graph;
  Algorithm algorithm{};
  std::optional<double> epsilon;
  std::size_t runs = 0;
  Summary colors;
  Summary time_ns;  ///< ordering + coloring
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<SweepCell> cells;

  /// Mean colors of the cell, or nullopt when absent.
  std::optional<double> mean_colors(std::string_view graph, Algorithm a,
                                    std::optional<double> epsilon = std::nullopt) const;
};

/// Cartesian sweep graph x algorithm x epsilon x seed with every run verified.
/// An empty `epsilons` uses each algorithm's default; epsilon-free algorithms
/// run once per seed regardless. Throws VerificationError on the first failed
/// verdict. `parallel` runs cells concurrently (timings become noisy).
SweepResult corpus_sweep(std::span<const CorpusEntry> corpus, std::span<const Algorithm> algorithms,
                         std::span<const std::uint64_t> seeds, std::span<const double> epsilons = {},
                         bool parallel = false);

/// Warn-only comparison lhs <= rhs between two mean color counts.
struct SoftCheck {
  std::string name;
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
};
SoftCheck soft_compare(std::string name, double lhs, double rhs);

}  // namespace adgcolor
