#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adgcolor/verdict.hpp"

namespace adgcolor {

// Record of one algorithm run. time_order_ns covers the ordering or
// decomposition phase only, time_color_ns the coloring phase only.
struct RunReport {
  std::string graph;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::optional<std::uint64_t> degeneracy;
  std::string algorithm;
  std::optional<double> epsilon;
  std::optional<double> mu;
  std::uint64_t seed = 0;
  int threads = 1;
  std::uint64_t time_order_ns = 0;
  std::uint64_t time_color_ns = 0;
  std::uint64_t iterations = 0;
  std::uint64_t colors_used = 0;
  bool verified = false;
  std::vector<Verdict> verdicts;

  // Diagnostics, not part of the emitted record.
  std::uint64_t longest_path = 0;
  std::uint64_t max_partition_rounds = 0;
};

enum class ReportFormat { csv, json };

inline constexpr std::string_view kCsvHeader =
    "graph,n,m,degeneracy,algorithm,epsilon,seed,threads,time_order_ns,time_color_ns,iterations,"
    "colors_used,verified";

/// CSV writes the header followed by one row per report; JSON writes one
/// object per line with the same keys.
void emit(std::ostream& out, std::span<const RunReport> reports, ReportFormat format);

std::string report_to_json(const RunReport& r);
/// Inverse of report_to_json over the emitted keys.
RunReport report_from_json(const std::string& line);

}  // namespace adgcolor
