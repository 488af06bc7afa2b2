#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace adgcolor {

/// Outcome of one check. `formula` is the closed form (in d, Delta, eps, n)
/// that produced `bound`.
struct Verdict {
  std::string check;
  bool pass = false;
  double observed = 0.0;
  double bound = 0.0;
  std::string formula;
  std::optional<std::string> witness;

  bool operator==(const Verdict&) const = default;
};

std::string verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const std::string& line);

/// One JSON object per line.
void write_verdicts(std::ostream& out, std::span<const Verdict> verdicts);

}  // namespace adgcolor
