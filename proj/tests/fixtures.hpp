#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adgcolor/generators.hpp"
#include "adgcolor/graph.hpp"
#include "adgcolor/verify.hpp"

namespace fixtures {

// Small graphs plus one of each random family; the large ER/RMAT instances
// are left to the acceptance binary.
inline std::vector<adgcolor::CorpusEntry> small_corpus() {
  using namespace adgcolor;
  std::vector<CorpusEntry> c;
  c.push_back({"K4", complete_graph(4)});
  c.push_back({"C5", cycle_graph(5)});
  c.push_back({"P3", path_graph(3)});
  c.push_back({"star5", star_graph(5)});
  c.push_back({"petersen", petersen_graph()});
  c.push_back({"empty6", empty_graph(6)});
  c.push_back({"er300", generate_er(300, 0.03, 11)});
  c.push_back({"rmat9", generate_rmat(9, 8, 0.57, 0.19, 0.19, 5)});
  return c;
}

}  // namespace fixtures
