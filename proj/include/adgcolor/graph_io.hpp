#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "adgcolor/graph.hpp"

namespace adgcolor {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Whitespace separated "u v" pairs, one per line. Lines starting with '#' or
// '%' are comments. Raw ids are compacted to 0..n-1 in ascending raw-id order;
// the raw ids are kept on the graph's sidecar table.
Graph load_edge_list(std::istream& in, DuplicatePolicy policy = DuplicatePolicy::dedup);
Graph load_edge_list(std::string_view text, DuplicatePolicy policy = DuplicatePolicy::dedup);

// MatrixMarket coordinate format, 1-based indices. Values (if any) are
// ignored; both general and symmetric storage are read as undirected.
Graph load_matrix_market(std::istream& in, DuplicatePolicy policy = DuplicatePolicy::dedup);

/// Picks the reader by extension (.mtx -> MatrixMarket, otherwise edge list).
Graph load_graph_file(const std::filesystem::path& path,
                      DuplicatePolicy policy = DuplicatePolicy::dedup);

/// Writes each undirected edge once as "u v" with u < v.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace adgcolor
