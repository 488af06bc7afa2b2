#include "adgcolor/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace adgcolor {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits a line into whitespace separated tokens.
std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "malformed vertex id '" + std::string(tok) + "'");
  return value;
}

bool is_comment(std::string_view line) {
  for (char c : line) {
    if (is_space(c)) continue;
    return c == '#' || c == '%';
  }
  return true;  // blank
}

}  // namespace

Graph load_edge_list(std::istream& in, DuplicatePolicy policy) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment(line)) continue;
    auto toks = tokenize(line);
    if (toks.size() != 2)
      throw ParseError(lineno, "expected two vertex ids, got " + std::to_string(toks.size()) + " tokens");
    raw.emplace_back(parse_id(toks[0], lineno), parse_id(toks[1], lineno));
  }

  std::vector<std::uint64_t> ids;
  ids.reserve(raw.size() * 2);
  for (auto [a, b] : raw) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > std::numeric_limits<vertex_t>::max()) throw StructuralError("too many vertices");

  auto dense = [&](std::uint64_t raw_id) {
    return static_cast<vertex_t>(std::lower_bound(ids.begin(), ids.end(), raw_id) - ids.begin());
  };
  std::vector<EdgePair> edges;
  edges.reserve(raw.size());
  for (auto [a, b] : raw) edges.emplace_back(dense(a), dense(b));

  auto g = Graph::from_edges(static_cast<vertex_t>(ids.size()), edges, policy);
  g.set_raw_ids(std::move(ids));
  return g;
}

Graph load_edge_list(std::string_view text, DuplicatePolicy policy) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in, policy);
}

Graph load_matrix_market(std::istream& in, DuplicatePolicy policy) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError(1, "empty MatrixMarket stream");
  ++lineno;
  auto header = tokenize(line);
  if (header.size() < 5 || header[0] != "%%MatrixMarket" || header[1] != "matrix" ||
      header[2] != "coordinate")
    throw ParseError(lineno, "expected '%%MatrixMarket matrix coordinate <field> <symmetry>'");

  std::uint64_t rows = 0, cols = 0, nnz = 0;
  bool have_size = false;
  std::vector<EdgePair> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment(line)) continue;
    auto toks = tokenize(line);
    if (!have_size) {
      if (toks.size() != 3) throw ParseError(lineno, "expected 'rows cols entries'");
      rows = parse_id(toks[0], lineno);
      cols = parse_id(toks[1], lineno);
      nnz = parse_id(toks[2], lineno);
      if (rows != cols) throw StructuralError("adjacency matrix must be square");
      if (rows > std::numeric_limits<vertex_t>::max()) throw StructuralError("too many vertices");
      edges.reserve(nnz);
      have_size = true;
      continue;
    }
    if (toks.size() < 2) throw ParseError(lineno, "expected 'row col [value]'");
    auto i = parse_id(toks[0], lineno);
    auto j = parse_id(toks[1], lineno);
    if (i == 0 || j == 0 || i > rows || j > cols)
      throw ParseError(lineno, "index out of range (indices are 1-based)");
    edges.emplace_back(static_cast<vertex_t>(i - 1), static_cast<vertex_t>(j - 1));
  }
  if (!have_size) throw ParseError(lineno, "missing size line");
  if (edges.size() != nnz)
    throw ParseError(lineno, "expected " + std::to_string(nnz) + " entries, read " +
                                 std::to_string(edges.size()));
  // Symmetric storage lists each pair once; general storage may list both
  // directions, which dedup folds together.
  if (header[4] == "general" && policy == DuplicatePolicy::reject) {
    for (auto& [u, v] : edges)
      if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  return Graph::from_edges(static_cast<vertex_t>(rows), edges, policy);
}

Graph load_graph_file(const std::filesystem::path& path, DuplicatePolicy policy) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path.string() + "': file not found or unreadable");
  if (path.extension() == ".mtx") return load_matrix_market(in, policy);
  return load_edge_list(in, policy);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# vertices " << g.num_vertices() << " edges " << g.num_edges() << '\n';
  for (vertex_t u = 0; u < g.num_vertices(); ++u)
    for (vertex_t v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
}

}  // namespace adgcolor
