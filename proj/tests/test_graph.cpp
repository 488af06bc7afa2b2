#include <doctest.h>

#include <sstream>
#include <vector>

#include "adgcolor/bitmap.hpp"
#include "adgcolor/generators.hpp"
#include "adgcolor/graph.hpp"
#include "adgcolor/graph_io.hpp"

using namespace adgcolor;

namespace {

std::vector<edge_t> offsets_of(const Graph& g) { return {g.offsets().begin(), g.offsets().end()}; }
std::vector<vertex_t> adj_of(const Graph& g) { return {g.adjacency().begin(), g.adjacency().end()}; }

}  // namespace

TEST_CASE("edge list P3 builds the expected CSR") {
  const auto g = load_edge_list(std::string_view("0 1\n1 2"));
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(offsets_of(g) == std::vector<edge_t>{0, 1, 3, 4});
  CHECK(adj_of(g) == std::vector<vertex_t>{1, 0, 2, 1});
}

TEST_CASE("dedup drops duplicates and self-loops") {
  const auto g = load_edge_list(std::string_view("0 1\n1 0\n0 0"), DuplicatePolicy::dedup);
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
}

TEST_CASE("reject policy refuses duplicates and self-loops") {
  CHECK_THROWS_AS(load_edge_list(std::string_view("0 1\n1 0"), DuplicatePolicy::reject), StructuralError);
  CHECK_THROWS_AS(load_edge_list(std::string_view("0 0"), DuplicatePolicy::reject), StructuralError);
}

TEST_CASE("malformed token reports its line") {
  try {
    load_edge_list(std::string_view("0 x"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  try {
    load_edge_list(std::string_view("# header\n0 1\n1 2 3\n"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("comments and blank lines are skipped, sparse ids compacted") {
  const auto g = load_edge_list(std::string_view("% mm style\n# comment\n\n10 500\n500 7\n"));
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  const std::vector<std::uint64_t> raw(g.raw_ids().begin(), g.raw_ids().end());
  CHECK(raw == std::vector<std::uint64_t>{7, 10, 500});
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("matrix market coordinate files load 1-based") {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate pattern symmetric\n% comment\n4 4 3\n2 1\n3 2\n4 3\n");
  const auto g = load_matrix_market(in);
  CHECK(g == path_graph(4));
}

TEST_CASE("missing file raises IoError") {
  CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.el"), IoError);
}

TEST_CASE("from_csr validates invariants") {
  CHECK_NOTHROW(Graph::from_csr({0, 1, 2}, {1, 0}));
  CHECK_THROWS_AS(Graph::from_csr({0, 1, 1}, {1}), StructuralError);        // asymmetric
  CHECK_THROWS_AS(Graph::from_csr({0, 1, 2}, {0, 1}), StructuralError);     // self-loops
  CHECK_THROWS_AS(Graph::from_csr({0, 2, 3, 4}, {2, 1, 0, 0}), StructuralError);  // unsorted
  CHECK_THROWS_AS(Graph::from_csr({0, 2, 2}, {1, 1}), StructuralError);     // duplicate
}

TEST_CASE("edge list round trip reproduces the graph") {
  for (const auto& g : {petersen_graph(), generate_er(200, 0.05, 3), star_graph(7), empty_graph(0)}) {
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    const auto back = load_edge_list(in);
    // Isolated vertices have no edge lines, so compare on graphs without them.
    if (g.min_degree() > 0) CHECK(back == g);
    CHECK(back.num_edges() == g.num_edges());
  }
}

TEST_CASE("degree statistics") {
  const auto g = star_graph(5);
  CHECK(g.num_vertices() == 6);
  CHECK(g.max_degree() == 5);
  CHECK(g.min_degree() == 1);
  CHECK(g.average_degree() == doctest::Approx(10.0 / 6.0));
}

TEST_CASE("induced view tracks residual degrees") {
  const auto g = complete_graph(4);
  InducedView u(g);
  CHECK(u.size() == 4);
  CHECK(u.degree(0) == 3);
  u.remove(1);
  u.atomic_remove(2);
  CHECK(u.size() == 2);
  CHECK(u.degree(0) == 1);
  CHECK(u.neighbors(0) == std::vector<vertex_t>{3});
  CHECK_FALSE(u.contains(2));
}

TEST_CASE("dense bitmap") {
  DenseBitmap b(130, true);
  CHECK(b.count() == 130);
  b.reset(64);
  b.atomic_reset(129);
  CHECK(b.count() == 128);
  CHECK_FALSE(b.test(64));
  b.atomic_set(64);
  CHECK(b.test(64));
}
