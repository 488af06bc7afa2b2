#include <doctest.h>

#include <cmath>

#include "adgcolor/generators.hpp"
#include "adgcolor/oracles.hpp"

using namespace adgcolor;

TEST_CASE("ER edge cases") {
  CHECK(generate_er(5, 0.0, 1).num_edges() == 0);
  CHECK(generate_er(5, 0.0, 1).num_vertices() == 5);
  CHECK(generate_er(4, 1.0, 9) == complete_graph(4));
  CHECK_THROWS_AS(generate_er(0, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_er(10, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_er(10, -0.1, 1), std::invalid_argument);
}

TEST_CASE("ER edge count is binomial") {
  const auto g = generate_er(1000, 0.01, 7);
  const double pairs = 1000.0 * 999.0 / 2.0;
  const double mean = pairs * 0.01;
  const double sigma = std::sqrt(pairs * 0.01 * 0.99);
  CHECK(std::abs(static_cast<double>(g.num_edges()) - mean) <= 3.0 * sigma);
}

TEST_CASE("ER is seed-deterministic") {
  CHECK(generate_er(2000, 0.002, 5) == generate_er(2000, 0.002, 5));
  CHECK_FALSE(generate_er(2000, 0.002, 5) == generate_er(2000, 0.002, 6));
}

TEST_CASE("RMAT degenerate quadrant collapses to a self-loop") {
  const auto g = generate_rmat(1, 1, 1.0, 0.0, 0.0, 17);
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 0);
}

TEST_CASE("RMAT is seed-deterministic and sparse in degeneracy") {
  const auto a = generate_rmat(10, 8, 0.57, 0.19, 0.19, 3);
  const auto b = generate_rmat(10, 8, 0.57, 0.19, 0.19, 3);
  CHECK(a == b);
  CHECK(a.num_vertices() == 1024);
  const auto d = exact_degeneracy(a).degeneracy;
  CHECK(d <= a.max_degree() / 2);
}

TEST_CASE("RMAT parameter validation") {
  CHECK_THROWS_AS(generate_rmat(0, 8, 0.57, 0.19, 0.19, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_rmat(32, 8, 0.57, 0.19, 0.19, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_rmat(5, 8, 0.7, 0.3, 0.3, 1), std::invalid_argument);
}

TEST_CASE("fixtures") {
  CHECK(complete_graph(4).num_edges() == 6);
  CHECK(cycle_graph(5).num_edges() == 5);
  CHECK(path_graph(3).num_edges() == 2);
  CHECK(star_graph(5).degree(0) == 5);
  const auto p = petersen_graph();
  CHECK(p.num_vertices() == 10);
  CHECK(p.num_edges() == 15);
  CHECK(p.min_degree() == 3);
  CHECK(p.max_degree() == 3);
}
