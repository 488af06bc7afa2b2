#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "adgcolor/generators.hpp"
#include "adgcolor/oracles.hpp"
#include "adgcolor/ordering.hpp"
#include "adgcolor/parallel.hpp"
#include "fixtures.hpp"

using namespace adgcolor;

namespace {

std::vector<std::uint64_t> ranks(std::initializer_list<std::uint64_t> r) { return r; }

}  // namespace

TEST_CASE("ADG on a star removes the leaves first") {
  const auto o = adg(star_graph(5), 0.01, 1);
  CHECK(o.iterations == 2);
  CHECK(o.rank == ranks({2, 1, 1, 1, 1, 1}));
  REQUIRE(o.rounds.size() == 2);
  CHECK(o.rounds[0].active == 6);
  CHECK(o.rounds[0].removed == 5);
}

TEST_CASE("ADG on an edgeless graph finishes in one round") {
  const auto o = adg(empty_graph(4), 0.5, 3);
  CHECK(o.iterations == 1);
  CHECK(o.rank == ranks({1, 1, 1, 1}));
}

TEST_CASE("ADG on the empty graph") {
  const auto o = adg(empty_graph(0), 0.1, 0);
  CHECK(o.iterations == 0);
  CHECK(o.rank.empty());
}

TEST_CASE("ADG rejects non-positive epsilon") {
  const auto g = cycle_graph(5);
  CHECK_THROWS_AS(adg(g, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(adg(g, -1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(adg_fused(g, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(adg_decompose(g, 0.0, 1), std::invalid_argument);
}

TEST_CASE("ADG iteration bound") {
  CHECK(adg_iteration_bound(1024, 1.0) == 11);
  CHECK(adg_iteration_bound(1, 0.01) == 1);
  const auto g = generate_er(1024, 0.01, 4);
  CHECK(adg(g, 1.0, 2).iterations <= 11);
  for (const auto& e : fixtures::small_corpus())
    for (double eps : {0.01, 0.1, 1.0, 5.0}) {
      const auto bound = adg_iteration_bound(e.graph.num_vertices(), eps);
      CHECK(adg(e.graph, eps, 1).iterations <= bound);
      CHECK(adg_fused(e.graph, eps, 1).ordering.iterations <= bound);
    }
}

TEST_CASE("ADG is a partial 2(1+eps)-approximate degeneracy order") {
  for (const auto& e : fixtures::small_corpus()) {
    const auto d = exact_degeneracy(e.graph).degeneracy;
    for (double eps : {0.01, 0.1, 1.0, 5.0}) {
      CAPTURE(e.name);
      CAPTURE(eps);
      CHECK(check_partial_approx(e.graph, adg(e.graph, eps, 2), d) <= 2.0 * (1.0 + eps));
      CHECK(check_partial_approx_strict(e.graph, adg_fused(e.graph, eps, 2).ordering, d) <= 2.0 * (1.0 + eps));
    }
  }
}

TEST_CASE("approximation factor examples") {
  const auto star = star_graph(5);
  CHECK(check_partial_approx(star, adg(star, 0.01, 0), 1) == 1.0);
  CHECK(check_partial_approx(empty_graph(5), adg(empty_graph(5), 0.01, 0), 0) == 0.0);
  const auto p = petersen_graph();
  CHECK(check_partial_approx_strict(p, baseline_order(p, OrderKind::sl, 0), 3) <= 1.0);
}

TEST_CASE("ADG output is independent of update mode and thread count") {
  const auto g = generate_er(3000, 0.004, 8);
  const auto rmat = generate_rmat(11, 8, 0.57, 0.19, 0.19, 2);
  for (const Graph* gp : {&g, &rmat}) {
    const auto ref = adg(*gp, 0.1, 5, UpdateMode::push);
    const auto ref_fused = adg_fused(*gp, 0.1, 5);
    for (int t : {1, 2, 8}) {
      ThreadScope scope(t);
      for (auto mode : {UpdateMode::push, UpdateMode::pull}) {
        const auto o = adg(*gp, 0.1, 5, mode);
        CHECK(o.rank == ref.rank);
        CHECK(o.tiebreak == ref.tiebreak);
        CHECK(o.iterations == ref.iterations);
      }
      const auto f = adg_fused(*gp, 0.1, 5);
      CHECK(f.ordering.rank == ref_fused.ordering.rank);
      CHECK(f.pred_count == ref_fused.pred_count);
    }
  }
}

TEST_CASE("ADG-M halves the active set") {
  const auto p2 = path_graph(2);
  CHECK(adg_m(p2, 0).iterations == 2);

  const auto o = adg_m(empty_graph(8), 0);
  CHECK(o.iterations == 4);
  REQUIRE(o.rounds.size() == 4);
  CHECK(o.rounds[0].removed == 4);
  CHECK(o.rounds[1].removed == 2);
  CHECK(o.rounds[2].removed == 1);
  CHECK(o.rounds[3].removed == 1);
  CHECK(adg_m_iteration_bound(8) == 4);
}

TEST_CASE("ADG-M is partial 4-approximate") {
  for (const auto& e : fixtures::small_corpus()) {
    CAPTURE(e.name);
    const auto o = adg_m(e.graph, 3);
    CHECK(o.iterations <= adg_m_iteration_bound(e.graph.num_vertices()));
    CHECK(check_partial_approx(e.graph, o, exact_degeneracy(e.graph).degeneracy) <= 4.0);
  }
}

TEST_CASE("ADG-O on a star") {
  const auto f = adg_fused(star_graph(5), 0.01, 0);
  CHECK(f.ordering.rank[0] == 5);
  std::vector<std::uint64_t> leaves(f.ordering.rank.begin() + 1, f.ordering.rank.end());
  std::sort(leaves.begin(), leaves.end());
  CHECK(leaves == ranks({0, 1, 2, 3, 4}));
  CHECK(f.pred_count[0] == 0);
  for (vertex_t v = 1; v <= 5; ++v) CHECK(f.pred_count[v] == 1);
}

TEST_CASE("ADG-O on a triangle") {
  const auto f = adg_fused(complete_graph(3), 0.01, 0);
  CHECK(f.ordering.iterations == 1);
  std::vector<std::uint64_t> r = f.ordering.rank;
  std::sort(r.begin(), r.end());
  CHECK(r == ranks({0, 1, 2}));
  for (vertex_t v = 0; v < 3; ++v) CHECK(f.pred_count[v] == 2 - f.ordering.rank[v]);
}

TEST_CASE("ADG-O predecessor counts orient every edge once") {
  for (const auto& e : fixtures::small_corpus()) {
    const auto f = adg_fused(e.graph, 0.01, 6);
    CHECK(std::accumulate(f.pred_count.begin(), f.pred_count.end(), edge_t{0}) == e.graph.num_edges());
    for (vertex_t v = 0; v < e.graph.num_vertices(); ++v) {
      vertex_t higher = 0;
      for (vertex_t u : e.graph.neighbors(v)) higher += f.ordering.rank[u] > f.ordering.rank[v] ? 1 : 0;
      CHECK(f.pred_count[v] == higher);
    }
  }
}

TEST_CASE("decomposition of a star") {
  const auto dec = adg_decompose(star_graph(5), 0.001, 0);
  REQUIRE(dec.partitions.size() == 2);
  CHECK(dec.partitions[0] == std::vector<vertex_t>{1, 2, 3, 4, 5});
  CHECK(dec.partitions[1] == std::vector<vertex_t>{0});
  CHECK(dec.degl[0] == 0);
  for (vertex_t v = 1; v <= 5; ++v) CHECK(dec.degl[v] == 1);
  CHECK(dec.partition_of[0] == 2);
}

TEST_CASE("decomposition of an edgeless graph") {
  const auto dec = adg_decompose(empty_graph(5), 0.1, 0);
  REQUIRE(dec.partitions.size() == 1);
  CHECK(dec.partitions[0].size() == 5);
  for (auto d : dec.degl) CHECK(d == 0);
}

TEST_CASE("decomposition degrees match a brute-force recount") {
  const auto g = generate_er(50, 0.1, 12);
  const auto dec = adg_decompose(g, 0.05, 1);
  edge_t total = 0;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    vertex_t expect = 0;
    for (vertex_t u : g.neighbors(v)) expect += dec.partition_of[u] >= dec.partition_of[v] ? 1 : 0;
    CHECK(dec.degl[v] == expect);
    total += dec.degl[v];
  }
  CHECK(total >= g.num_edges());
  CHECK(total <= 2 * g.num_edges());
}

TEST_CASE("baseline orders") {
  const auto star = star_graph(5);
  const auto lf = baseline_order(star, OrderKind::lf, 1);
  for (vertex_t v = 1; v <= 5; ++v) CHECK(lf.higher(0, v));

  const auto ff = baseline_order(path_graph(3), OrderKind::ff, 0);
  CHECK(ff.higher(0, 1));
  CHECK(ff.higher(1, 2));

  const auto g = generate_er(500, 0.02, 1);
  const auto d = exact_degeneracy(g).degeneracy;
  CHECK(check_partial_approx_strict(g, baseline_order(g, OrderKind::sl, 0), d) <= 1.0);

  for (auto k : {OrderKind::ff, OrderKind::random, OrderKind::lf, OrderKind::llf, OrderKind::sl, OrderKind::sll}) {
    const auto o = baseline_order(g, k, 4);
    CHECK(o.kind == k);
    CHECK(o.rank.size() == g.num_vertices());
    CHECK(o.tiebreak.size() == g.num_vertices());
  }
  CHECK_THROWS_AS(baseline_order(g, OrderKind::adg, 0), std::invalid_argument);
}

TEST_CASE("SLL ranks later removals higher") {
  const auto o = baseline_order(star_graph(5), OrderKind::sll, 0);
  for (vertex_t v = 1; v <= 5; ++v) CHECK(o.rank[0] >= o.rank[v]);
}

TEST_CASE("order kind names") {
  CHECK(to_string(OrderKind::adg_m) == "ADG-M");
  CHECK(order_kind_from_string("SLL") == OrderKind::sll);
  CHECK_FALSE(order_kind_from_string("nope").has_value());
}

TEST_CASE("higher() is a strict total order") {
  const auto g = generate_er(200, 0.05, 3);
  const auto o = adg(g, 0.5, 9);
  for (vertex_t u = 0; u < 50; ++u)
    for (vertex_t v = 0; v < 50; ++v) {
      if (u == v) {
        CHECK_FALSE(o.higher(u, v));
      } else {
        CHECK(o.higher(u, v) != o.higher(v, u));
      }
    }
}
