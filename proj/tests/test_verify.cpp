#include <doctest.h>

#include <algorithm>

#include "adgcolor/algorithms.hpp"
#include "adgcolor/generators.hpp"
#include "adgcolor/verify.hpp"
#include "fixtures.hpp"

using namespace adgcolor;

namespace {

const Verdict* find(const std::vector<Verdict>& vs, std::string_view check) {
  auto it = std::find_if(vs.begin(), vs.end(), [&](const Verdict& v) { return v.check == check; });
  return it == vs.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("ceil_bound shaves floating noise") {
  CHECK(ceil_bound(2.0 * 1.1 * 5.0) == 11.0);
  CHECK(ceil_bound(6.06) == 7.0);
  CHECK(ceil_bound(0.0) == 0.0);
}

TEST_CASE("K4 under JP-ADG passes with bound ceil(6.06)+1 = 8") {
  const auto g = complete_graph(4);
  AlgoParams p;
  p.epsilon = 0.01;
  const auto run = run_algorithm(g, Algorithm::jp_adg, p);
  CHECK(run.coloring.num_colors() == 4);
  const auto vs = verify_run(g, Algorithm::jp_adg, p, run.coloring, &*run.ordering);
  CHECK(all_pass(vs));
  const auto* b = find(vs, "color_bound");
  REQUIRE(b);
  CHECK(b->bound == 8.0);
  CHECK(b->formula == "ceil(2(1+eps)d)+1");
  CHECK(find(vs, "ordering_approx"));
  CHECK(find(vs, "chromatic_lower_bound"));
}

TEST_CASE("improper coloring yields a witness edge") {
  const auto g = path_graph(3);
  Coloring c;
  c.colors = {1, 1, 2};
  const auto vs = verify_run(g, Algorithm::greedy_seq, AlgoParams{}, c);
  const auto* proper = find(vs, "proper");
  REQUIRE(proper);
  CHECK_FALSE(proper->pass);
  REQUIRE(proper->witness);
  CHECK(*proper->witness == "edge (0,1)");
  CHECK_FALSE(all_pass(vs));
}

TEST_CASE("JP-SL on a star meets d+1 with equality") {
  const auto g = star_graph(5);
  const auto run = jp_with(g, OrderKind::sl, 0);
  CHECK(run.coloring.num_colors() == 2);
  const auto vs = verify_run(g, Algorithm::jp_sl, AlgoParams{}, run.coloring, &*run.ordering);
  const auto* b = find(vs, "color_bound");
  REQUIRE(b);
  CHECK(b->bound == 2.0);
  CHECK(b->observed == 2.0);
  CHECK(b->pass);
}

TEST_CASE("certified bounds per algorithm") {
  CHECK(certified_color_bound(Algorithm::jp_adg_m, 0.01, 3, 10)->value == 13.0);
  CHECK(certified_color_bound(Algorithm::jp_sl, 0.01, 3, 10)->value == 4.0);
  CHECK(certified_color_bound(Algorithm::jp_r, 0.01, 3, 10)->value == 11.0);
  CHECK(certified_color_bound(Algorithm::dec_adg, 5.0, 1, 10)->value == 7.0);
  CHECK(certified_color_bound(Algorithm::dec_adg, 5.0, 0, 0)->value == 1.0);
  CHECK_FALSE(certified_color_bound(Algorithm::dec_adg, 2.0, 1, 10).has_value());
  CHECK(certified_color_bound(Algorithm::dec_adg_itr, 1.0, 2, 10)->value == 9.0);
}

TEST_CASE("verdicts round trip through JSON") {
  Verdict v{"color_bound", true, 4.0, 7.0, "ceil(2(1+eps)d)+1", std::nullopt};
  CHECK(verdict_from_json(verdict_to_json(v)) == v);
  v.witness = "edge (0,1)";
  v.pass = false;
  CHECK(verdict_from_json(verdict_to_json(v)) == v);
}

TEST_CASE("corpus sweep row count and determinism") {
  std::vector<CorpusEntry> corpus{{"C5", cycle_graph(5)}, {"K4", complete_graph(4)}, {"star", star_graph(5)}};
  const std::vector<Algorithm> algos{Algorithm::jp_adg, Algorithm::dec_adg_itr};
  const std::vector<std::uint64_t> seeds{1, 2, 3};
  const auto a = corpus_sweep(corpus, algos, seeds);
  CHECK(a.rows.size() == 18);
  CHECK(a.cells.size() == 6);
  const auto b = corpus_sweep(corpus, algos, seeds, {}, true);
  REQUIRE(b.rows.size() == a.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].colors == b.rows[i].colors);
  CHECK(a.mean_colors("K4", Algorithm::jp_adg) == 4.0);
  CHECK_FALSE(a.mean_colors("K4", Algorithm::itr).has_value());
}

TEST_CASE("corpus sweep with explicit epsilons") {
  std::vector<CorpusEntry> corpus{{"petersen", petersen_graph()}};
  const std::vector<Algorithm> algos{Algorithm::jp_adg, Algorithm::jp_ff};
  const std::vector<std::uint64_t> seeds{0, 1};
  const std::vector<double> eps{0.1, 1.0};
  const auto r = corpus_sweep(corpus, algos, seeds, eps);
  CHECK(r.rows.size() == 2 * 2 + 2);
  for (const auto& cell : r.cells) {
    CHECK(cell.colors.min <= cell.colors.mean);
    CHECK(cell.colors.mean <= cell.colors.max);
  }
}

TEST_CASE("full registry verifies on the small corpus") {
  const std::vector<std::uint64_t> seeds{0, 1};
  CHECK_NOTHROW(corpus_sweep(fixtures::small_corpus(), all_algorithms(), seeds));
}

TEST_CASE("JP-ADG versus JP-R on sparse ER (warn-only)") {
  std::vector<CorpusEntry> corpus{{"er", generate_er(10000, 3e-4, 1)}};
  const std::vector<Algorithm> algos{Algorithm::jp_adg, Algorithm::jp_r};
  const std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4};
  const auto r = corpus_sweep(corpus, algos, seeds);
  const auto check = soft_compare("jp-adg <= jp-r", *r.mean_colors("er", Algorithm::jp_adg),
                                  *r.mean_colors("er", Algorithm::jp_r));
  if (!check.pass) MESSAGE("soft check failed: " << check.name << ' ' << check.lhs << " > " << check.rhs);
  CHECK(check.lhs > 0.0);
}
