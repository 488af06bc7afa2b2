#include "adgcolor/algorithms.hpp"

#include <array>
#include <chrono>
#include <stdexcept>
#include <string>

#include "adgcolor/jp.hpp"
#include "adgcolor/parallel.hpp"
#include "adgcolor/speculative.hpp"

namespace adgcolor {
namespace {

constexpr std::array kAlgorithms{
    Algorithm::jp_adg, Algorithm::jp_adg_m, Algorithm::jp_ff,       Algorithm::jp_r,
    Algorithm::jp_lf,  Algorithm::jp_llf,   Algorithm::jp_sl,       Algorithm::jp_sll,
    Algorithm::dec_adg, Algorithm::dec_adg_itr, Algorithm::itr,     Algorithm::greedy_seq,
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::uint64_t lap() {
    const auto now = std::chrono::steady_clock::now();
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(now - start_).count();
    start_ = now;
    return static_cast<std::uint64_t>(ns);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::optional<OrderKind> baseline_kind(Algorithm a) {
  switch (a) {
    case Algorithm::jp_ff: return OrderKind::ff;
    case Algorithm::jp_r: return OrderKind::random;
    case Algorithm::jp_lf: return OrderKind::lf;
    case Algorithm::jp_llf: return OrderKind::llf;
    case Algorithm::jp_sl: return OrderKind::sl;
    case Algorithm::jp_sll: return OrderKind::sll;
    default: return std::nullopt;
  }
}

}  // namespace

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::jp_adg: return "jp-adg";
    case Algorithm::jp_adg_m: return "jp-adg-m";
    case Algorithm::jp_ff: return "jp-ff";
    case Algorithm::jp_r: return "jp-r";
    case Algorithm::jp_lf: return "jp-lf";
    case Algorithm::jp_llf: return "jp-llf";
    case Algorithm::jp_sl: return "jp-sl";
    case Algorithm::jp_sll: return "jp-sll";
    case Algorithm::dec_adg: return "dec-adg";
    case Algorithm::dec_adg_itr: return "dec-adg-itr";
    case Algorithm::itr: return "itr";
    case Algorithm::greedy_seq: return "greedy-seq";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_string(std::string_view name) noexcept {
  for (auto a : kAlgorithms)
    if (to_string(a) == name) return a;
  return std::nullopt;
}

std::span<const Algorithm> all_algorithms() noexcept { return kAlgorithms; }

bool uses_epsilon(Algorithm a) noexcept {
  return a == Algorithm::jp_adg || a == Algorithm::dec_adg || a == Algorithm::dec_adg_itr;
}

double default_epsilon(Algorithm a) noexcept { return a == Algorithm::dec_adg ? 5.0 : 0.01; }

Coloring greedy_sequential(const Graph& g) {
  Coloring out(g.num_vertices());
  std::vector<vertex_t> mark(static_cast<std::size_t>(g.max_degree()) + 2, 0);
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    for (vertex_t u : g.neighbors(v)) {
      const color_t c = out.colors[u];
      if (c > 0 && static_cast<std::size_t>(c) < mark.size()) mark[c] = v + 1;
    }
    color_t pick = 1;
    while (mark[pick] == v + 1) ++pick;
    out.colors[v] = pick;
  }
  return out;
}

ColoringRun run_algorithm(const Graph& g, Algorithm a, const AlgoParams& params, std::string_view graph_name) {
  ThreadScope threads(params.threads);
  ColoringRun run;
  auto& rep = run.report;
  rep.graph = std::string(graph_name);
  rep.n = g.num_vertices();
  rep.m = g.num_edges();
  rep.algorithm = std::string(to_string(a));
  rep.seed = params.seed;
  rep.threads = max_threads();
  const double eps = params.epsilon.value_or(default_epsilon(a));
  if (uses_epsilon(a)) rep.epsilon = eps;

  Stopwatch clock;
  switch (a) {
    case Algorithm::jp_adg: {
      if (params.sorted_adg) {
        auto fused = adg_fused(g, eps, params.seed);
        rep.time_order_ns = clock.lap();
        const auto dag = dag_from_fused(fused);
        JpStats stats;
        run.coloring = jp_color(g, dag, &stats);
        rep.time_color_ns = clock.lap();
        rep.iterations = fused.ordering.iterations;
        rep.longest_path = stats.longest_path;
        run.ordering = std::move(fused.ordering);
      } else {
        auto order = adg(g, eps, params.seed, params.update_mode);
        rep.time_order_ns = clock.lap();
        const auto dag = build_dag(g, order);
        JpStats stats;
        run.coloring = jp_color(g, dag, &stats);
        rep.time_color_ns = clock.lap();
        rep.iterations = order.iterations;
        rep.longest_path = stats.longest_path;
        run.ordering = std::move(order);
      }
      break;
    }
    case Algorithm::jp_adg_m:
    case Algorithm::jp_ff:
    case Algorithm::jp_r:
    case Algorithm::jp_lf:
    case Algorithm::jp_llf:
    case Algorithm::jp_sl:
    case Algorithm::jp_sll: {
      auto order = a == Algorithm::jp_adg_m ? adg_m(g, params.seed)
                                            : baseline_order(g, *baseline_kind(a), params.seed);
      rep.time_order_ns = clock.lap();
      const auto dag = build_dag(g, order);
      JpStats stats;
      run.coloring = jp_color(g, dag, &stats);
      rep.time_color_ns = clock.lap();
      rep.iterations = order.iterations;
      rep.longest_path = stats.longest_path;
      run.ordering = std::move(order);
      break;
    }
    case Algorithm::dec_adg:
    case Algorithm::dec_adg_itr: {
      if (!(eps > 0.0)) throw std::invalid_argument(rep.algorithm + ": epsilon must be > 0");
      const bool itr = a == Algorithm::dec_adg_itr;
      const auto dec = adg_decompose(g, itr ? eps : eps / 12.0, params.seed);
      rep.time_order_ns = clock.lap();
      std::vector<std::uint64_t> keys;
      SimColParams sp;
      sp.seed = params.seed;
      if (itr) {
        keys.resize(g.num_vertices());
        for (vertex_t v = 0; v < g.num_vertices(); ++v) keys[v] = tiebreak_key(params.seed, v);
        sp.rule = DrawRule::smallest_free;
        sp.tiebreak = keys;
      } else {
        sp.mu = eps / 4.0;
        rep.mu = sp.mu;
      }
      auto spec = color_decomposition(g, dec, sp);
      rep.time_color_ns = clock.lap();
      run.coloring = std::move(spec.coloring);
      rep.iterations = spec.total_rounds;
      for (auto r : spec.partition_rounds) rep.max_partition_rounds = std::max<std::uint64_t>(rep.max_partition_rounds, r);
      break;
    }
    case Algorithm::itr: {
      const std::uint32_t cap = params.itr_max_rounds ? params.itr_max_rounds : g.num_vertices() + 1;
      rep.time_order_ns = clock.lap();
      auto res = itr_baseline(g, params.seed, cap);
      rep.time_color_ns = clock.lap();
      run.coloring = std::move(res.coloring);
      rep.iterations = res.rounds;
      break;
    }
    case Algorithm::greedy_seq: {
      rep.time_order_ns = clock.lap();
      run.coloring = greedy_sequential(g);
      rep.time_color_ns = clock.lap();
      rep.iterations = 1;
      break;
    }
  }
  rep.colors_used = run.coloring.num_colors();
  return run;
}

ColoringRun jp_adg(const Graph& g, double epsilon, std::uint64_t seed) {
  AlgoParams p;
  p.epsilon = epsilon;
  p.seed = seed;
  return run_algorithm(g, Algorithm::jp_adg, p);
}

ColoringRun jp_with(const Graph& g, OrderKind kind, std::uint64_t seed) {
  Algorithm a;
  switch (kind) {
    case OrderKind::ff: a = Algorithm::jp_ff; break;
    case OrderKind::random: a = Algorithm::jp_r; break;
    case OrderKind::lf: a = Algorithm::jp_lf; break;
    case OrderKind::llf: a = Algorithm::jp_llf; break;
    case OrderKind::sl: a = Algorithm::jp_sl; break;
    case OrderKind::sll: a = Algorithm::jp_sll; break;
    case OrderKind::adg_m: a = Algorithm::jp_adg_m; break;
    default: throw std::invalid_argument("jp_with: use jp_adg for the ADG ordering");
  }
  AlgoParams p;
  p.seed = seed;
  return run_algorithm(g, a, p);
}

}  // namespace adgcolor
