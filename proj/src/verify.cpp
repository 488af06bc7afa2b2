#include "adgcolor/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "adgcolor/oracles.hpp"
#include "adgcolor/speculative.hpp"

namespace adgcolor {
namespace {

constexpr vertex_t kChromaticCheckLimit = 12;

std::string edge_witness(const EdgePair& e) {
  return "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

Verdict properness(const Graph& g, const Coloring& c) {
  Verdict v;
  v.check = "proper";
  v.formula = "monochromatic edges + uncolored vertices = 0";
  const auto res = validate_coloring(g, c);
  v.pass = res.proper;
  v.observed = res.proper ? 0.0 : 1.0;
  if (res.uncolored)
    v.witness = "vertex " + std::to_string(*res.uncolored) + " uncolored";
  else if (res.conflict)
    v.witness = edge_witness(*res.conflict);
  return v;
}

Verdict upper(std::string check, double observed, double bound, std::string formula) {
  return Verdict{.check = std::move(check),
                 .pass = observed <= bound,
                 .observed = observed,
                 .bound = bound,
                 .formula = std::move(formula),
                 .witness = std::nullopt};
}

std::optional<std::pair<double, std::string>> ordering_factor(const OrderingResult& o, double eps) {
  switch (o.kind) {
    case OrderKind::adg:
    case OrderKind::adg_o: return std::pair{2.0 * (1.0 + eps), std::string("2(1+eps)")};
    case OrderKind::adg_m: return std::pair{4.0, std::string("4")};
    case OrderKind::sl: return std::pair{1.0, std::string("1")};
    default: return std::nullopt;
  }
}

}  // namespace

double ceil_bound(double x) noexcept { return std::ceil(x * (1.0 - 1e-12)); }

std::optional<ColorBound> certified_color_bound(Algorithm a, double eps, vertex_t d, vertex_t max_degree) {
  const double dd = d;
  switch (a) {
    case Algorithm::jp_adg:
    case Algorithm::dec_adg_itr:
      return ColorBound{ceil_bound(2.0 * (1.0 + eps) * dd) + 1.0, "ceil(2(1+eps)d)+1"};
    case Algorithm::jp_adg_m: return ColorBound{4.0 * dd + 1.0, "4d+1"};
    case Algorithm::jp_sl: return ColorBound{dd + 1.0, "d+1"};
    case Algorithm::dec_adg:
      if (!dec_adg_certified(eps)) return std::nullopt;
      return ColorBound{std::max(1.0, ceil_bound((2.0 + eps) * dd)), "max(1,ceil((2+eps)d))"};
    default: return ColorBound{static_cast<double>(max_degree) + 1.0, "Delta+1"};
  }
}

std::vector<Verdict> verify_run(const Graph& g, Algorithm a, const AlgoParams& params, const Coloring& coloring,
                                const OrderingResult* ordering, std::optional<vertex_t> degeneracy) {
  std::vector<Verdict> out;
  const vertex_t n = g.num_vertices();
  const double eps = params.epsilon.value_or(default_epsilon(a));
  const vertex_t d = degeneracy ? *degeneracy : exact_degeneracy(g).degeneracy;
  const double used = static_cast<double>(coloring.num_colors());

  out.push_back(properness(g, coloring));
  if (n == 0) return out;

  const auto bound = certified_color_bound(a, eps, d, g.max_degree());
  if (bound) out.push_back(upper("color_bound", used, bound->value, bound->formula));
  // dec-adg palettes are inflated by (1+mu) and may exceed Delta+1.
  if (a != Algorithm::dec_adg && bound && bound->formula != "Delta+1")
    out.push_back(upper("max_degree_bound", used, static_cast<double>(g.max_degree()) + 1.0, "Delta+1"));
  if (a == Algorithm::dec_adg) {
    const double inner = ceil_bound(2.0 * (1.0 + eps / 12.0) * d);
    const double ceiling = ceil_bound((1.0 + eps / 4.0) * inner) + 1.0;
    out.push_back(upper("palette_ceiling", static_cast<double>(coloring.max_color()), ceiling,
                        "ceil((1+eps/4)ceil(2(1+eps/12)d))+1"));
  }

  if (ordering && d > 0) {
    if (auto f = ordering_factor(*ordering, eps)) {
      const bool total = ordering->kind == OrderKind::adg_o || ordering->kind == OrderKind::sl;
      const double ratio = total ? check_partial_approx_strict(g, *ordering, d) : check_partial_approx(g, *ordering, d);
      out.push_back(upper("ordering_approx", ratio, f->first * (1.0 + 1e-12), f->second));
    }
  }

  if (n <= kChromaticCheckLimit) {
    const double chi = brute_force_chromatic(g);
    out.push_back(Verdict{.check = "chromatic_lower_bound",
                          .pass = used >= chi,
                          .observed = used,
                          .bound = chi,
                          .formula = "chi(G)",
                          .witness = std::nullopt});
  }

  const double root_m = std::sqrt(static_cast<double>(g.num_edges()));
  out.push_back(Verdict{.check = "degeneracy_sqrt_m",
                        .pass = root_m >= d / 2.0,
                        .observed = d / 2.0,
                        .bound = root_m,
                        .formula = "sqrt(m)",
                        .witness = std::nullopt});
  return out;
}

bool all_pass(std::span<const Verdict> verdicts) noexcept {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

VerificationError::VerificationError(std::string graph, std::string algorithm, std::uint64_t seed, Verdict verdict)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << algorithm << " on " << graph << " (seed " << seed << "): " << verdict.check << " failed, observed "
           << verdict.observed << " vs " << verdict.formula << " = " << verdict.bound;
        if (verdict.witness) os << ", witness " << *verdict.witness;
        return os.str();
      }()),
      verdict_(std::move(verdict)) {}

std::optional<double> SweepResult::mean_colors(std::string_view graph, Algorithm a,
                                               std::optional<double> epsilon) const {
  for (const auto& c : cells)
    if (c.graph == graph && c.algorithm == a && (!epsilon || c.epsilon == epsilon)) return c.colors.mean;
  return std::nullopt;
}

SweepResult corpus_sweep(std::span<const CorpusEntry> corpus, std::span<const Algorithm> algorithms,
                         std::span<const std::uint64_t> seeds, std::span<const double> epsilons, bool parallel) {
  struct Job {
    std::size_t graph;
    Algorithm algo;
    std::optional<double> eps;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi)
    for (auto a : algorithms) {
      std::vector<std::optional<double>> eps_list;
      if (uses_epsilon(a) && !epsilons.empty())
        eps_list.assign(epsilons.begin(), epsilons.end());
      else
        eps_list.push_back(uses_epsilon(a) ? std::optional(default_epsilon(a)) : std::nullopt);
      for (auto e : eps_list)
        for (auto s : seeds) jobs.push_back({gi, a, e, s});
    }

  std::vector<vertex_t> degeneracy(corpus.size());
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) degeneracy[gi] = exact_degeneracy(corpus[gi].graph).degeneracy;

  SweepResult result;
  result.rows.resize(jobs.size());
  std::vector<std::optional<VerificationError>> failures(jobs.size());

  const auto run_job = [&](std::size_t j, int threads) {
    const auto& job = jobs[j];
    const auto& entry = corpus[job.graph];
    AlgoParams p;
    p.epsilon = job.eps;
    p.seed = job.seed;
    p.threads = threads;
    auto run = run_algorithm(entry.graph, job.algo, p, entry.name);
    const auto verdicts = verify_run(entry.graph, job.algo, p, run.coloring,
                                     run.ordering ? &*run.ordering : nullptr, degeneracy[job.graph]);
    for (const auto& v : verdicts)
      if (!v.pass) {
        failures[j].emplace(entry.name, std::string(to_string(job.algo)), job.seed, v);
        break;
      }
    result.rows[j] = SweepRow{entry.name,         job.algo,
                              job.eps,            job.seed,
                              run.report.colors_used, run.report.iterations,
                              run.report.time_order_ns, run.report.time_color_ns};
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(jobs.size()); ++j) run_job(static_cast<std::size_t>(j), 1);
  } else {
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      run_job(j, 0);
      if (failures[j]) throw *failures[j];
    }
  }
  for (auto& f : failures)
    if (f) throw *f;

  std::map<std::tuple<std::size_t, Algorithm, double>, std::size_t> cell_index;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const auto key = std::tuple{jobs[j].graph, jobs[j].algo, jobs[j].eps.value_or(-1.0)};
    auto [it, inserted] = cell_index.try_emplace(key, result.cells.size());
    if (inserted) {
      auto& cell = result.cells.emplace_back();
      cell.graph = corpus[jobs[j].graph].name;
      cell.algorithm = jobs[j].algo;
      cell.epsilon = jobs[j].eps;
      members.emplace_back();
    }
    members[it->second].push_back(j);
  }
  for (std::size_t c = 0; c < result.cells.size(); ++c) {
    auto& cell = result.cells[c];
    cell.runs = members[c].size();
    cell.colors = {1e300, 0.0, 0.0};
    cell.time_ns = {1e300, 0.0, 0.0};
    for (auto j : members[c]) {
      const auto& r = result.rows[j];
      const double colors = static_cast<double>(r.colors);
      const double t = static_cast<double>(r.time_order_ns + r.time_color_ns);
      cell.colors.min = std::min(cell.colors.min, colors);
      cell.colors.max = std::max(cell.colors.max, colors);
      cell.colors.mean += colors / static_cast<double>(cell.runs);
      cell.time_ns.min = std::min(cell.time_ns.min, t);
      cell.time_ns.max = std::max(cell.time_ns.max, t);
      cell.time_ns.mean += t / static_cast<double>(cell.runs);
    }
  }
  return result;
}

SoftCheck soft_compare(std::string name, double lhs, double rhs) {
  return SoftCheck{std::move(name), lhs <= rhs, lhs, rhs};
}

}  // namespace adgcolor
