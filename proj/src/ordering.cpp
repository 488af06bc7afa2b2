#include "adgcolor/ordering.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "adgcolor/bitmap.hpp"
#include "adgcolor/oracles.hpp"
#include "adgcolor/parallel.hpp"
#include "adgcolor/random.hpp"

namespace adgcolor {
namespace {

void require_positive_epsilon(double epsilon, const char* who) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument(std::string(who) + ": epsilon must be a finite value > 0");
}

// R = {u : D[u] <= (1+eps) * sum / count}  <=>  D[u] * count <= floor((1+eps) * sum).
// The right-hand side is computed once per round, so every thread and both
// update modes compare against the same integer.
std::uint64_t threshold_numerator(double epsilon, std::uint64_t degree_sum) {
  const long double t = (1.0L + static_cast<long double>(epsilon)) * static_cast<long double>(degree_sum);
  return static_cast<std::uint64_t>(std::floor(t));
}

vertex_t atomic_decrement(vertex_t& cell) {
  return std::atomic_ref<vertex_t>(cell).fetch_sub(1, std::memory_order_relaxed) - 1;
}

std::vector<vertex_t> all_vertices(vertex_t n) {
  std::vector<vertex_t> v(n);
  std::iota(v.begin(), v.end(), vertex_t{0});
  return v;
}

std::vector<vertex_t> initial_degrees(const Graph& g) {
  std::vector<vertex_t> d(g.num_vertices());
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < static_cast<std::int64_t>(g.num_vertices()); ++v)
    d[v] = g.degree(static_cast<vertex_t>(v));
  return d;
}

std::vector<std::uint64_t> seeded_tiebreaks(vertex_t n, std::uint64_t seed) {
  std::vector<std::uint64_t> t(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v)
    t[v] = tiebreak_key(seed, static_cast<vertex_t>(v));
  return t;
}

// Removes R from U and applies the degree update. Returns the number of
// R-to-survivor edges (the cut), which the cached degree sum subtracts.
std::uint64_t remove_and_update(const Graph& g, InducedView& U, DenseBitmap& in_r,
                                std::span<const vertex_t> removed, std::span<const vertex_t> active,
                                std::vector<vertex_t>& D, UpdateMode mode) {
  const auto nr = static_cast<std::int64_t>(removed.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < nr; ++i) {
    U.atomic_remove(removed[i]);
    if (mode == UpdateMode::pull) in_r.atomic_set(removed[i]);
  }

  std::uint64_t cut = 0;
  if (mode == UpdateMode::push) {
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : cut)
    for (std::int64_t i = 0; i < nr; ++i) {
      for (vertex_t w : g.neighbors(removed[i]))
        if (U.contains(w)) {
          atomic_decrement(D[w]);
          ++cut;
        }
    }
  } else {
    const auto na = static_cast<std::int64_t>(active.size());
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : cut)
    for (std::int64_t i = 0; i < na; ++i) {
      const vertex_t w = active[i];
      if (!U.contains(w)) continue;
      vertex_t c = 0;
      for (vertex_t v : g.neighbors(w)) c += in_r.test(v) ? 1 : 0;
      D[w] -= c;
      cut += c;
    }
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nr; ++i) in_r.atomic_reset(removed[i]);
  }
  return cut;
}

std::uint64_t degree_sum(std::span<const vertex_t> set, const std::vector<vertex_t>& D) {
  std::uint64_t s = 0;
  const auto n = static_cast<std::int64_t>(set.size());
#pragma omp parallel for schedule(static) reduction(+ : s)
  for (std::int64_t i = 0; i < n; ++i) s += D[set[i]];
  return s;
}

struct AdgCore {
  std::vector<std::uint64_t> rank;
  std::vector<vertex_t> removal_degree;
  std::vector<RoundStat> rounds;
};

AdgCore run_adg(const Graph& g, double epsilon, UpdateMode mode) {
  const vertex_t n = g.num_vertices();
  AdgCore out;
  out.rank.assign(n, 0);
  out.removal_degree.assign(n, 0);

  std::vector<vertex_t> D = initial_degrees(g);
  InducedView U(g);
  DenseBitmap in_r(mode == UpdateMode::pull ? n : 0);
  std::vector<vertex_t> active = all_vertices(n);
  std::uint64_t sum = 2 * g.num_edges();  // cached sum of D over U

  for (std::uint64_t round = 1; !active.empty(); ++round) {
    assert(sum == degree_sum(active, D));
    const std::uint64_t count = active.size();
    const std::uint64_t thr = threshold_numerator(epsilon, sum);
    auto removed = parallel_pack<vertex_t>(
        active, [&](vertex_t v) { return std::uint64_t{D[v]} * count <= thr; });

    const auto nr = static_cast<std::int64_t>(removed.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nr; ++i) {
      out.rank[removed[i]] = round;
      out.removal_degree[removed[i]] = D[removed[i]];
    }
    const std::uint64_t removed_sum = degree_sum(removed, D);
    const std::uint64_t cut = remove_and_update(g, U, in_r, removed, active, D, mode);
    // Edges inside R appear twice in removed_sum; cut edges once there and
    // once on the surviving side.
    sum -= removed_sum + cut;

    out.rounds.push_back({static_cast<vertex_t>(count), static_cast<vertex_t>(removed.size())});
    active = parallel_pack<vertex_t>(active, [&](vertex_t v) { return U.contains(v); });
  }
  return out;
}

}  // namespace

std::string_view to_string(OrderKind kind) noexcept {
  switch (kind) {
    case OrderKind::adg: return "ADG";
    case OrderKind::adg_m: return "ADG-M";
    case OrderKind::adg_o: return "ADG-O";
    case OrderKind::ff: return "FF";
    case OrderKind::random: return "R";
    case OrderKind::lf: return "LF";
    case OrderKind::llf: return "LLF";
    case OrderKind::sl: return "SL";
    case OrderKind::sll: return "SLL";
  }
  return "?";
}

std::optional<OrderKind> order_kind_from_string(std::string_view name) noexcept {
  for (auto k : {OrderKind::adg, OrderKind::adg_m, OrderKind::adg_o, OrderKind::ff, OrderKind::random,
                 OrderKind::lf, OrderKind::llf, OrderKind::sl, OrderKind::sll})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::uint64_t OrderingResult::max_rank() const noexcept {
  std::uint64_t m = 0;
  for (auto r : rank) m = std::max(m, r);
  return m;
}

std::uint64_t tiebreak_key(std::uint64_t seed, vertex_t v) noexcept {
  return random_bits(seed, Stream::tiebreak, v);
}

OrderingResult adg(const Graph& g, double epsilon, std::uint64_t seed, UpdateMode mode) {
  require_positive_epsilon(epsilon, "adg");
  auto core = run_adg(g, epsilon, mode);
  OrderingResult o;
  o.kind = OrderKind::adg;
  o.rank = std::move(core.rank);
  o.tiebreak = seeded_tiebreaks(g.num_vertices(), seed);
  o.iterations = static_cast<std::uint32_t>(core.rounds.size());
  o.epsilon = epsilon;
  o.rounds = std::move(core.rounds);
  return o;
}

OrderingResult adg_m(const Graph& g, std::uint64_t seed) {
  const vertex_t n = g.num_vertices();
  OrderingResult o;
  o.kind = OrderKind::adg_m;
  o.rank.assign(n, 0);
  o.tiebreak = seeded_tiebreaks(n, seed);

  std::vector<vertex_t> D = initial_degrees(g);
  InducedView U(g);
  DenseBitmap unused;
  std::vector<vertex_t> active = all_vertices(n);
  std::vector<vertex_t> scratch;

  for (std::uint64_t round = 1; !active.empty(); ++round) {
    const std::size_t count = active.size();
    const std::size_t take = (count + 1) / 2;
    scratch = active;
    auto by_degree = [&](vertex_t a, vertex_t b) { return D[a] != D[b] ? D[a] < D[b] : a < b; };
    std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(take - 1),
                     scratch.end(), by_degree);
    scratch.resize(take);
    std::sort(scratch.begin(), scratch.end());

    for (vertex_t v : scratch) o.rank[v] = round;
    remove_and_update(g, U, unused, scratch, active, D, UpdateMode::push);
    o.rounds.push_back({static_cast<vertex_t>(count), static_cast<vertex_t>(take)});
    active = parallel_pack<vertex_t>(active, [&](vertex_t v) { return U.contains(v); });
  }
  o.iterations = static_cast<std::uint32_t>(o.rounds.size());
  return o;
}

FusedOrdering adg_fused(const Graph& g, double epsilon, std::uint64_t seed) {
  require_positive_epsilon(epsilon, "adg_fused");
  const vertex_t n = g.num_vertices();
  FusedOrdering out;
  auto& o = out.ordering;
  o.kind = OrderKind::adg_o;
  o.epsilon = epsilon;
  // Unranked vertices (still in U) carry the sentinel n, above every rank.
  o.rank.assign(n, n);
  o.tiebreak = seeded_tiebreaks(n, seed);
  out.pred_count.assign(n, 0);
  out.round.assign(n, 0);

  std::vector<vertex_t> D = initial_degrees(g);
  std::vector<vertex_t> layout = all_vertices(n);  // [R(1) .. R(i) | U]
  std::size_t head = 0;
  std::uint64_t sum = 2 * g.num_edges();
  std::vector<std::size_t> bucket;

  for (std::uint32_t round = 1; head < n; ++round) {
    std::span<vertex_t> U(layout.data() + head, layout.size() - head);
    const std::uint64_t count = U.size();
    const std::uint64_t thr = threshold_numerator(epsilon, sum);
    auto selected = [&](vertex_t v) { return std::uint64_t{D[v]} * count <= thr; };

    // PARTITION: U -> [R | U \ R], both sides stable.
    auto R = parallel_pack<vertex_t>(std::span<const vertex_t>(U), selected);
    auto rest = parallel_pack<vertex_t>(std::span<const vertex_t>(U),
                                        [&](vertex_t v) { return !selected(v); });

    // SORT(R, D): stable counting sort on residual degree.
    vertex_t top = 0;
    for (vertex_t v : R) top = std::max(top, D[v]);
    bucket.assign(static_cast<std::size_t>(top) + 2, 0);
    for (vertex_t v : R) ++bucket[D[v] + 1];
    for (std::size_t i = 1; i < bucket.size(); ++i) bucket[i] += bucket[i - 1];
    for (vertex_t v : R) U[bucket[D[v]]++] = v;
    std::copy(rest.begin(), rest.end(), U.begin() + static_cast<std::ptrdiff_t>(R.size()));

    const auto nr = static_cast<std::int64_t>(R.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nr; ++i) {
      o.rank[U[i]] = head + static_cast<std::uint64_t>(i);
      out.round[U[i]] = round;
    }

    // UPDATEandPRIORITIZE: count higher-ordered neighbors and decrement the
    // residual degree of those still in U.
    std::uint64_t removed_sum = 0, cut = 0;
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : removed_sum, cut)
    for (std::int64_t i = 0; i < nr; ++i) {
      const vertex_t v = U[i];
      removed_sum += D[v];
      vertex_t c = 0;
      for (vertex_t w : g.neighbors(v)) {
        if (o.rank[w] > o.rank[v]) {
          ++c;
          if (o.rank[w] == n) {
            atomic_decrement(D[w]);
            ++cut;
          }
        }
      }
      out.pred_count[v] = c;
    }
    sum -= removed_sum + cut;
    head += R.size();
    o.rounds.push_back({static_cast<vertex_t>(count), static_cast<vertex_t>(R.size())});
  }
  o.iterations = static_cast<std::uint32_t>(o.rounds.size());
  return out;
}

Decomposition adg_decompose(const Graph& g, double epsilon_inner, std::uint64_t /*seed*/) {
  require_positive_epsilon(epsilon_inner, "adg_decompose");
  auto core = run_adg(g, epsilon_inner, UpdateMode::push);
  Decomposition dec;
  dec.partitions.resize(core.rounds.size());
  for (std::size_t i = 0; i < core.rounds.size(); ++i) dec.partitions[i].reserve(core.rounds[i].removed);
  dec.partition_of.resize(g.num_vertices());
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    dec.partitions[core.rank[v] - 1].push_back(v);
    dec.partition_of[v] = static_cast<std::uint32_t>(core.rank[v]);
  }
  dec.degl = std::move(core.removal_degree);
  return dec;
}

namespace {

// Smallest-log-degree-last: each round removes every vertex whose residual
// log-degree class is the current minimum. Lazy buckets keep the total cost
// at O(n + m + rounds * classes).
std::vector<std::uint64_t> sll_ranks(const Graph& g, std::uint32_t& rounds) {
  const vertex_t n = g.num_vertices();
  auto cls = [](vertex_t d) { return static_cast<unsigned>(std::bit_width(d)); };
  std::vector<vertex_t> D = initial_degrees(g);
  std::vector<std::uint8_t> alive(n, 1);
  std::vector<std::vector<vertex_t>> buckets(33);
  for (vertex_t v = 0; v < n; ++v) buckets[cls(D[v])].push_back(v);

  std::vector<std::uint64_t> rank(n, 0);
  vertex_t remaining = n;
  rounds = 0;
  std::vector<vertex_t> R;
  while (remaining > 0) {
    R.clear();
    for (auto& b : buckets) {
      for (vertex_t v : b)
        if (alive[v] && cls(D[v]) == static_cast<unsigned>(&b - buckets.data())) R.push_back(v);
      b.clear();
      if (!R.empty()) break;
    }
    ++rounds;
    std::sort(R.begin(), R.end());
    R.erase(std::unique(R.begin(), R.end()), R.end());
    for (vertex_t v : R) {
      alive[v] = 0;
      rank[v] = rounds;
    }
    remaining -= static_cast<vertex_t>(R.size());
    for (vertex_t v : R)
      for (vertex_t w : g.neighbors(v))
        if (alive[w]) {
          const unsigned before = cls(D[w]);
          --D[w];
          if (cls(D[w]) != before) buckets[cls(D[w])].push_back(w);
        }
  }
  return rank;
}

}  // namespace

OrderingResult baseline_order(const Graph& g, OrderKind kind, std::uint64_t seed) {
  const vertex_t n = g.num_vertices();
  OrderingResult o;
  o.kind = kind;
  o.rank.assign(n, 0);
  o.tiebreak = seeded_tiebreaks(n, seed);
  o.iterations = 1;
  switch (kind) {
    case OrderKind::ff:
      for (vertex_t v = 0; v < n; ++v) o.rank[v] = n - v;
      break;
    case OrderKind::random:
      break;
    case OrderKind::lf:
      for (vertex_t v = 0; v < n; ++v) o.rank[v] = g.degree(v);
      break;
    case OrderKind::llf:
      for (vertex_t v = 0; v < n; ++v) o.rank[v] = std::bit_width(g.degree(v));
      break;
    case OrderKind::sl: {
      // Later removal -> higher priority, so each vertex has at most d
      // predecessors.
      auto deg = exact_degeneracy(g);
      for (vertex_t i = 0; i < n; ++i) o.rank[deg.order[i]] = i;
      o.iterations = n;
      break;
    }
    case OrderKind::sll:
      o.rank = sll_ranks(g, o.iterations);
      break;
    case OrderKind::adg:
    case OrderKind::adg_m:
    case OrderKind::adg_o:
      throw std::invalid_argument("baseline_order: ADG kinds have their own entry points");
  }
  return o;
}

double check_partial_approx(const Graph& g, const OrderingResult& o, vertex_t d) {
  if (d == 0) return 0.0;
  vertex_t worst = 0;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    vertex_t c = 0;
    for (vertex_t u : g.neighbors(v)) c += o.rank[u] >= o.rank[v] ? 1 : 0;
    worst = std::max(worst, c);
  }
  return static_cast<double>(worst) / d;
}

double check_partial_approx_strict(const Graph& g, const OrderingResult& o, vertex_t d) {
  if (d == 0) return 0.0;
  vertex_t worst = 0;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    vertex_t c = 0;
    for (vertex_t u : g.neighbors(v)) c += o.higher(u, v) ? 1 : 0;
    worst = std::max(worst, c);
  }
  return static_cast<double>(worst) / d;
}

std::uint32_t adg_iteration_bound(vertex_t n, double epsilon) {
  if (n <= 1) return n;
  // Shave rounding noise so exact powers (n = 1024, eps = 1) are not bumped up.
  const double x = std::log(static_cast<double>(n)) / std::log1p(epsilon);
  return static_cast<std::uint32_t>(std::ceil(x * (1.0 - 1e-12))) + 1;
}

std::uint32_t adg_m_iteration_bound(vertex_t n) {
  if (n <= 1) return n;
  return static_cast<std::uint32_t>(std::bit_width(n - 1)) + 1;
}

}  // namespace adgcolor
