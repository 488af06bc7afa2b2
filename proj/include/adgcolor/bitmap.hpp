#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <vector>

#include "adgcolor/graph.hpp"

namespace adgcolor {

// n-bit dense bitmap. The atomic_* members may be called concurrently on
// bits that share a word; the plain members may not.
class DenseBitmap {
 public:
  DenseBitmap() = default;
  explicit DenseBitmap(std::size_t bits, bool value = false)
      : bits_(bits), words_((bits + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    if (value) trim();
  }

  std::size_t size() const noexcept { return bits_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= bit(i); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~bit(i); }

  void atomic_set(std::size_t i) noexcept {
    std::atomic_ref<std::uint64_t>(words_[i >> 6]).fetch_or(bit(i), std::memory_order_relaxed);
  }
  void atomic_reset(std::size_t i) noexcept {
    std::atomic_ref<std::uint64_t>(words_[i >> 6]).fetch_and(~bit(i), std::memory_order_relaxed);
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  static std::uint64_t bit(std::size_t i) noexcept { return std::uint64_t{1} << (i & 63); }
  void trim() noexcept {
    if (bits_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// The vertex set U of an algorithm run together with the graph it lives in.
// Membership only shrinks.
class InducedView {
 public:
  explicit InducedView(const Graph& g) : g_(&g), members_(g.num_vertices(), true) {}

  const Graph& graph() const noexcept { return *g_; }
  bool contains(vertex_t v) const noexcept { return members_.test(v); }
  void remove(vertex_t v) noexcept { members_.reset(v); }
  void atomic_remove(vertex_t v) noexcept { members_.atomic_reset(v); }
  std::size_t size() const noexcept { return members_.count(); }

  /// deg_U(v): neighbors of v that are still members.
  vertex_t degree(vertex_t v) const noexcept {
    vertex_t d = 0;
    for (vertex_t u : g_->neighbors(v)) d += members_.test(u) ? 1 : 0;
    return d;
  }

  /// N_U(v) materialized.
  std::vector<vertex_t> neighbors(vertex_t v) const {
    std::vector<vertex_t> out;
    for (vertex_t u : g_->neighbors(v))
      if (members_.test(u)) out.push_back(u);
    return out;
  }

  template <class F>
  void for_each_neighbor(vertex_t v, F&& f) const {
    for (vertex_t u : g_->neighbors(v))
      if (members_.test(u)) f(u);
  }

 private:
  const Graph* g_;
  DenseBitmap members_;
};

}  // namespace adgcolor
