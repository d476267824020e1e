#pragma once

// Spanning forests of a Seifert graph: seeded selection, counting by the
// matrix-tree theorem, and exhaustive enumeration.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "nullwrithe/seifert.hpp"

namespace nullwrithe {

/// Union-find with union by size and an undo log, so that backtracking
/// search can roll merges back.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool connected(std::size_t a, std::size_t b) const { return find(a) == find(b); }

  /// Returns false (and records nothing) when already connected.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    ++sets_merged_;
    return true;
  }
  std::size_t checkpoint() const noexcept { return history_.size(); }
  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      const std::size_t b = history_.back();
      history_.pop_back();
      const std::size_t a = parent_[b];
      size_[a] -= size_[b];
      parent_[b] = b;
      --sets_merged_;
    }
  }
  std::size_t merges() const noexcept { return sets_merged_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
  std::size_t sets_merged_ = 0;
};

/// A maximal acyclic edge set: s - k edges, one spanning tree per component.
struct SpanningForest {
  std::vector<std::size_t> edges;  // sorted edge ids
  std::vector<bool> member;        // indexed by edge id

  bool contains(std::size_t e) const { return e < member.size() && member[e]; }
  std::size_t size() const noexcept { return edges.size(); }

  static SpanningForest from_edges(std::vector<std::size_t> ids, std::size_t edge_count) {
    SpanningForest f;
    std::sort(ids.begin(), ids.end());
    f.member.assign(edge_count, false);
    for (std::size_t e : ids) f.member.at(e) = true;
    f.edges = std::move(ids);
    return f;
  }

  friend bool operator==(const SpanningForest& a, const SpanningForest& b) {
    return a.edges == b.edges;
  }
};

/// Greedy forest growth over a seeded shuffle of the edges. Equal seeds give
/// equal forests.
inline SpanningForest spanning_forest(const SeifertGraph& g, std::uint64_t seed) {
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  // std::shuffle's draw sequence is implementation-defined; Fisher-Yates by
  // hand keeps forests identical across standard libraries.
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
  DisjointSets sets(g.vertex_count());
  std::vector<std::size_t> kept;
  for (std::size_t e : order)
    if (sets.unite(g.edge(e).u, g.edge(e).v)) kept.push_back(e);
  return SpanningForest::from_edges(std::move(kept), g.edge_count());
}

/// True iff `f` is acyclic and has s - k edges.
inline bool is_spanning_forest(const SeifertGraph& g, const SpanningForest& f) {
  if (f.member.size() != g.edge_count()) return false;
  DisjointSets sets(g.vertex_count());
  for (std::size_t e : f.edges) {
    if (e >= g.edge_count() || !f.member[e]) return false;
    if (!sets.unite(g.edge(e).u, g.edge(e).v)) return false;
  }
  return f.edges.size() == g.vertex_count() - g.component_count();
}

namespace detail {

__extension__ typedef __int128 wide_int;
__extension__ typedef unsigned __int128 wide_uint;

/// Determinant of an integer matrix by fraction-free Bareiss elimination.
/// nullopt on 128-bit overflow.
inline std::optional<wide_int> bareiss_determinant(std::vector<std::vector<wide_int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  wide_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        wide_int a, b;
        if (__builtin_mul_overflow(m[i][j], m[k][k], &a)) return std::nullopt;
        if (__builtin_mul_overflow(m[i][k], m[k][j], &b)) return std::nullopt;
        wide_int diff;
        if (__builtin_sub_overflow(a, b, &diff)) return std::nullopt;
        m[i][j] = diff / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace detail

/// Number of spanning forests: the product over components of the number of
/// spanning trees (Kirchhoff). nullopt when it does not fit in 64 bits.
inline std::optional<std::uint64_t> count_spanning_forests(const SeifertGraph& g) {
  std::vector<std::vector<std::size_t>> members(g.component_count());
  std::vector<std::size_t> local(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    local[v] = members[g.component_of(v)].size();
    members[g.component_of(v)].push_back(v);
  }
  detail::wide_uint total = 1;
  for (const auto& comp : members) {
    // Reduced Laplacian: drop the component's first vertex.
    const std::size_t size = comp.size() - 1;
    std::vector<std::vector<detail::wide_int>> lap(size, std::vector<detail::wide_int>(size, 0));
    for (std::size_t v : comp) {
      for (std::size_t e : g.incident(v)) {
        const std::size_t w = g.edge(e).other(v);
        if (local[v] == 0) continue;
        lap[local[v] - 1][local[v] - 1] += 1;
        if (local[w] != 0) lap[local[v] - 1][local[w] - 1] -= 1;
      }
    }
    auto det = detail::bareiss_determinant(std::move(lap));
    if (!det || *det < 0) return std::nullopt;
    total *= static_cast<detail::wide_uint>(*det);
    if (total > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(total);
}

/// Calls `visit(const SpanningForest&)` for every spanning forest, stopping
/// after `limit` forests. Returns the number visited. Every branch of the
/// search reaches at least one forest, so the cost is O(n^2) per forest.
template <class Visitor>
std::size_t enumerate_spanning_forests(const SeifertGraph& g, std::size_t limit, Visitor&& visit) {
  const std::size_t n = g.edge_count();
  const std::size_t target = g.vertex_count() - g.component_count();
  DisjointSets chosen(g.vertex_count());
  std::vector<std::size_t> picked;
  std::size_t visited = 0;

  // Can the forest still reach `target` edges using only edges >= from?
  auto completable = [&](std::size_t from) {
    DisjointSets probe = chosen;
    for (std::size_t e = from; e < n; ++e) probe.unite(g.edge(e).u, g.edge(e).v);
    return probe.merges() == target;
  };

  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (visited >= limit) return;
    if (picked.size() == target) {
      ++visited;
      visit(SpanningForest::from_edges(picked, n));
      return;
    }
    if (i == n) return;
    const SeifertEdge& edge = g.edge(i);
    const std::size_t mark = chosen.checkpoint();
    if (chosen.unite(edge.u, edge.v)) {
      picked.push_back(i);
      self(self, i + 1);
      picked.pop_back();
      chosen.rollback(mark);
    }
    if (completable(i + 1)) self(self, i + 1);
  };
  if (completable(0)) recurse(recurse, 0);
  return visited;
}

}  // namespace nullwrithe
