#pragma once

// Nullification number, nullification writhe w_x, remaining writhe w_y, the
// empirical verifiers for their well-definedness, and the chirality verdict.
//
// Nullifying crossings until an unknot (or unlink) remains is the same as
// deleting Seifert-graph edges until a spanning forest remains. The deleted
// edges form the nullification set; the forest holds the remaining crossings.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nullwrithe/diagram.hpp"
#include "nullwrithe/errors.hpp"
#include "nullwrithe/forest.hpp"
#include "nullwrithe/seifert.hpp"

namespace nullwrithe {

/// o = n - s + k.
inline std::size_t nullification_number(const SeifertGraph& g) {
  return g.edge_count() - g.vertex_count() + g.component_count();
}

struct WritheSplit {
  int w = 0;    // all crossings
  int w_x = 0;  // nullification set (edges not in the forest)
  int w_y = 0;  // remaining crossings (forest edges)

  friend constexpr bool operator==(const WritheSplit&, const WritheSplit&) = default;
  friend constexpr auto operator<=>(const WritheSplit&, const WritheSplit&) = default;
};

inline WritheSplit writhe_split(const SeifertGraph& g, const SpanningForest& f) {
  WritheSplit out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const int s = to_int(g.edge(e).sign);
    out.w += s;
    (f.contains(e) ? out.w_y : out.w_x) += s;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sign structure of alternating diagrams

/// Edge ids of the cycle closed by the non-forest edge `e`: `e` first, then
/// the forest path from its v end back to its u end.
inline std::vector<std::size_t> fundamental_cycle(const SeifertGraph& g, const SpanningForest& f,
                                                  std::size_t e) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent_edge(n, none), depth(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t id : g.incident(x)) {
        if (!f.contains(id)) continue;
        const std::size_t y = g.edge(id).other(x);
        if (seen[y]) continue;
        seen[y] = true;
        parent_edge[y] = id;
        depth[y] = depth[x] + 1;
        stack.push_back(y);
      }
    }
  }
  std::size_t a = g.edge(e).u, b = g.edge(e).v;
  std::vector<std::size_t> from_a, from_b;
  while (a != b) {
    if (depth[a] >= depth[b]) {
      from_a.push_back(parent_edge[a]);
      a = g.edge(parent_edge[a]).other(a);
    } else {
      from_b.push_back(parent_edge[b]);
      b = g.edge(parent_edge[b]).other(b);
    }
  }
  std::vector<std::size_t> cycle{e};
  cycle.insert(cycle.end(), from_b.begin(), from_b.end());
  cycle.insert(cycle.end(), from_a.rbegin(), from_a.rend());
  return cycle;
}

struct SignStructureReport {
  std::size_t parallel_classes = 0;
  std::size_t fundamental_cycles = 0;
  /// First edge id of each parallel class that mixes signs.
  std::vector<std::size_t> mixed_parallel_classes;
  /// Non-forest edges whose fundamental cycle mixes signs.
  std::vector<std::size_t> mixed_cycles;

  bool ok() const noexcept { return mixed_parallel_classes.empty() && mixed_cycles.empty(); }
};

/// Checks that every parallel class and every fundamental cycle of `f` is
/// sign-monochromatic. Together these say every cycle of the graph is.
inline SignStructureReport check_sign_structure(const SeifertGraph& g, const SpanningForest& f) {
  SignStructureReport r;
  for (const auto& cls : parallel_classes(g)) {
    if (cls.size() < 2) continue;
    ++r.parallel_classes;
    const Sign s = g.edge(cls.front()).sign;
    if (std::any_of(cls.begin(), cls.end(), [&](std::size_t e) { return g.edge(e).sign != s; }))
      r.mixed_parallel_classes.push_back(cls.front());
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (f.contains(e)) continue;
    ++r.fundamental_cycles;
    const auto cycle = fundamental_cycle(g, f, e);
    const Sign s = g.edge(e).sign;
    if (std::any_of(cycle.begin(), cycle.end(), [&](std::size_t id) { return g.edge(id).sign != s; }))
      r.mixed_cycles.push_back(e);
  }
  return r;
}

inline SignStructureReport check_sign_structure(const SeifertGraph& g, std::uint64_t seed = 0) {
  return check_sign_structure(g, spanning_forest(g, seed));
}

// ---------------------------------------------------------------------------
// Forest independence

struct IndependenceOptions {
  /// Enumerate every forest when there are at most this many.
  std::uint64_t exhaustive_bound = 10'000;
  std::uint64_t first_seed = 0;
};

struct IndependenceResult {
  bool independent = true;
  bool exhaustive = false;
  std::optional<std::uint64_t> forest_count;  // nullopt if beyond 64 bits
  std::size_t forests_checked = 0;
  std::vector<WritheSplit> distinct_splits;   // sorted

  explicit operator bool() const noexcept { return independent; }
};

/// Evaluates (w, w_x, w_y) on `trials` seeded forests and, when the forest
/// count is within the bound, on every forest. Independent iff a single
/// split is observed.
inline IndependenceResult verify_forest_independence(const SeifertGraph& g, std::size_t trials,
                                                     const IndependenceOptions& options = {}) {
  if (!g.from_alternating())
    throw NotAlternatingError("forest independence is only claimed for alternating diagrams");
  if (trials == 0) throw NotApplicableError("trials must be positive");

  IndependenceResult r;
  auto record = [&](const SpanningForest& f) {
    const WritheSplit s = writhe_split(g, f);
    auto it = std::lower_bound(r.distinct_splits.begin(), r.distinct_splits.end(), s);
    if (it == r.distinct_splits.end() || *it != s) r.distinct_splits.insert(it, s);
    ++r.forests_checked;
  };
  for (std::size_t t = 0; t < trials; ++t) record(spanning_forest(g, options.first_seed + t));

  r.forest_count = count_spanning_forests(g);
  if (r.forest_count && *r.forest_count <= options.exhaustive_bound) {
    r.exhaustive = true;
    const std::size_t seen =
        enumerate_spanning_forests(g, static_cast<std::size_t>(*r.forest_count) + 1, record);
    // The enumeration and the matrix-tree count are independent routes.
    if (seen != *r.forest_count) r.independent = false;
  }
  if (r.distinct_splits.size() != 1) r.independent = false;
  return r;
}

// ---------------------------------------------------------------------------
// Report and verdict

enum class ChiralityReason { nonzero_wx_wy, even_components };

inline const char* to_string(ChiralityReason r) {
  return r == ChiralityReason::nonzero_wx_wy ? "nonzero_wx_wy" : "even_components";
}

/// One-sided: either chiral for the listed reasons, or undetermined. Never
/// claims achirality.
struct Verdict {
  std::vector<ChiralityReason> reasons;

  bool chiral() const noexcept { return !reasons.empty(); }
  bool has(ChiralityReason r) const {
    return std::find(reasons.begin(), reasons.end(), r) != reasons.end();
  }
  /// "Chiral(nonzero_wx_wy,even_components)" or "Undetermined".
  std::string to_string() const {
    if (!chiral()) return "Undetermined";
    std::string s = "Chiral(";
    for (std::size_t i = 0; i < reasons.size(); ++i) {
      if (i) s += ',';
      s += nullwrithe::to_string(reasons[i]);
    }
    return s + ")";
  }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct InvariantReport {
  std::size_t n = 0, s = 0, k = 0, c = 0, o = 0;
  int w = 0, w_x = 0, w_y = 0;
  bool alternating = false;
  bool reduced = false;
  bool split = false;
  Verdict verdict;
  std::vector<std::string> warnings;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Full analysis of one diagram. The forest is `spanning_forest(g, seed)`;
/// for reduced alternating diagrams the result does not depend on the seed.
inline InvariantReport chirality_verdict(const Diagram& d, std::uint64_t seed = 0) {
  const SeifertGraph g = build_seifert_graph(d);
  const SpanningForest f = spanning_forest(g, seed);
  const WritheSplit split = writhe_split(g, f);

  InvariantReport r;
  r.n = d.crossing_count();
  r.s = g.vertex_count();
  r.k = g.component_count();
  r.c = d.component_count();
  r.o = nullification_number(g);
  r.w = split.w;
  r.w_x = split.w_x;
  r.w_y = split.w_y;
  r.alternating = g.from_alternating();
  r.reduced = is_reduced(g);
  r.split = r.k > 1;

  if (r.alternating && r.reduced) {
    if (r.w_x != 0 || r.w_y != 0) r.verdict.reasons.push_back(ChiralityReason::nonzero_wx_wy);
    if (!r.split && r.c % 2 == 0) r.verdict.reasons.push_back(ChiralityReason::even_components);
  } else {
    if (!r.alternating) r.warnings.push_back("not_alternating");
    if (!r.reduced) r.warnings.push_back("not_reduced");
    r.warnings.push_back("not_invariant");
  }
  return r;
}

/// o = c - 1 (mod 2) for a connected diagram: each nullification changes the
/// component count by one and the process ends at a single component.
inline bool verify_parity_law(const Diagram& d) {
  const SeifertGraph g = build_seifert_graph(d);
  if (g.component_count() > 1)
    throw NotApplicableError("parity law needs a non-split diagram (k = " +
                             std::to_string(g.component_count()) + ")");
  return nullification_number(g) % 2 == (d.component_count() - 1) % 2;
}

struct MirrorCheck {
  WritheSplit original;
  WritheSplit mirrored;
  std::size_t o = 0;
  std::size_t o_mirror = 0;
  bool holds = false;

  explicit operator bool() const noexcept { return holds; }
};

/// Compares w_x, w_y, o of `d` and its mirror using the same crossings as the
/// remaining set on both sides.
inline MirrorCheck verify_mirror_antisymmetry(const Diagram& d, std::uint64_t seed = 0) {
  const SeifertGraph g = build_seifert_graph(d);
  const SeifertGraph gm = build_seifert_graph(mirror(d));
  const SpanningForest f = spanning_forest(g, seed);
  MirrorCheck m;
  m.original = writhe_split(g, f);
  m.o = nullification_number(g);
  m.o_mirror = nullification_number(gm);
  const bool corresponds = is_spanning_forest(gm, f);
  m.mirrored = writhe_split(gm, f);
  m.holds = corresponds && m.mirrored.w_x == -m.original.w_x &&
            m.mirrored.w_y == -m.original.w_y && m.o == m.o_mirror;
  return m;
}

}  // namespace nullwrithe
