#pragma once

// Seifert smoothing and the signed Seifert multigraph.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nullwrithe/diagram.hpp"
#include "nullwrithe/errors.hpp"

namespace nullwrithe {

struct SeifertCircle {
  std::size_t id = 0;
  std::vector<ArcId> arcs;  // empty for a crossingless component
};

/// One connection: the edge contributed by a crossing.
struct SeifertEdge {
  std::size_t crossing = 0;
  std::size_t u = 0;  // circle through the incoming under arc
  std::size_t v = 0;  // circle through the incoming over arc
  Sign sign = Sign::positive;

  std::size_t other(std::size_t x) const noexcept { return x == u ? v : u; }
};

/// Signed multigraph with one vertex per Seifert circle and one edge per
/// crossing. Edge i belongs to crossing i.
class SeifertGraph {
 public:
  SeifertGraph(std::size_t vertex_count, std::vector<SeifertEdge> edges, bool from_alternating)
      : vertex_count_(vertex_count),
        edges_(std::move(edges)),
        from_alternating_(from_alternating),
        incident_(vertex_count),
        component_(vertex_count) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const SeifertEdge& edge = edges_[e];
      if (edge.u >= vertex_count_ || edge.v >= vertex_count_)
        throw LoopEdgeError("edge endpoint out of range");
      if (edge.u == edge.v)
        throw LoopEdgeError("crossing " + std::to_string(edge.crossing + 1) +
                            " joins Seifert circle " + std::to_string(edge.u) +
                            " to itself; the code is not a coherent oriented diagram");
      incident_[edge.u].push_back(e);
      incident_[edge.v].push_back(e);
    }
    label_components();
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<SeifertEdge>& edges() const noexcept { return edges_; }
  const SeifertEdge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_.at(v); }

  std::size_t component_count() const noexcept { return component_count_; }
  std::size_t component_of(std::size_t v) const { return component_.at(v); }

  /// Whether the source diagram was alternating. The verifiers that only
  /// make sense for alternating diagrams consult this.
  bool from_alternating() const noexcept { return from_alternating_; }

 private:
  void label_components() {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::fill(component_.begin(), component_.end(), unset);
    component_count_ = 0;
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < vertex_count_; ++root) {
      if (component_[root] != unset) continue;
      component_[root] = component_count_;
      stack.push_back(root);
      while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t e : incident_[x]) {
          const std::size_t y = edges_[e].other(x);
          if (component_[y] == unset) {
            component_[y] = component_count_;
            stack.push_back(y);
          }
        }
      }
      ++component_count_;
    }
  }

  std::size_t vertex_count_ = 0;
  std::vector<SeifertEdge> edges_;
  bool from_alternating_ = false;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::size_t> component_;
  std::size_t component_count_ = 0;
};

/// Cycles of the smoothing successor map under_in -> over_out,
/// over_in -> under_out, followed by one empty circle per free loop.
inline std::vector<SeifertCircle> seifert_circles(const Diagram& d) {
  std::vector<ArcId> next(d.arc_count());
  for (const Crossing& x : d.crossings()) {
    next[x.under_in.index] = x.over_out;
    next[x.over_in.index] = x.under_out;
  }
  std::vector<bool> seen(d.arc_count(), false);
  std::vector<SeifertCircle> circles;
  for (std::uint32_t start = 0; start < d.arc_count(); ++start) {
    if (seen[start]) continue;
    SeifertCircle c{circles.size(), {}};
    for (ArcId a{start}; !seen[a.index]; a = next[a.index]) {
      seen[a.index] = true;
      c.arcs.push_back(a);
    }
    circles.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < d.free_loops(); ++i) circles.push_back(SeifertCircle{circles.size(), {}});
  return circles;
}

inline SeifertGraph build_seifert_graph(const Diagram& d) {
  const auto circles = seifert_circles(d);
  std::vector<std::size_t> circle_of(d.arc_count());
  for (const SeifertCircle& c : circles)
    for (ArcId a : c.arcs) circle_of[a.index] = c.id;
  std::vector<SeifertEdge> edges;
  edges.reserve(d.crossing_count());
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const Crossing& x = d.crossings()[i];
    edges.push_back(SeifertEdge{i, circle_of[x.under_in.index], circle_of[x.over_in.index], x.sign});
  }
  return SeifertGraph(circles.size(), std::move(edges), is_alternating(d));
}

/// k, the number of connected components.
inline std::size_t split_components(const SeifertGraph& g) { return g.component_count(); }

/// Edges whose removal increases the component count. Parallel edges are
/// never bridges because the DFS skips only the tree edge's own id.
inline std::vector<std::size_t> bridges(const SeifertGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, unset), low(n, 0);
  std::vector<std::size_t> out;
  std::size_t clock = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t via_edge;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != unset) continue;
    order[root] = low[root] = clock++;
    stack.push_back(Frame{root, unset});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.vertex);
      if (f.next < inc.size()) {
        const std::size_t e = inc[f.next++];
        if (e == f.via_edge) continue;
        const std::size_t y = g.edge(e).other(f.vertex);
        if (order[y] == unset) {
          order[y] = low[y] = clock++;
          stack.push_back(Frame{y, e});
        } else {
          low[f.vertex] = std::min(low[f.vertex], order[y]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.vertex] = std::min(low[parent.vertex], low[done.vertex]);
          if (low[done.vertex] > order[parent.vertex]) out.push_back(done.via_edge);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// No nugatory crossing: the graph has no bridge.
inline bool is_reduced(const SeifertGraph& g) { return bridges(g).empty(); }

/// Edges grouped by unordered endpoint pair, in order of first appearance.
inline std::vector<std::vector<std::size_t>> parallel_classes(const SeifertGraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    const auto key = std::minmax(edge.u, edge.v);
    auto [it, inserted] = slot.emplace(std::pair{key.first, key.second}, out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(e);
  }
  return out;
}

/// Debug dump: header line, then `u v sign` per edge in crossing order.
inline std::string to_adjacency_text(const SeifertGraph& g) {
  std::ostringstream os;
  os << "# seifert graph: s=" << g.vertex_count() << " n=" << g.edge_count()
     << " k=" << g.component_count() << '\n';
  for (const auto& e : g.edges())
    os << e.u << ' ' << e.v << ' ' << (e.sign == Sign::positive ? '+' : '-') << '\n';
  return os.str();
}

}  // namespace nullwrithe
