#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimerk/multigraph.hpp"

namespace dimerk {

/// Ids of the free edges: those lying in no closed loop. Parallel edges
/// close a 2-loop, so they are never bridges. Result is sorted.
inline std::vector<int> bridges(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<const Edge*>> incident(n);
  for (const Edge& e : g.edges()) {
    incident[static_cast<std::size_t>(e.a)].push_back(&e);
    incident[static_cast<std::size_t>(e.b)].push_back(&e);
  }

  // Tarjan low-link; the tree edge is skipped by id, not by endpoint.
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> found;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int via_id) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    for (const Edge* e : incident[static_cast<std::size_t>(u)]) {
      if (e->id == via_id) continue;
      const int w = e->other(u);
      if (disc[static_cast<std::size_t>(w)] < 0) {
        dfs(w, e->id);
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] > disc[static_cast<std::size_t>(u)]) found.push_back(e->id);
      } else {
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
      }
    }
  };
  dfs(0, -1);
  std::sort(found.begin(), found.end());
  return found;
}

inline bool is_bridge(const Multigraph& g, int edge_id) {
  const Edge& e = g.edge(edge_id);
  return !reachable(g.vertex_count(), g.edges(), e.a, edge_id)[static_cast<std::size_t>(e.b)];
}

/// Nondegenerate: every edge lies in some closed loop.
inline bool is_nondegenerate(const Multigraph& g) { return bridges(g).empty(); }

/// Partition of the vertices by a free edge: the ground stays connected to
/// vertex 0 once the edge is removed, the float does not.
struct GroundFloatSplit {
  int free_edge = -1;
  std::vector<int> ground_vertices;  // sorted, contains 0
  std::vector<int> float_vertices;   // sorted, nonempty
  int ground_anchor = -1;
  int float_anchor = -1;
};

inline GroundFloatSplit ground_float_split(const Multigraph& g, int free_edge) {
  const Edge& e = g.edge(free_edge);
  const auto seen = reachable(g.vertex_count(), g.edges(), 0, free_edge);
  if (seen[static_cast<std::size_t>(e.a)] == seen[static_cast<std::size_t>(e.b)]) {
    throw std::invalid_argument("edge " + std::to_string(free_edge) + " is not a free edge");
  }
  GroundFloatSplit split;
  split.free_edge = free_edge;
  for (int v = 0; v < g.vertex_count(); ++v) {
    (seen[static_cast<std::size_t>(v)] ? split.ground_vertices : split.float_vertices).push_back(v);
  }
  split.ground_anchor = seen[static_cast<std::size_t>(e.a)] ? e.a : e.b;
  split.float_anchor = e.other(split.ground_anchor);
  return split;
}

}  // namespace dimerk
