#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimerk/errors.hpp"
#include "dimerk/multigraph.hpp"
#include "dimerk/polynomial.hpp"
#include "dimerk/structure.hpp"

namespace dimerk {

/// Splitting of the edges of a bridgeless graph into paths S_1..S_t. S_1 is
/// a closed path through vertex 0; each later S_j is a closed path through
/// its anchor or an open path whose two ends were already hit by earlier
/// sets.
struct PathDecomposition {
  std::vector<std::vector<int>> sets;   // edge ids in traversal order
  std::vector<std::vector<int>> walks;  // vertex sequence of each set, first to last
  std::vector<int> anchors;             // anchors[0] == 0

  std::vector<int> lengths() const {
    std::vector<int> out;
    for (const auto& s : sets) out.push_back(static_cast<int>(s.size()));
    return out;
  }

  /// Sum of floor(l_j / 2): the number of axes an embedding can open, since
  /// every new axis used along a path must be walked both ways.
  int ear_bound() const {
    int total = 0;
    for (const auto& s : sets) total += static_cast<int>(s.size()) / 2;
    return total;
  }
};

namespace detail {

// Depth-first search, edges in id order, for a path from `from` that ends on
// the first vertex in `stop` it reaches. Interior vertices are distinct and
// outside `stop`; edges marked used are skipped.
class PathFinder {
 public:
  PathFinder(const Multigraph& g, const std::vector<bool>& used, const std::vector<bool>& stop)
      : g_(g), used_(used), stop_(stop), on_path_(static_cast<std::size_t>(g.vertex_count()), false) {
    sorted_ = g.edges();
    std::sort(sorted_.begin(), sorted_.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });
  }

  bool search(int from) {
    vertices_ = {from};
    edges_.clear();
    on_path_[static_cast<std::size_t>(from)] = true;
    return descend(from);
  }

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<int>& edges() const { return edges_; }

 private:
  bool descend(int u) {
    for (const Edge& e : sorted_) {
      if (!e.touches(u) || used_[index_of(e.id)]) continue;
      if (std::find(edges_.begin(), edges_.end(), e.id) != edges_.end()) continue;
      const int w = e.other(u);
      if (stop_[static_cast<std::size_t>(w)]) {
        edges_.push_back(e.id);
        vertices_.push_back(w);
        return true;
      }
      if (on_path_[static_cast<std::size_t>(w)]) continue;
      on_path_[static_cast<std::size_t>(w)] = true;
      edges_.push_back(e.id);
      vertices_.push_back(w);
      if (descend(w)) return true;
      edges_.pop_back();
      vertices_.pop_back();
      on_path_[static_cast<std::size_t>(w)] = false;
    }
    return false;
  }

  std::size_t index_of(int id) const {
    const auto& all = g_.edges();
    return static_cast<std::size_t>(
        std::find_if(all.begin(), all.end(), [id](const Edge& e) { return e.id == id; }) - all.begin());
  }

  const Multigraph& g_;
  const std::vector<bool>& used_;
  const std::vector<bool>& stop_;
  std::vector<bool> on_path_;
  std::vector<Edge> sorted_;
  std::vector<int> vertices_;
  std::vector<int> edges_;
};

inline std::size_t edge_index(const Multigraph& g, int id) {
  const auto& all = g.edges();
  return static_cast<std::size_t>(
      std::find_if(all.begin(), all.end(), [id](const Edge& e) { return e.id == id; }) - all.begin());
}

}  // namespace detail

/// Deterministic decomposition guided by edge-id order: S_1 is the first
/// cycle through vertex 0 found by id-ordered depth-first search; each later
/// set starts at the lowest-id unused edge touching the covered vertices.
inline PathDecomposition path_decomposition(const Multigraph& g) {
  if (!is_nondegenerate(g)) throw std::invalid_argument("path decomposition needs a graph without free edges");
  const auto nv = static_cast<std::size_t>(g.vertex_count());
  PathDecomposition out;
  if (g.edge_count() == 0) return out;

  std::vector<bool> used(g.edges().size(), false);
  std::vector<bool> covered(nv, false);

  auto commit = [&](const std::vector<int>& edges, const std::vector<int>& walk, int anchor) {
    for (int id : edges) used[detail::edge_index(g, id)] = true;
    for (int v : walk) covered[static_cast<std::size_t>(v)] = true;
    out.sets.push_back(edges);
    out.walks.push_back(walk);
    out.anchors.push_back(anchor);
  };

  {
    std::vector<bool> stop(nv, false);
    stop[0] = true;
    detail::PathFinder finder(g, used, stop);
    if (!finder.search(0)) throw ConsistencyError("no closed path through vertex 0");
    commit(finder.edges(), finder.vertices(), 0);
  }

  std::vector<Edge> sorted = g.edges();
  std::sort(sorted.begin(), sorted.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });
  for (;;) {
    const Edge* start = nullptr;
    for (const Edge& e : sorted) {
      if (!used[detail::edge_index(g, e.id)] &&
          (covered[static_cast<std::size_t>(e.a)] || covered[static_cast<std::size_t>(e.b)])) {
        start = &e;
        break;
      }
    }
    if (!start) break;
    const int anchor = covered[static_cast<std::size_t>(start->a)] ? start->a : start->b;
    const int far = start->other(anchor);
    if (covered[static_cast<std::size_t>(far)]) {
      commit({start->id}, {anchor, far}, anchor);
      continue;
    }
    used[detail::edge_index(g, start->id)] = true;
    detail::PathFinder finder(g, used, covered);
    if (!finder.search(far)) throw ConsistencyError("ear from edge " + std::to_string(start->id) + " never returns");
    std::vector<int> edges{start->id};
    edges.insert(edges.end(), finder.edges().begin(), finder.edges().end());
    std::vector<int> walk{anchor};
    walk.insert(walk.end(), finder.vertices().begin(), finder.vertices().end());
    commit(edges, walk, anchor);
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw ConsistencyError("path decomposition left edges uncovered");
  }
  return out;
}

/// Independent validator: rebuilds every requirement from the edge sets and
/// anchors alone (the recorded walks are not trusted). Returns the list of
/// violations; empty means valid.
inline std::vector<std::string> check_path_decomposition(const Multigraph& g, const PathDecomposition& dec) {
  std::vector<std::string> problems;
  const auto nv = static_cast<std::size_t>(g.vertex_count());
  std::set<int> seen;
  std::vector<bool> hit_before(nv, false);
  if (dec.anchors.size() != dec.sets.size()) problems.push_back("anchor count differs from set count");

  for (std::size_t j = 0; j < dec.sets.size(); ++j) {
    const auto& set = dec.sets[j];
    const std::string tag = "S_" + std::to_string(j + 1);
    if (set.empty()) {
      problems.push_back(tag + " is empty");
      continue;
    }
    std::vector<int> degree(nv, 0);
    std::vector<Edge> sub;
    for (int id : set) {
      if (!g.has_edge(id)) {
        problems.push_back(tag + " names unknown edge " + std::to_string(id));
        continue;
      }
      if (!seen.insert(id).second) problems.push_back(tag + " reuses edge " + std::to_string(id));
      const Edge& e = g.edge(id);
      ++degree[static_cast<std::size_t>(e.a)];
      ++degree[static_cast<std::size_t>(e.b)];
      sub.push_back(e);
    }
    // Connectivity of the set's own edges, restricted to the vertices it hits.
    std::vector<int> touched;
    for (std::size_t v = 0; v < nv; ++v) {
      if (degree[v] > 0) touched.push_back(static_cast<int>(v));
    }
    if (!touched.empty()) {
      std::vector<bool> reach(nv, false);
      std::vector<int> stack{touched.front()};
      reach[static_cast<std::size_t>(touched.front())] = true;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const Edge& e : sub) {
          if (!e.touches(v)) continue;
          const int w = e.other(v);
          if (!reach[static_cast<std::size_t>(w)]) {
            reach[static_cast<std::size_t>(w)] = true;
            stack.push_back(w);
          }
        }
      }
      for (int v : touched) {
        if (!reach[static_cast<std::size_t>(v)]) problems.push_back(tag + " is not connected");
      }
    }
    std::vector<int> odd;
    for (int v : touched) {
      if (degree[static_cast<std::size_t>(v)] % 2) odd.push_back(v);
    }
    const int anchor = j < dec.anchors.size() ? dec.anchors[j] : -1;
    const bool anchor_ok = anchor >= 0 && anchor < g.vertex_count() && degree[static_cast<std::size_t>(anchor)] > 0;
    if (j == 0) {
      if (!odd.empty()) problems.push_back("S_1 is not a closed path");
      if (degree[0] == 0) problems.push_back("vertex 0 does not hit S_1");
      if (anchor != 0) problems.push_back("S_1 must be anchored at vertex 0");
    } else {
      if (!anchor_ok || !hit_before[static_cast<std::size_t>(anchor)]) {
        problems.push_back(tag + " anchor does not hit both the set and the earlier sets");
      }
      if (odd.size() == 2) {
        for (int v : odd) {
          if (!hit_before[static_cast<std::size_t>(v)]) problems.push_back(tag + " has an end off the earlier sets");
        }
      } else if (!odd.empty()) {
        problems.push_back(tag + " is neither a closed nor an open path");
      }
    }
    for (int v : touched) hit_before[static_cast<std::size_t>(v)] = true;
  }
  if (seen.size() != static_cast<std::size_t>(g.edge_count())) problems.push_back("sets do not cover every edge");
  return problems;
}

/// True iff degree(poly) <= sum of floor(l_j / 2). The zero polynomial passes.
inline bool verify_ear_degree_bound(const Multigraph& g, const PathDecomposition& dec, const DimPoly& poly) {
  std::size_t covered = 0;
  for (const auto& s : dec.sets) covered += s.size();
  if (covered != static_cast<std::size_t>(g.edge_count())) {
    throw std::invalid_argument("decomposition does not belong to this graph");
  }
  return poly.degree() <= dec.ear_bound();
}

/// Exponents are reported as powers of 1/d: W = sum_k C_k / d^k.
struct FormReport {
  std::string topology_hash;
  int n = 0;
  LaurentPoly laurent;
  std::optional<int> min_exponent;  // r
  std::optional<int> max_exponent;
  bool passes_form = false;
  bool passes_sum_bound = false;
};

/// Checks W = C_r/d^r + ... + C_{n-1}/d^{n-1} with r >= n/2.
inline FormReport verify_form(const LaurentPoly& w, int n, std::string topology_hash = {}) {
  FormReport report;
  report.topology_hash = std::move(topology_hash);
  report.n = n;
  report.laurent = w;
  if (w.is_zero()) {
    report.passes_form = report.passes_sum_bound = true;
    return report;
  }
  report.min_exponent = -*w.max_exponent();
  report.max_exponent = -*w.min_exponent();
  report.passes_sum_bound = 2 * *report.min_exponent >= n;
  report.passes_form = report.passes_sum_bound && *report.max_exponent <= n - 1;
  return report;
}

}  // namespace dimerk
