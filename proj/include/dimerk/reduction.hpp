#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dimerk/canonical.hpp"
#include "dimerk/errors.hpp"
#include "dimerk/multigraph.hpp"
#include "dimerk/rational.hpp"
#include "dimerk/structure.hpp"

namespace dimerk {

/// False when a Dashed edge lies on a closed loop: such graphs vanish as
/// N -> infinity. Dashed bridges are kept; the reduction deals with them.
inline bool survives_loop_filter(const Multigraph& g) {
  const auto free = bridges(g);
  for (const Edge& e : g.edges()) {
    if (e.kind == EdgeKind::Dashed && !std::binary_search(free.begin(), free.end(), e.id)) return false;
  }
  return true;
}

/// The one kind assignment of a topology that survives both the loop filter
/// and the bridge summation: loop edges Solid, bridges Wavy.
inline Multigraph prepare_for_reduction(const Multigraph& g) {
  const auto free = bridges(g);
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    e.kind = std::binary_search(free.begin(), free.end(), e.id) ? EdgeKind::Wavy : EdgeKind::Solid;
  }
  return Multigraph(g.vertex_count(), std::move(edges));
}

/// A float vertex landing on a ground vertex. At least one pair, injective.
struct MatchingPattern {
  std::vector<std::pair<int, int>> pairs;  // (float vertex, ground vertex), sorted by float vertex

  friend bool operator==(const MatchingPattern&, const MatchingPattern&) = default;
};

/// Every nonempty partial injective map from float vertices to ground
/// vertices, in a fixed order.
inline std::vector<MatchingPattern> enumerate_matchings(const GroundFloatSplit& split) {
  std::vector<MatchingPattern> out;
  std::vector<std::pair<int, int>> current;
  std::vector<bool> used(split.ground_vertices.size(), false);
  auto visit = [&](auto&& self, std::size_t index) -> void {
    if (index == split.float_vertices.size()) {
      if (!current.empty()) out.push_back(MatchingPattern{current});
      return;
    }
    self(self, index + 1);
    for (std::size_t g = 0; g < split.ground_vertices.size(); ++g) {
      if (used[g]) continue;
      used[g] = true;
      current.emplace_back(split.float_vertices[index], split.ground_vertices[g]);
      self(self, index + 1);
      current.pop_back();
      used[g] = false;
    }
  };
  visit(visit, 0);
  return out;
}

/// One matching of a free-edge reduction. `graph` is empty when the matching
/// puts the free edge's two ends on one site (coefficient 0).
struct MergeTerm {
  Rational coefficient;
  MatchingPattern pattern;
  std::optional<Multigraph> graph;
};

namespace detail {

inline void require_reducible(const Multigraph& g) {
  const auto free = bridges(g);
  for (const Edge& e : g.edges()) {
    const bool is_free = std::binary_search(free.begin(), free.end(), e.id);
    if (!is_free && e.kind != EdgeKind::Solid) {
      throw std::invalid_argument("loop edge " + std::to_string(e.id) + " is not Solid");
    }
    if (is_free && e.kind != EdgeKind::Wavy) {
      throw std::invalid_argument("free edge " + std::to_string(e.id) + " is not Wavy");
    }
  }
}

// Wavy edges that now lie on a loop: their dashed half is a dashed loop edge
// and vanishes, so only the solid half survives.
inline Multigraph solidify_loop_edges(const Multigraph& g) {
  const auto free = bridges(g);
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    if (e.kind == EdgeKind::Wavy && !std::binary_search(free.begin(), free.end(), e.id)) e.kind = EdgeKind::Solid;
  }
  return Multigraph(g.vertex_count(), std::move(edges));
}

}  // namespace detail

/// Replaces the sum over the float's offset by minus the sum over all ways
/// the float can bump into the ground. Each matched float vertex is
/// identified with its ground partner, the free edge becomes Solid, and any
/// Wavy edge closed into a loop becomes Solid. Output graphs are relabeled
/// canonically with vertex 0 fixed; edge ids are kept.
inline std::vector<MergeTerm> reduce_free_edge(const Multigraph& g, int free_edge) {
  const GroundFloatSplit split = ground_float_split(g, free_edge);
  const auto free = bridges(g);
  for (const Edge& e : g.edges()) {
    if (e.kind != EdgeKind::Solid && !std::binary_search(free.begin(), free.end(), e.id)) {
      throw std::invalid_argument("loop edge " + std::to_string(e.id) + " is not Solid");
    }
  }
  if (g.edge(free_edge).kind != EdgeKind::Wavy) {
    throw std::invalid_argument("free edge " + std::to_string(free_edge) + " is not Wavy");
  }

  std::vector<MergeTerm> out;
  for (MatchingPattern& pattern : enumerate_matchings(split)) {
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v : split.ground_vertices) label[static_cast<std::size_t>(v)] = next++;
    for (int v : split.float_vertices) {
      auto hit = std::find_if(pattern.pairs.begin(), pattern.pairs.end(),
                              [v](const auto& p) { return p.first == v; });
      label[static_cast<std::size_t>(v)] =
          hit != pattern.pairs.end() ? label[static_cast<std::size_t>(hit->second)] : next++;
    }

    std::vector<Edge> edges;
    bool self_loop = false;
    for (const Edge& e : g.edges()) {
      Edge merged{label[static_cast<std::size_t>(e.a)], label[static_cast<std::size_t>(e.b)], e.kind, e.id};
      if (merged.a == merged.b) self_loop = true;
      if (e.id == free_edge) merged.kind = EdgeKind::Solid;
      edges.push_back(merged);
    }
    if (self_loop) {
      out.push_back(MergeTerm{Rational(0), std::move(pattern), std::nullopt});
      continue;
    }
    Multigraph merged(next, std::move(edges));
    out.push_back(MergeTerm{Rational(-1), std::move(pattern), relabel_rooted(detail::solidify_loop_edges(merged))});
  }
  return out;
}

/// All-solid nondegenerate graph with its signed coefficient (-1)^steps.
struct SignedGraphTerm {
  Rational coefficient;
  Multigraph graph;
  int steps = 0;
};

enum class BridgeOrder { LowestIdFirst, HighestIdFirst };

struct ReductionResult {
  std::vector<SignedGraphTerm> terms;
  std::size_t zero_weight_terms = 0;  // matchings dropped for a self-loop
};

/// Applies reduce_free_edge until no free edge is left. Input must have
/// Solid loop edges and Wavy bridges. Each step removes at least one vertex,
/// which bounds the recursion depth by the vertex count.
inline ReductionResult reduce_to_nondegenerate(const Multigraph& g,
                                               BridgeOrder order = BridgeOrder::LowestIdFirst) {
  detail::require_reducible(g);
  ReductionResult result;
  auto expand = [&](auto&& self, const Multigraph& current, const Rational& coefficient, int steps) -> void {
    const auto free = bridges(current);
    if (free.empty()) {
      result.terms.push_back(SignedGraphTerm{coefficient, current, steps});
      return;
    }
    if (steps >= g.vertex_count()) throw ConsistencyError("reduction exceeded its step budget");
    const int edge = order == BridgeOrder::LowestIdFirst ? free.front() : free.back();
    for (const MergeTerm& term : reduce_free_edge(current, edge)) {
      if (!term.graph) {
        ++result.zero_weight_terms;
        continue;
      }
      if (term.graph->vertex_count() >= current.vertex_count()) {
        throw ConsistencyError("merge did not remove a vertex");
      }
      self(self, *term.graph, coefficient * term.coefficient, steps + 1);
    }
  };
  expand(expand, g, Rational(1), 0);
  return result;
}

}  // namespace dimerk
