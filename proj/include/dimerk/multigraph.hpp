#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dimerk {

/// Solid edges carry the dimer weight 1/(2d) and a nearest-neighbour
/// constraint; dashed edges carry the uniform weight -1/(N-1). Wavy marks a
/// free edge whose two kinds are summed together during reduction.
enum class EdgeKind { Solid, Dashed, Wavy };

constexpr std::string_view to_string(EdgeKind kind) noexcept {
  switch (kind) {
    case EdgeKind::Solid: return "solid";
    case EdgeKind::Dashed: return "dashed";
    case EdgeKind::Wavy: return "wavy";
  }
  return "solid";
}

inline EdgeKind parse_edge_kind(std::string_view name) {
  if (name == "solid") return EdgeKind::Solid;
  if (name == "dashed") return EdgeKind::Dashed;
  if (name == "wavy") return EdgeKind::Wavy;
  throw std::invalid_argument("unknown edge kind '" + std::string(name) + "'");
}

struct Edge {
  int a = 0;
  int b = 0;
  EdgeKind kind = EdgeKind::Solid;
  int id = 0;

  constexpr int other(int v) const noexcept { return v == a ? b : a; }
  constexpr bool touches(int v) const noexcept { return v == a || v == b; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertices reachable from `start` without traversing the edge with id `skip_id`.
inline std::vector<bool> reachable(int vertex_count, std::span<const Edge> edges, int start,
                                   int skip_id = -1) {
  std::vector<bool> seen(static_cast<std::size_t>(vertex_count), false);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const Edge& e : edges) {
      if (e.id == skip_id || !e.touches(v)) continue;
      const int w = e.other(v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

inline bool is_connected(int vertex_count, std::span<const Edge> edges, int skip_id = -1) {
  if (vertex_count <= 0) return false;
  const auto seen = reachable(vertex_count, edges, 0, skip_id);
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

/// Connected loopless multigraph on vertices 0..vertex_count-1. Vertex 0 is
/// the pinned vertex of every lattice sum. Edge ids are unique and survive
/// every transformation in the library, so an edge can be followed through
/// merges and relabelings.
class Multigraph {
 public:
  Multigraph(int vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {
    validate();
  }

  /// Edges get ids 0..m-1 in the order given.
  static Multigraph from_pairs(int vertex_count, std::span<const std::pair<int, int>> pairs,
                               EdgeKind kind = EdgeKind::Solid) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    int id = 0;
    for (auto [a, b] : pairs) edges.push_back(Edge{a, b, kind, id++});
    return Multigraph(vertex_count, std::move(edges));
  }

  static Multigraph from_pairs(int vertex_count,
                               std::initializer_list<std::pair<int, int>> pairs,
                               EdgeKind kind = EdgeKind::Solid) {
    return from_pairs(vertex_count, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()),
                      kind);
  }

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(int id) const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [id](const Edge& e) { return e.id == id; });
  }

  const Edge& edge(int id) const {
    auto it = std::find_if(edges_.begin(), edges_.end(), [id](const Edge& e) { return e.id == id; });
    if (it == edges_.end()) throw std::invalid_argument("no edge with id " + std::to_string(id));
    return *it;
  }

  bool all_of_kind(EdgeKind kind) const noexcept {
    return std::all_of(edges_.begin(), edges_.end(), [kind](const Edge& e) { return e.kind == kind; });
  }

  Multigraph with_kind(int id, EdgeKind kind) const {
    (void)edge(id);
    std::vector<Edge> edges = edges_;
    for (Edge& e : edges) {
      if (e.id == id) e.kind = kind;
    }
    return Multigraph(vertex_count_, std::move(edges));
  }

  Multigraph with_all_kinds(EdgeKind kind) const {
    std::vector<Edge> edges = edges_;
    for (Edge& e : edges) e.kind = kind;
    return Multigraph(vertex_count_, std::move(edges));
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count_), 0);
    for (const Edge& e : edges_) {
      ++deg[static_cast<std::size_t>(e.a)];
      ++deg[static_cast<std::size_t>(e.b)];
    }
    return deg;
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  void validate() const {
    if (vertex_count_ < 1) throw std::invalid_argument("multigraph needs at least one vertex");
    if (vertex_count_ > edge_count() + 1) {
      throw std::invalid_argument("multigraph has more vertices than edges + 1");
    }
    std::vector<int> ids;
    ids.reserve(edges_.size());
    for (const Edge& e : edges_) {
      if (e.a < 0 || e.b < 0 || e.a >= vertex_count_ || e.b >= vertex_count_) {
        throw std::invalid_argument("edge " + std::to_string(e.id) + " has an endpoint out of range");
      }
      if (e.a == e.b) {
        throw std::invalid_argument("edge " + std::to_string(e.id) + " is a self-loop");
      }
      ids.push_back(e.id);
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      throw std::invalid_argument("duplicate edge id");
    }
    if (!is_connected(vertex_count_, edges_)) throw std::invalid_argument("multigraph is disconnected");
  }

  int vertex_count_;
  std::vector<Edge> edges_;
};

}  // namespace dimerk
