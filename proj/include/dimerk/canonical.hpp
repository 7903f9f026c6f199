#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dimerk/multigraph.hpp"

namespace dimerk {

namespace detail {

// Packed (min label, max label, kind); sorting a graph's packed edges gives
// its code under a labeling, and the lexicographically least code over all
// admissible labelings is the canonical one.
constexpr std::uint32_t pack_edge(int a, int b, int kind) noexcept {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint32_t>(a) << 16) | (static_cast<std::uint32_t>(b) << 4) |
         static_cast<std::uint32_t>(kind);
}

/// Colour refinement: starts from (root flag, degree) and repeatedly splits
/// colour classes by the multiset of neighbour colours. Colours are ranks of
/// isomorphism-invariant signatures, so every isomorphism maps a colour class
/// onto the class with the same colour.
inline std::vector<int> refine_colors(int vertex_count, std::span<const Edge> edges, bool rooted) {
  const auto n = static_cast<std::size_t>(vertex_count);
  std::vector<std::vector<int>> signature(n);
  for (std::size_t v = 0; v < n; ++v) signature[v] = {rooted && v == 0 ? 0 : 1, 0};
  for (const Edge& e : edges) {
    ++signature[static_cast<std::size_t>(e.a)][1];
    ++signature[static_cast<std::size_t>(e.b)][1];
  }

  std::vector<int> colors(n, 0);
  int classes = 0;
  for (;;) {
    std::vector<std::vector<int>> sorted = signature;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < n; ++v) {
      colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), signature[v]) -
                                   sorted.begin());
    }
    const int next_classes = static_cast<int>(sorted.size());
    if (next_classes == classes) break;
    classes = next_classes;

    for (std::size_t v = 0; v < n; ++v) signature[v] = {colors[v]};
    for (const Edge& e : edges) {
      signature[static_cast<std::size_t>(e.a)].push_back(colors[static_cast<std::size_t>(e.b)]);
      signature[static_cast<std::size_t>(e.b)].push_back(colors[static_cast<std::size_t>(e.a)]);
    }
    for (auto& s : signature) std::sort(s.begin() + 1, s.end());
  }
  return colors;
}

struct LabelingSearch {
  std::vector<int> relabel;  // old label -> new label
  std::vector<std::uint32_t> code;
  std::size_t optimal_count = 0;
};

/// Minimum code over every labeling that lists colour classes in colour
/// order. With kinds ignored, optimal_count is the automorphism group order.
class LabelingSearcher {
 public:
  LabelingSearcher(int vertex_count, std::span<const Edge> edges, bool rooted, bool keep_kinds)
      : edges_(edges), keep_kinds_(keep_kinds), relabel_(static_cast<std::size_t>(vertex_count)) {
    const auto colors = refine_colors(vertex_count, edges, rooted);
    const int classes = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    cells_.resize(static_cast<std::size_t>(classes));
    for (int v = 0; v < vertex_count; ++v) cells_[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])].push_back(v);
    int start = 0;
    for (const auto& cell : cells_) {
      starts_.push_back(start);
      start += static_cast<int>(cell.size());
    }
    scratch_.reserve(edges.size());
  }

  LabelingSearch run() {
    visit(0);
    return std::move(best_);
  }

 private:
  void visit(std::size_t cell_index) {
    if (cell_index == cells_.size()) {
      score();
      return;
    }
    std::vector<int> members = cells_[cell_index];
    const int start = starts_[cell_index];
    do {
      for (std::size_t i = 0; i < members.size(); ++i) {
        relabel_[static_cast<std::size_t>(members[i])] = start + static_cast<int>(i);
      }
      visit(cell_index + 1);
    } while (std::next_permutation(members.begin(), members.end()));
  }

  void score() {
    scratch_.clear();
    for (const Edge& e : edges_) {
      scratch_.push_back(pack_edge(relabel_[static_cast<std::size_t>(e.a)],
                                   relabel_[static_cast<std::size_t>(e.b)],
                                   keep_kinds_ ? static_cast<int>(e.kind) : 0));
    }
    std::sort(scratch_.begin(), scratch_.end());
    if (best_.optimal_count == 0 || scratch_ < best_.code) {
      best_.code = scratch_;
      best_.relabel = relabel_;
      best_.optimal_count = 1;
    } else if (scratch_ == best_.code) {
      ++best_.optimal_count;
    }
  }

  std::span<const Edge> edges_;
  bool keep_kinds_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> starts_;
  std::vector<int> relabel_;
  std::vector<std::uint32_t> scratch_;
  LabelingSearch best_;
};

inline std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf, 16);
}

}  // namespace detail

/// Isomorphism class of a multigraph under vertex relabeling and edge-kind
/// changes. `canonical` has every edge Solid and ids 0..m-1 in code order.
struct Topology {
  Multigraph canonical;
  std::size_t automorphism_count = 1;
  std::string code;  // e.g. "3:0-1,0-1,1-2"
  std::string hash;  // 64-bit FNV-1a of `code`, hex

  int edge_count() const noexcept { return canonical.edge_count(); }
  int vertex_count() const noexcept { return canonical.vertex_count(); }

  friend bool operator==(const Topology& x, const Topology& y) { return x.code == y.code; }
};

namespace detail {

inline std::string code_string(int vertex_count, std::span<const std::uint32_t> code) {
  std::string s = std::to_string(vertex_count) + ":";
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(code[i] >> 16) + "-" + std::to_string((code[i] >> 4) & 0xfff);
  }
  return s;
}

}  // namespace detail

/// Canonical form of a raw edge list; rejects disconnected or looped input.
inline Topology canonicalize(int vertex_count, std::span<const Edge> edges) {
  if (!is_connected(vertex_count, edges)) throw std::invalid_argument("cannot canonicalize a disconnected graph");
  for (const Edge& e : edges) {
    if (e.a == e.b) throw std::invalid_argument("cannot canonicalize a graph with a self-loop");
  }
  auto best = detail::LabelingSearcher(vertex_count, edges, /*rooted=*/false, /*keep_kinds=*/false).run();
  std::vector<Edge> canonical_edges;
  canonical_edges.reserve(best.code.size());
  int id = 0;
  for (std::uint32_t packed : best.code) {
    canonical_edges.push_back(Edge{static_cast<int>(packed >> 16), static_cast<int>((packed >> 4) & 0xfff),
                                   EdgeKind::Solid, id++});
  }
  std::string code = detail::code_string(vertex_count, best.code);
  std::string hash = detail::fnv1a_hex(code);
  return Topology{Multigraph(vertex_count, std::move(canonical_edges)), best.optimal_count, std::move(code),
                  std::move(hash)};
}

inline Topology canonicalize(const Multigraph& g) { return canonicalize(g.vertex_count(), g.edges()); }

inline std::string topology_hash(const Multigraph& g) { return canonicalize(g).hash; }

/// Relabels vertices canonically while keeping vertex 0 in place. Edge kinds
/// and ids are preserved; edges are listed in code order. Graphs that agree
/// up to a kind-preserving isomorphism fixing vertex 0 relabel to the same
/// vertex/kind structure.
inline Multigraph relabel_rooted(const Multigraph& g) {
  auto best = detail::LabelingSearcher(g.vertex_count(), g.edges(), /*rooted=*/true, /*keep_kinds=*/true).run();
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    int a = best.relabel[static_cast<std::size_t>(e.a)];
    int b = best.relabel[static_cast<std::size_t>(e.b)];
    if (a > b) std::swap(a, b);
    edges.push_back(Edge{a, b, e.kind, e.id});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    const auto px = detail::pack_edge(x.a, x.b, static_cast<int>(x.kind));
    const auto py = detail::pack_edge(y.a, y.b, static_cast<int>(y.kind));
    return px != py ? px < py : x.id < y.id;
  });
  return Multigraph(g.vertex_count(), std::move(edges));
}

}  // namespace dimerk
