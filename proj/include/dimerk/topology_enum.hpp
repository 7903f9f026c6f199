#pragma once

#include <chrono>
#include <ctime>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dimerk/canonical.hpp"
#include "dimerk/errors.hpp"
#include "dimerk/multigraph.hpp"
#include "dimerk/version.hpp"

namespace dimerk {

inline constexpr int kMaxCatalogEdges = 7;

/// Every connected loopless multigraph with n edges, up to isomorphism,
/// sorted by hash.
struct TopologyCatalog {
  int n = 0;
  std::vector<Topology> entries;
  std::string generated_at;
  std::string generator_version;
};

namespace detail {

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline void merge_unique(std::map<std::string, Topology>& into, Topology t) {
  auto [it, inserted] = into.try_emplace(t.hash, t);
  if (!inserted && it->second.code != t.code) {
    throw ConsistencyError("topology hash collision: " + it->second.code + " vs " + t.code);
  }
}

/// Edge multisets over the unordered pairs of `v` labelled vertices with total
/// multiplicity n. Only labelings whose degree sequence is non-increasing are
/// kept: every isomorphism class has one, and it prunes most relabeled copies
/// before the expensive canonical search.
class MultisetEnumerator {
 public:
  MultisetEnumerator(int n, int v) : n_(n), v_(v), degree_(static_cast<std::size_t>(v), 0) {
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) pairs_.emplace_back(a, b);
    }
    multiplicity_.assign(pairs_.size(), 0);
  }

  std::map<std::string, Topology> run() {
    visit(0, n_);
    return std::move(found_);
  }

 private:
  void visit(std::size_t pair_index, int remaining) {
    if (remaining == 0) {
      accept();
      return;
    }
    if (pair_index == pairs_.size()) return;
    const auto [a, b] = pairs_[pair_index];
    for (int m = remaining; m >= 0; --m) {
      multiplicity_[pair_index] = m;
      degree_[static_cast<std::size_t>(a)] += m;
      degree_[static_cast<std::size_t>(b)] += m;
      visit(pair_index + 1, remaining - m);
      degree_[static_cast<std::size_t>(a)] -= m;
      degree_[static_cast<std::size_t>(b)] -= m;
    }
    multiplicity_[pair_index] = 0;
  }

  void accept() {
    for (int x = 0; x < v_; ++x) {
      if (degree_[static_cast<std::size_t>(x)] == 0) return;
      if (x > 0 && degree_[static_cast<std::size_t>(x)] > degree_[static_cast<std::size_t>(x - 1)]) return;
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n_));
    int id = 0;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      for (int k = 0; k < multiplicity_[p]; ++k) edges.push_back(Edge{pairs_[p].first, pairs_[p].second, EdgeKind::Solid, id++});
    }
    if (!is_connected(v_, edges)) return;
    merge_unique(found_, canonicalize(v_, edges));
  }

  int n_;
  int v_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> multiplicity_;
  std::vector<int> degree_;
  std::map<std::string, Topology> found_;
};

}  // namespace detail

/// Vertex counts 2..n+1 are enumerated independently (in parallel when
/// jobs > 1) and merged by hash, so the result does not depend on `jobs`.
inline TopologyCatalog enumerate_topologies(int n, int jobs = 1) {
  if (n < 1 || n > kMaxCatalogEdges) {
    throw std::invalid_argument("edge count must be in 1.." + std::to_string(kMaxCatalogEdges));
  }
  std::map<std::string, Topology> merged;
  if (jobs <= 1) {
    for (int v = 2; v <= n + 1; ++v) {
      for (auto& [h, t] : detail::MultisetEnumerator(n, v).run()) detail::merge_unique(merged, std::move(t));
    }
  } else {
    std::vector<std::future<std::map<std::string, Topology>>> parts;
    for (int v = 2; v <= n + 1; ++v) {
      parts.push_back(std::async(std::launch::async, [n, v] { return detail::MultisetEnumerator(n, v).run(); }));
    }
    for (auto& part : parts) {
      for (auto& [h, t] : part.get()) detail::merge_unique(merged, std::move(t));
    }
  }
  TopologyCatalog catalog;
  catalog.n = n;
  catalog.entries.reserve(merged.size());
  for (auto& [h, t] : merged) catalog.entries.push_back(std::move(t));
  catalog.generated_at = detail::utc_timestamp();
  catalog.generator_version = std::string(kGeneratorVersion);
  return catalog;
}

/// The 2^n Solid/Dashed colourings of a topology. Entry `mask` has edge id k
/// Dashed iff bit k of mask is set, so entry 0 is all Solid.
inline std::vector<Multigraph> kind_assignments(const Topology& t) {
  const int n = t.edge_count();
  if (n > 20) throw std::invalid_argument("too many edges for kind enumeration");
  std::vector<Multigraph> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Edge> edges = t.canonical.edges();
    for (Edge& e : edges) e.kind = (mask >> e.id) & 1u ? EdgeKind::Dashed : EdgeKind::Solid;
    out.emplace_back(t.vertex_count(), std::move(edges));
  }
  return out;
}

}  // namespace dimerk
