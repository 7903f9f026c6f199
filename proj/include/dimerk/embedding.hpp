#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dimerk/canonical.hpp"
#include "dimerk/errors.hpp"
#include "dimerk/multigraph.hpp"
#include "dimerk/polynomial.hpp"
#include "dimerk/version.hpp"

namespace dimerk {

namespace detail {

inline bool is_bipartite(const Multigraph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> stack{0};
  side[0] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const Edge& e : g.edges()) {
      if (!e.touches(v)) continue;
      const int w = e.other(v);
      auto& sw = side[static_cast<std::size_t>(w)];
      if (sw < 0) {
        sw = 1 - side[static_cast<std::size_t>(v)];
        stack.push_back(w);
      } else if (sw == side[static_cast<std::size_t>(v)]) {
        return false;
      }
    }
  }
  return true;
}

/// Depth-first placement along a BFS spanning tree rooted at vertex 0. Each
/// tree edge picks one of the 2d unit steps; every other edge is checked as
/// a unit-distance constraint once both ends are placed; distinctness is
/// checked as each vertex lands.
class EmbeddingWalker {
 public:
  EmbeddingWalker(const Multigraph& g, int d) : d_(d), v_(g.vertex_count()) {
    const auto n = static_cast<std::size_t>(v_);
    std::vector<int> position(n, -1);
    order_.push_back(0);
    position[0] = 0;
    parent_.push_back(-1);
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const int u = order_[head];
      for (const Edge& e : g.edges()) {
        if (!e.touches(u)) continue;
        const int w = e.other(u);
        if (position[static_cast<std::size_t>(w)] >= 0) continue;
        position[static_cast<std::size_t>(w)] = static_cast<int>(order_.size());
        order_.push_back(w);
        parent_.push_back(static_cast<int>(head));
      }
    }
    checks_.resize(n);
    for (const Edge& e : g.edges()) {
      const int pa = position[static_cast<std::size_t>(e.a)];
      const int pb = position[static_cast<std::size_t>(e.b)];
      const int later = std::max(pa, pb);
      const int earlier = std::min(pa, pb);
      if (parent_[static_cast<std::size_t>(later)] == earlier) continue;  // satisfied by construction
      checks_[static_cast<std::size_t>(later)].push_back(earlier);
    }
    coords_.assign(n * static_cast<std::size_t>(d), 0);
  }

  std::uint64_t count() {
    if (v_ == 1) return 1;
    // Signed axis permutations fix the origin and act transitively on the
    // 2d unit steps, so the first step may be pinned to +e_1.
    total_ = 0;
    place_step(1, 0, +1);
    if (admissible(1)) descend(2);
    return 2ULL * static_cast<std::uint64_t>(d_) * total_;
  }

 private:
  int* at(int slot) { return coords_.data() + static_cast<std::ptrdiff_t>(slot) * d_; }

  void place_step(int slot, int axis, int sign) {
    const int* from = at(parent_[static_cast<std::size_t>(slot)]);
    int* to = at(slot);
    for (int k = 0; k < d_; ++k) to[k] = from[k];
    to[axis] += sign;
  }

  bool admissible(int slot) {
    const int* p = at(slot);
    for (int s = 0; s < slot; ++s) {
      const int* q = at(s);
      bool same = true;
      for (int k = 0; k < d_ && same; ++k) same = p[k] == q[k];
      if (same) return false;
    }
    for (int s : checks_[static_cast<std::size_t>(slot)]) {
      const int* q = at(s);
      int l1 = 0;
      for (int k = 0; k < d_ && l1 <= 1; ++k) l1 += std::abs(p[k] - q[k]);
      if (l1 != 1) return false;
    }
    return true;
  }

  void descend(int slot) {
    if (slot == v_) {
      ++total_;
      return;
    }
    for (int axis = 0; axis < d_; ++axis) {
      for (int sign : {+1, -1}) {
        place_step(slot, axis, sign);
        if (admissible(slot)) descend(slot + 1);
      }
    }
  }

  int d_;
  int v_;
  std::vector<int> order_;
  std::vector<int> parent_;               // slot -> parent slot
  std::vector<std::vector<int>> checks_;  // slot -> earlier slots at unit distance
  std::vector<int> coords_;
  std::uint64_t total_ = 0;
};

}  // namespace detail

/// Number of maps of the vertices into Z^d with vertex 0 at the origin, all
/// images distinct and every edge joining nearest neighbours. Every edge
/// must be Solid.
inline std::uint64_t count_embeddings(const Multigraph& g, int d) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (!g.all_of_kind(EdgeKind::Solid)) {
    throw std::invalid_argument("embedding counts are defined for all-solid graphs only");
  }
  if (!detail::is_bipartite(g)) return 0;
  return detail::EmbeddingWalker(g, d).count();
}

using CountFunction = std::function<std::uint64_t(int d)>;

/// Interpolates the count as a polynomial of degree <= m (m = edge count)
/// from d = 1..m+1 and checks it against `check` at d = m+2 and m+3. A miss
/// means the degree hypothesis failed and raises ConsistencyError.
inline DimPoly embedding_polynomial(const Multigraph& g, const CountFunction& sample,
                                    const CountFunction& check) {
  if (!g.all_of_kind(EdgeKind::Solid)) {
    throw std::invalid_argument("embedding polynomials are defined for all-solid graphs only");
  }
  const int m = g.edge_count();
  std::vector<std::pair<Rational, Rational>> points;
  for (int d = 1; d <= m + 1; ++d) points.emplace_back(Rational(d), Rational(sample(d)));
  DimPoly poly = DimPoly::interpolate(points);
  for (int d = m + 2; d <= m + 3; ++d) {
    const Rational expected(check(d));
    if (poly(Rational(d)) != expected) {
      throw ConsistencyError("embedding polynomial of " + canonicalize(g).code + " predicts " +
                             to_string(poly(Rational(d))) + " at d = " + std::to_string(d) +
                             " but brute force gives " + to_string(expected));
    }
  }
  return poly;
}

inline DimPoly embedding_polynomial(const Multigraph& g) {
  auto brute = [&g](int d) { return count_embeddings(g, d); };
  return embedding_polynomial(g, brute, brute);
}

struct EmbeddingCountRecord {
  std::string topology_hash;
  int d = 0;
  std::uint64_t count = 0;
  std::string method;  // "bruteforce" | "interpolated"
};

/// Persistent (hash, d) -> count store, one JSON object per line. The file
/// name carries the generator version, so a version bump starts a fresh
/// file. Duplicate lines are tolerated when they agree.
class EmbeddingCache {
 public:
  explicit EmbeddingCache(std::filesystem::path directory) : directory_(std::move(directory)) {
    std::filesystem::create_directories(directory_);
    file_ = directory_ / ("embedding-counts-" + std::string(kGeneratorVersion) + ".jsonl");
    load();
  }

  const std::filesystem::path& file() const noexcept { return file_; }

  std::optional<std::uint64_t> lookup(const std::string& hash, int d) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find({hash, d});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void store(const EmbeddingCountRecord& record) {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = entries_.try_emplace({record.topology_hash, record.d}, record.count);
    if (!inserted) {
      if (it->second != record.count) conflict(record.topology_hash, record.d);
      return;
    }
    std::ofstream out(file_, std::ios::app);
    out << nlohmann::json{{"hash", record.topology_hash}, {"d", record.d}, {"count", record.count}}.dump()
        << '\n';
    out.flush();
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }

 private:
  void load() {
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception&) {
        // A torn trailing line from an interrupted writer; its value is recomputed on demand.
        continue;
      }
      const auto hash = j.at("hash").get<std::string>();
      const int d = j.at("d").get<int>();
      const auto count = j.at("count").get<std::uint64_t>();
      auto [it, inserted] = entries_.try_emplace({hash, d}, count);
      if (!inserted && it->second != count) conflict(hash, d);
    }
  }

  [[noreturn]] static void conflict(const std::string& hash, int d) {
    throw ConsistencyError("embedding cache holds two counts for " + hash + " at d = " + std::to_string(d));
  }

  std::filesystem::path directory_;
  std::filesystem::path file_;
  mutable std::mutex mutex_;
  std::map<std::pair<std::string, int>, std::uint64_t> entries_;
};

/// Memoizing front end for embedding counts and polynomials, keyed by
/// topology hash (counts do not depend on which vertex is pinned, by
/// translation invariance). Safe to share between worker threads.
class EmbeddingCounter {
 public:
  EmbeddingCounter() = default;
  explicit EmbeddingCounter(std::shared_ptr<EmbeddingCache> cache) : cache_(std::move(cache)) {}

  std::uint64_t count(const Multigraph& g, int d) { return count_for(canonicalize(g).hash, g, d, false); }

  /// Sample points may come from the cache; the two self-check points are
  /// always recounted by brute force.
  DimPoly polynomial(const Multigraph& g) {
    const std::string hash = canonicalize(g).hash;
    {
      std::lock_guard lock(mutex_);
      auto it = polys_.find(hash);
      if (it != polys_.end()) return it->second;
    }
    DimPoly poly = embedding_polynomial(
        g, [&](int d) { return count_for(hash, g, d, false); },
        [&](int d) { return count_for(hash, g, d, true); });
    std::lock_guard lock(mutex_);
    polys_.try_emplace(hash, poly);
    return poly;
  }

  std::size_t cache_hits() const {
    std::lock_guard lock(mutex_);
    return hits_;
  }
  std::size_t brute_force_runs() const {
    std::lock_guard lock(mutex_);
    return computed_;
  }

 private:
  std::uint64_t count_for(const std::string& hash, const Multigraph& g, int d, bool fresh) {
    if (!fresh) {
      std::lock_guard lock(mutex_);
      auto it = counts_.find({hash, d});
      if (it != counts_.end()) {
        ++hits_;
        return it->second;
      }
      if (cache_) {
        if (auto cached = cache_->lookup(hash, d)) {
          ++hits_;
          counts_.emplace(std::make_pair(hash, d), *cached);
          return *cached;
        }
      }
    }
    const std::uint64_t value = count_embeddings(g, d);
    std::lock_guard lock(mutex_);
    ++computed_;
    auto [it, inserted] = counts_.try_emplace({hash, d}, value);
    if (!inserted && it->second != value) {
      throw ConsistencyError("brute-force count for " + hash + " at d = " + std::to_string(d) +
                             " disagrees with the cached value");
    }
    if (cache_) cache_->store({hash, d, value, "bruteforce"});
    return value;
  }

  std::shared_ptr<EmbeddingCache> cache_;
  mutable std::mutex mutex_;
  std::map<std::pair<std::string, int>, std::uint64_t> counts_;
  std::map<std::string, DimPoly> polys_;
  std::size_t hits_ = 0;
  std::size_t computed_ = 0;
};

}  // namespace dimerk
