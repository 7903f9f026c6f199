#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dimerk/canonical.hpp"
#include "dimerk/errors.hpp"
#include "dimerk/multigraph.hpp"
#include "dimerk/parallel.hpp"
#include "dimerk/polynomial.hpp"
#include "dimerk/rational.hpp"
#include "dimerk/topology_enum.hpp"

// Ground truth by direct enumeration of placements on a finite torus. This
// header must stay free of the reduction engine and the embedding counter:
// it exists to check them.

namespace dimerk {

/// The d-dimensional torus of side L with N = L^d sites.
struct TorusSpec {
  int d = 1;
  int side = 0;

  std::int64_t sites() const {
    std::int64_t n = 1;
    for (int k = 0; k < d; ++k) n *= side;
    return n;
  }
};

/// L must be even (keeps the torus bipartite) and exceed twice the edge
/// count (no solid path can wrap around).
inline void validate_torus(const TorusSpec& torus, int edge_count) {
  if (torus.d < 1) throw std::invalid_argument("torus dimension must be positive");
  if (torus.side <= 0 || torus.side % 2 != 0) throw std::invalid_argument("torus side must be a positive even integer");
  if (torus.side <= 2 * edge_count) {
    throw std::invalid_argument("torus side " + std::to_string(torus.side) + " does not exceed twice the edge count " +
                                std::to_string(edge_count));
  }
}

/// Placement counts split by which edges join nearest neighbours: entry
/// `mask` counts injective placements (vertex 0 at site 0) in which edge
/// with list index k is a nearest-neighbour pair iff bit k of mask is set.
using PlacementCensus = std::vector<std::uint64_t>;

namespace detail {

inline std::vector<int> torus_neighbours(const TorusSpec& torus) {
  const auto n = torus.sites();
  const int fan = 2 * torus.d;
  std::vector<int> table(static_cast<std::size_t>(n * fan));
  for (std::int64_t s = 0; s < n; ++s) {
    std::int64_t stride = 1;
    for (int k = 0; k < torus.d; ++k) {
      const std::int64_t coord = (s / stride) % torus.side;
      const std::int64_t up = s + (((coord + 1) % torus.side) - coord) * stride;
      const std::int64_t down = s + (((coord + torus.side - 1) % torus.side) - coord) * stride;
      table[static_cast<std::size_t>(s * fan + 2 * k)] = static_cast<int>(up);
      table[static_cast<std::size_t>(s * fan + 2 * k + 1)] = static_cast<int>(down);
      stride *= torus.side;
    }
  }
  return table;
}

}  // namespace detail

inline PlacementCensus placement_census(const Multigraph& g, const TorusSpec& torus, int jobs = 1) {
  validate_torus(torus, g.edge_count());
  const int m = g.edge_count();
  if (m > 16) throw std::invalid_argument("too many edges for a placement census");
  const int v = g.vertex_count();
  const auto n = torus.sites();
  const int fan = 2 * torus.d;
  const auto neighbours = detail::torus_neighbours(torus);
  auto adjacent = [&](int x, int y) {
    const int* row = neighbours.data() + static_cast<std::ptrdiff_t>(x) * fan;
    for (int k = 0; k < fan; ++k) {
      if (row[k] == y) return true;
    }
    return false;
  };

  // Edge k is scored once both ends are placed, i.e. at its larger endpoint.
  std::vector<std::vector<int>> closing(static_cast<std::size_t>(v));
  for (int k = 0; k < m; ++k) {
    const Edge& e = g.edges()[static_cast<std::size_t>(k)];
    closing[static_cast<std::size_t>(std::max(e.a, e.b))].push_back(k);
  }

  PlacementCensus census(std::size_t{1} << m, 0);
  if (v == 1) {
    census[0] = 1;
    return census;
  }

  // Split on the site of vertex 1; each worker fills its own census.
  auto partial = parallel_map(static_cast<std::size_t>(n - 1), jobs, [&](std::size_t first) {
    PlacementCensus local(std::size_t{1} << m, 0);
    std::vector<int> site(static_cast<std::size_t>(v), 0);
    site[1] = static_cast<int>(first) + 1;
    auto mask_of = [&](int vertex) {
      unsigned mask = 0;
      for (int k : closing[static_cast<std::size_t>(vertex)]) {
        const Edge& e = g.edges()[static_cast<std::size_t>(k)];
        if (adjacent(site[static_cast<std::size_t>(e.a)], site[static_cast<std::size_t>(e.b)])) mask |= 1u << k;
      }
      return mask;
    };
    auto place = [&](auto&& self, int vertex, unsigned mask) -> void {
      if (vertex == v) {
        ++local[mask];
        return;
      }
      for (std::int64_t s = 1; s < n; ++s) {
        bool clash = false;
        for (int u = 1; u < vertex && !clash; ++u) clash = site[static_cast<std::size_t>(u)] == s;
        if (clash) continue;
        site[static_cast<std::size_t>(vertex)] = static_cast<int>(s);
        self(self, vertex + 1, mask | mask_of(vertex));
      }
    };
    place(place, 2, mask_of(1));
    return local;
  });
  for (const auto& local : partial) {
    for (std::size_t k = 0; k < census.size(); ++k) census[k] += local[k];
  }
  return census;
}

/// Exact pre-limit sum for the kinds carried by `g`: solid edges weigh
/// 1/(2d) on nearest neighbours and 0 otherwise, dashed edges -1/(N-1),
/// wavy edges the sum of both.
inline Rational finite_weighted_sum(const Multigraph& g, const TorusSpec& torus, const PlacementCensus& census) {
  const Rational solid(1, 2 * torus.d);
  const Rational dashed = Rational(-1) / Rational(torus.sites() - 1);
  Rational total = 0;
  for (std::size_t mask = 0; mask < census.size(); ++mask) {
    if (census[mask] == 0) continue;
    Rational weight = 1;
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
      const bool nn = (mask >> k) & 1u;
      switch (g.edges()[k].kind) {
        case EdgeKind::Solid: weight *= nn ? solid : Rational(0); break;
        case EdgeKind::Dashed: weight *= dashed; break;
        case EdgeKind::Wavy: weight *= (nn ? solid : Rational(0)) + dashed; break;
      }
      if (weight == 0) break;
    }
    total += weight * Rational(census[mask]);
  }
  return total;
}

inline Rational finite_weighted_sum(const Multigraph& g, const TorusSpec& torus, int jobs = 1) {
  return finite_weighted_sum(g, torus, placement_census(g, torus, jobs));
}

/// Sum over all 2^n Solid/Dashed assignments of the topology.
inline Rational finite_weighted_sum(const Topology& t, const TorusSpec& torus, int jobs = 1) {
  const PlacementCensus census = placement_census(t.canonical, torus, jobs);
  Rational total = 0;
  for (const Multigraph& assignment : kind_assignments(t)) total += finite_weighted_sum(assignment, torus, census);
  return total;
}

/// Polynomial in x = 1/(N-1); the constant term is the N -> infinity limit.
struct NSeries {
  DimPoly series;

  Rational limit() const { return series.coefficient(0); }
  Rational operator()(std::int64_t sites) const { return series(Rational(1) / Rational(sites - 1)); }
};

/// Fits a series of degree <= `degree` through the first degree+1 samples
/// and demands an exact match at every remaining sample.
inline NSeries fit_nseries(std::span<const std::pair<std::int64_t, Rational>> samples, int degree) {
  if (samples.size() < static_cast<std::size_t>(degree) + 2) {
    throw std::invalid_argument("need " + std::to_string(degree + 2) + " torus sizes (fit plus a residual check)");
  }
  std::vector<std::pair<Rational, Rational>> points;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(degree); ++i) {
    points.emplace_back(Rational(1) / Rational(samples[i].first - 1), samples[i].second);
  }
  NSeries fit{DimPoly::interpolate(points)};
  for (std::size_t i = static_cast<std::size_t>(degree) + 1; i < samples.size(); ++i) {
    if (fit(samples[i].first) != samples[i].second) {
      throw ConsistencyError("finite-lattice series of degree " + std::to_string(degree) + " misses N = " +
                             std::to_string(samples[i].first) + ": predicted " + to_string(fit(samples[i].first)) +
                             ", enumerated " + to_string(samples[i].second));
    }
  }
  return fit;
}

namespace detail {

inline void check_sizes(std::span<const TorusSpec> sizes, int d) {
  std::vector<std::int64_t> seen;
  for (const TorusSpec& torus : sizes) {
    if (torus.d != d) throw std::invalid_argument("all tori must share the dimension d");
    if (std::find(seen.begin(), seen.end(), torus.sites()) != seen.end()) {
      throw std::invalid_argument("torus sizes must have distinct site counts");
    }
    seen.push_back(torus.sites());
  }
}

}  // namespace detail

/// Series for the fixed kinds carried by `g` (Wavy = both kinds summed).
inline NSeries extrapolate_assignment(const Multigraph& g, int d, std::span<const TorusSpec> sizes, int jobs = 1) {
  detail::check_sizes(sizes, d);
  std::vector<std::pair<std::int64_t, Rational>> samples;
  for (const TorusSpec& torus : sizes) samples.emplace_back(torus.sites(), finite_weighted_sum(g, torus, jobs));
  return fit_nseries(samples, g.edge_count());
}

inline NSeries extrapolate_limit(const Topology& t, int d, std::span<const TorusSpec> sizes, int jobs = 1) {
  detail::check_sizes(sizes, d);
  std::vector<std::pair<std::int64_t, Rational>> samples;
  for (const TorusSpec& torus : sizes) samples.emplace_back(torus.sites(), finite_weighted_sum(t, torus, jobs));
  return fit_nseries(samples, t.edge_count());
}

/// The smallest admissible sides 2m+2, 2m+4, ..., enough for a degree-m fit
/// plus one residual check.
inline std::vector<TorusSpec> default_tori(int edge_count, int d) {
  std::vector<TorusSpec> out;
  for (int i = 0; i < edge_count + 2; ++i) out.push_back(TorusSpec{d, 2 * edge_count + 2 + 2 * i});
  return out;
}

}  // namespace dimerk
