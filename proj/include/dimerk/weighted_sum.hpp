#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dimerk/canonical.hpp"
#include "dimerk/embedding.hpp"
#include "dimerk/errors.hpp"
#include "dimerk/parallel.hpp"
#include "dimerk/polynomial.hpp"
#include "dimerk/reduction.hpp"
#include "dimerk/topology_enum.hpp"
#include "dimerk/verifier.hpp"

namespace dimerk {

/// One all-solid nondegenerate graph from the reduction of a topology, with
/// its share of the weighted sum: coefficient * (1/(2d))^a * E(d), where a is
/// the number of solid lines and E the embedding polynomial.
struct BranchContribution {
  Rational coefficient;
  Multigraph graph;
  std::string hash;
  int solid_lines = 0;
  DimPoly embedding;
  LaurentPoly contribution;
};

struct WeightedSumBreakdown {
  Topology topology;
  std::vector<BranchContribution> branches;
  std::size_t zero_weight_terms = 0;
  LaurentPoly total;
};

/// (1/(2d))^a as a Laurent monomial.
inline LaurentPoly solid_weight(int a) { return LaurentPoly::monomial(pow(Rational(1, 2), a), -a); }

/// N -> infinity weighted sum of every kind assignment of `t`, vertex 0
/// pinned and the rest summed over Z^d. Loop edges are Solid (dashed loop
/// edges vanish), bridges are Wavy, and the reduction removes the bridges.
/// Edges are distinguishable and no automorphism factor is applied.
inline WeightedSumBreakdown weighted_sum_breakdown(const Topology& t, EmbeddingCounter& counter,
                                                   BridgeOrder order = BridgeOrder::LowestIdFirst) {
  WeightedSumBreakdown out{t, {}, 0, {}};
  const ReductionResult reduced = reduce_to_nondegenerate(prepare_for_reduction(t.canonical), order);
  out.zero_weight_terms = reduced.zero_weight_terms;
  for (const SignedGraphTerm& term : reduced.terms) {
    BranchContribution branch{term.coefficient, term.graph, topology_hash(term.graph), term.graph.edge_count(),
                              counter.polynomial(term.graph), {}};
    branch.contribution = solid_weight(branch.solid_lines) * LaurentPoly::from_poly(branch.embedding) *
                          branch.coefficient;
    out.total += branch.contribution;
    out.branches.push_back(std::move(branch));
  }
  return out;
}

inline LaurentPoly weighted_sum(const Topology& t, EmbeddingCounter& counter) {
  return weighted_sum_breakdown(t, counter).total;
}

inline LaurentPoly weighted_sum(const Topology& t) {
  EmbeddingCounter counter;
  return weighted_sum(t, counter);
}

/// Dimension-independent coefficient per topology hash.
struct PsiTable {
  std::map<std::string, Rational> values;
  std::string source;
};

struct KernelResult {
  int n = 0;
  LaurentPoly raw;    // sum over topologies of psi(T) * W_T
  LaurentPoly value;  // raw after the optional post-transformation
  std::map<std::string, LaurentPoly> per_topology;
  FormReport form;
};

/// Optional map from the raw assembly to the final kernel.
using KernelTransform = std::function<LaurentPoly(const LaurentPoly&)>;

inline KernelResult assemble_kernel(const TopologyCatalog& catalog, const PsiTable& psi, EmbeddingCounter& counter,
                                    const KernelTransform& transform = {}, int jobs = 1) {
  std::vector<std::string> missing;
  for (const Topology& t : catalog.entries) {
    if (!psi.values.count(t.hash)) missing.push_back(t.hash);
  }
  if (!missing.empty()) throw MissingCoefficientError(std::move(missing));

  const auto sums = parallel_map(catalog.entries.size(), jobs,
                                 [&](std::size_t i) { return weighted_sum(catalog.entries[i], counter); });
  KernelResult result;
  result.n = catalog.n;
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    const Topology& t = catalog.entries[i];
    result.raw += sums[i] * psi.values.at(t.hash);
    result.per_topology.emplace(t.hash, sums[i]);
  }
  result.value = transform ? transform(result.raw) : result.raw;
  result.form = verify_form(result.value, catalog.n, "kernel");
  return result;
}

inline KernelResult assemble_kernel(int n, const PsiTable& psi, EmbeddingCounter& counter,
                                    const KernelTransform& transform = {}, int jobs = 1) {
  return assemble_kernel(enumerate_topologies(n), psi, counter, transform, jobs);
}

}  // namespace dimerk
