#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dimerk/canonical.hpp"
#include "dimerk/embedding.hpp"
#include "dimerk/json_io.hpp"
#include "dimerk/parallel.hpp"
#include "dimerk/topology_enum.hpp"
#include "dimerk/verifier.hpp"
#include "dimerk/version.hpp"
#include "dimerk/weighted_sum.hpp"

namespace dimerk {

/// Result of checking one catalog. `json` is the full machine-readable
/// report and carries no timing data, so equal inputs give equal bytes.
struct VerifyReport {
  nlohmann::json json;
  std::size_t topologies = 0;
  std::size_t failures = 0;
  std::optional<int> observed_min_exponent;
  std::string summary;

  bool passed() const noexcept { return failures == 0; }
};

namespace detail {

inline nlohmann::json decimal_view(const LaurentPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_decimal(c);
  return j;
}

}  // namespace detail

/// Form check on every topology with n edges, plus the ear-degree bound and
/// decomposition validity for every nondegenerate graph the reduction
/// produces, plus polynomiality of each branch times d^a.
inline VerifyReport build_verify_report(int n, EmbeddingCounter& counter, int jobs = 1, bool decimal = false) {
  using nlohmann::json;
  const TopologyCatalog catalog = enumerate_topologies(n, jobs);
  const auto breakdowns = parallel_map(catalog.entries.size(), jobs, [&](std::size_t i) {
    return weighted_sum_breakdown(catalog.entries[i], counter);
  });

  VerifyReport report;
  report.topologies = catalog.entries.size();
  json topologies = json::array();
  json min_table = json::object();
  std::map<std::string, json> ear_checks;
  std::size_t form_failures = 0, bound_failures = 0, ear_failures = 0, decomposition_failures = 0, scaling_failures = 0;

  for (const WeightedSumBreakdown& b : breakdowns) {
    const FormReport form = verify_form(b.total, n, b.topology.hash);
    if (!form.passes_form) ++form_failures;
    if (!form.passes_sum_bound) ++bound_failures;
    if (form.min_exponent) {
      report.observed_min_exponent = std::min(report.observed_min_exponent.value_or(*form.min_exponent), *form.min_exponent);
    }
    bool scaling_ok = true;
    for (const BranchContribution& branch : b.branches) {
      const LaurentPoly scaled = branch.contribution * LaurentPoly::monomial(1, branch.solid_lines);
      if (auto lo = scaled.min_exponent(); lo && *lo < 0) scaling_ok = false;
      if (ear_checks.count(branch.hash)) continue;
      const PathDecomposition dec = path_decomposition(branch.graph);
      const auto problems = check_path_decomposition(branch.graph, dec);
      const bool within = verify_ear_degree_bound(branch.graph, dec, branch.embedding);
      if (!problems.empty()) ++decomposition_failures;
      if (!within) ++ear_failures;
      ear_checks[branch.hash] = json{{"hash", branch.hash},
                                     {"graph", io::to_json(branch.graph)},
                                     {"lengths", dec.lengths()},
                                     {"bound", dec.ear_bound()},
                                     {"degree", branch.embedding.degree()},
                                     {"embedding", io::coefficients_json(branch.embedding)},
                                     {"decompositionValid", problems.empty()},
                                     {"problems", problems},
                                     {"passes", within && problems.empty()}};
    }
    if (!scaling_ok) ++scaling_failures;

    json entry = io::to_json(form);
    entry["graph"] = io::to_json(b.topology.canonical);
    entry["automorphisms"] = b.topology.automorphism_count;
    entry["branches"] = b.branches.size();
    entry["zeroWeightTerms"] = b.zero_weight_terms;
    entry["branchScaling"] = scaling_ok;
    if (decimal) entry["laurentDecimal"] = detail::decimal_view(b.total);
    topologies.push_back(std::move(entry));
    min_table[b.topology.hash] = form.min_exponent ? json(*form.min_exponent) : json(nullptr);
  }

  json ears = json::array();
  for (auto& [hash, check] : ear_checks) ears.push_back(std::move(check));

  report.failures = form_failures + bound_failures + ear_failures + decomposition_failures + scaling_failures;
  const int floor_r = (n + 1) / 2;
  json summary{{"topologies", report.topologies},
               {"formFailures", form_failures},
               {"sumBoundFailures", bound_failures},
               {"earBoundFailures", ear_failures},
               {"decompositionFailures", decomposition_failures},
               {"branchScalingFailures", scaling_failures},
               {"theoremFloor", floor_r},
               {"passed", report.failures == 0}};
  summary["observedMinExponent"] =
      report.observed_min_exponent ? json(*report.observed_min_exponent) : json(nullptr);

  report.json = json{{"generatorVersion", std::string(kGeneratorVersion)},
                     {"command", "verify"},
                     {"n", n},
                     {"inputDigest", detail::fnv1a_hex("verify n=" + std::to_string(n))},
                     {"topologies", std::move(topologies)},
                     {"earChecks", std::move(ears)},
                     {"minExponentTable", std::move(min_table)},
                     {"summary", std::move(summary)}};

  report.summary = "verify n=" + std::to_string(n) + ": " + std::to_string(report.topologies) + " topologies, " +
                   std::to_string(report.failures) + " failures, observed min r = " +
                   (report.observed_min_exponent ? std::to_string(*report.observed_min_exponent) : std::string("none")) +
                   " (floor " + std::to_string(floor_r) + ")";
  return report;
}

}  // namespace dimerk
