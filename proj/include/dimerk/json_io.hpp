#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dimerk/canonical.hpp"
#include "dimerk/multigraph.hpp"
#include "dimerk/polynomial.hpp"
#include "dimerk/rational.hpp"
#include "dimerk/reduction.hpp"
#include "dimerk/torus_oracle.hpp"
#include "dimerk/verifier.hpp"
#include "dimerk/weighted_sum.hpp"

// JSON schemas of the command-line interface. Every rational is an exact
// "p/q" string; polynomial coefficients are keyed by exponent as a string.

namespace dimerk::io {

using nlohmann::json;

inline json to_json(const Multigraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"a", e.a}, {"b", e.b}, {"kind", std::string(to_string(e.kind))}, {"id", e.id}});
  }
  return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

/// Accepts {"vertices": int, "edges": [{"a","b","kind","id"}]}; "kind"
/// defaults to solid and "id" to the list position.
inline Multigraph multigraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
  }
  std::vector<Edge> edges;
  int position = 0;
  for (const json& e : j.at("edges")) {
    edges.push_back(Edge{e.at("a").get<int>(), e.at("b").get<int>(),
                         parse_edge_kind(e.value("kind", std::string("solid"))), e.value("id", position)});
    ++position;
  }
  return Multigraph(j.at("vertices").get<int>(), std::move(edges));
}

inline json to_json(const Topology& t) {
  json j = to_json(t.canonical);
  j["automorphisms"] = t.automorphism_count;
  j["hash"] = t.hash;
  return j;
}

inline json to_json(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_string(c);
  return j;
}

inline LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly::Terms terms;
  for (const auto& [key, value] : j.items()) terms[std::stoi(key)] = parse_rational(value.get<std::string>());
  return LaurentPoly::from_terms(terms);
}

inline json coefficients_json(const DimPoly& p) {
  json j = json::object();
  for (int k = 0; k <= p.degree(); ++k) j[std::to_string(k)] = to_string(p.coefficient(k));
  return j;
}

inline json to_json(const DimPoly& p) { return {{"degree", p.degree()}, {"coeffs", coefficients_json(p)}}; }

inline json to_json(const NSeries& s) { return {{"series", coefficients_json(s.series)}, {"limit", to_string(s.limit())}}; }

inline json to_json(const SignedGraphTerm& term) {
  return {{"coeff", to_string(term.coefficient)}, {"graph", to_json(term.graph)}};
}

inline json to_json(const FormReport& r) {
  json j{{"hash", r.topology_hash},
         {"n", r.n},
         {"laurent", to_json(r.laurent)},
         {"passesForm", r.passes_form},
         {"passesSumBound", r.passes_sum_bound}};
  j["minExponent"] = r.min_exponent ? json(*r.min_exponent) : json(nullptr);
  j["maxExponent"] = r.max_exponent ? json(*r.max_exponent) : json(nullptr);
  return j;
}

inline PsiTable psi_table_from_json(const json& j, std::string source) {
  if (!j.is_object()) throw std::invalid_argument("coefficient table must be a JSON object");
  PsiTable psi;
  psi.source = std::move(source);
  for (const auto& [hash, value] : j.items()) psi.values[hash] = parse_rational(value.get<std::string>());
  return psi;
}

inline json to_json(const PsiTable& psi) {
  json j = json::object();
  for (const auto& [hash, value] : psi.values) j[hash] = to_string(value);
  return j;
}

inline json to_json(const KernelResult& k) {
  json per = json::object();
  for (const auto& [hash, w] : k.per_topology) per[hash] = to_json(w);
  return {{"n", k.n}, {"value", to_json(k.value)}, {"raw", to_json(k.raw)}, {"perTopology", std::move(per)},
          {"form", to_json(k.form)}};
}

/// A single graph object or an array of them.
inline std::vector<Multigraph> graphs_from_json(const json& j) {
  std::vector<Multigraph> out;
  if (j.is_array()) {
    for (const json& g : j) out.push_back(multigraph_from_json(g));
  } else {
    out.push_back(multigraph_from_json(j));
  }
  return out;
}

}  // namespace dimerk::io
