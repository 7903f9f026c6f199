#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace dimerk {
namespace {

using testing::graph;

LaurentPoly w_of(const Multigraph& g) { return weighted_sum(canonicalize(g)); }

LaurentPoly inv_d(const Rational& c, int power) { return LaurentPoly::monomial(c, -power); }

TEST(WeightedSum, SingleEdgeIsZero) { EXPECT_TRUE(w_of(graph(2, {{0, 1}})).is_zero()); }

TEST(WeightedSum, TwoEdges) {
  EXPECT_EQ(w_of(graph(2, {{0, 1}, {0, 1}})), inv_d(Rational(1, 2), 1));
  EXPECT_EQ(w_of(graph(3, {{0, 1}, {1, 2}})), inv_d(Rational(-1, 2), 1));
}

TEST(WeightedSum, ThreeEdges) {
  EXPECT_TRUE(w_of(graph(3, {{0, 1}, {1, 2}, {2, 0}})).is_zero());
  EXPECT_EQ(w_of(graph(2, {{0, 1}, {0, 1}, {0, 1}})), inv_d(Rational(1, 4), 2));
  EXPECT_EQ(w_of(graph(3, {{0, 1}, {0, 1}, {1, 2}})), inv_d(Rational(-1, 4), 2));
  EXPECT_EQ(w_of(graph(4, {{0, 1}, {1, 2}, {2, 3}})), inv_d(Rational(1, 4), 2));
  EXPECT_EQ(w_of(graph(4, {{0, 1}, {0, 2}, {0, 3}})), inv_d(Rational(1, 2), 2));
}

TEST(WeightedSum, NondegenerateGraphIsWeightedEmbeddingCount) {
  const auto square = graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  // 4d(d-1) / (2d)^4
  EXPECT_EQ(w_of(square), inv_d(Rational(1, 4), 2) - inv_d(Rational(1, 4), 3));
}

TEST(WeightedSum, BreakdownAddsUp) {
  EmbeddingCounter counter;
  for (const auto& t : enumerate_topologies(4).entries) {
    const auto b = weighted_sum_breakdown(t, counter);
    LaurentPoly total;
    for (const auto& branch : b.branches) {
      ASSERT_EQ(branch.solid_lines, 4);
      total += branch.contribution;
    }
    ASSERT_EQ(total, b.total);
  }
}

TEST(WeightedSum, BranchTimesDToTheAIsPolynomial) {
  EmbeddingCounter counter;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_topologies(n).entries) {
      for (const auto& branch : weighted_sum_breakdown(t, counter).branches) {
        const auto scaled = branch.contribution * LaurentPoly::monomial(1, branch.solid_lines);
        if (auto lo = scaled.min_exponent()) ASSERT_GE(*lo, 0) << t.code;
      }
    }
  }
}

TEST(Kernel, PsiOnesForTwoEdges) {
  PsiTable psi;
  for (const auto& t : enumerate_topologies(2).entries) psi.values[t.hash] = 1;
  EmbeddingCounter counter;
  const auto k = assemble_kernel(2, psi, counter);
  EXPECT_TRUE(k.value.is_zero());
  EXPECT_TRUE(k.form.passes_form);
  EXPECT_EQ(k.per_topology.size(), 2u);
}

TEST(Kernel, NEqualsOneIsZeroForAnyPsi) {
  PsiTable psi;
  psi.values[enumerate_topologies(1).entries.front().hash] = Rational(-7, 3);
  EmbeddingCounter counter;
  EXPECT_TRUE(assemble_kernel(1, psi, counter).value.is_zero());
}

TEST(Kernel, MissingCoefficientNamesEveryHash) {
  const auto catalog = enumerate_topologies(3);
  PsiTable psi;
  psi.values[catalog.entries.front().hash] = 1;
  EmbeddingCounter counter;
  try {
    assemble_kernel(catalog, psi, counter);
    FAIL() << "expected MissingCoefficientError";
  } catch (const MissingCoefficientError& e) {
    EXPECT_EQ(e.hashes().size(), catalog.entries.size() - 1);
    for (std::size_t i = 1; i < catalog.entries.size(); ++i) {
      EXPECT_NE(std::string(e.what()).find(catalog.entries[i].hash), std::string::npos);
    }
  }
}

TEST(Kernel, LinearInPsi) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  EmbeddingCounter counter;
  for (int n = 2; n <= 4; ++n) {
    const auto catalog = enumerate_topologies(n);
    for (int trial = 0; trial < 3; ++trial) {
      PsiTable a, b, mix;
      const Rational alpha(num(rng), den(rng)), beta(num(rng), den(rng));
      for (const auto& t : catalog.entries) {
        a.values[t.hash] = Rational(num(rng), den(rng));
        b.values[t.hash] = Rational(num(rng), den(rng));
        mix.values[t.hash] = alpha * a.values[t.hash] + beta * b.values[t.hash];
      }
      const auto ka = assemble_kernel(catalog, a, counter).value;
      const auto kb = assemble_kernel(catalog, b, counter).value;
      const auto km = assemble_kernel(catalog, mix, counter).value;
      ASSERT_EQ(km, ka * alpha + kb * beta) << "n=" << n;
    }
  }
}

TEST(Kernel, TransformHookIsApplied) {
  const auto catalog = enumerate_topologies(2);
  PsiTable psi;
  for (const auto& t : catalog.entries) psi.values[t.hash] = 1;
  psi.values[catalog.entries.front().hash] = 3;
  EmbeddingCounter counter;
  const auto plain = assemble_kernel(catalog, psi, counter);
  const auto doubled = assemble_kernel(catalog, psi, counter, [](const LaurentPoly& p) { return p * Rational(2); });
  EXPECT_EQ(doubled.raw, plain.raw);
  EXPECT_EQ(doubled.value, plain.value * Rational(2));
  EXPECT_FALSE(plain.value.is_zero());
}

TEST(Kernel, ParallelJobsAgree) {
  const auto catalog = enumerate_topologies(4);
  PsiTable psi;
  for (const auto& t : catalog.entries) psi.values[t.hash] = Rational(static_cast<long>(t.automorphism_count), 5);
  EmbeddingCounter counter;
  EXPECT_EQ(assemble_kernel(catalog, psi, counter, {}, 1).value, assemble_kernel(catalog, psi, counter, {}, 3).value);
}

}  // namespace
}  // namespace dimerk
