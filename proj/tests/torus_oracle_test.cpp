#include <gtest/gtest.h>

#include "test_support.hpp"

namespace dimerk {
namespace {

using testing::graph;

TEST(Torus, ValidationRejectsBadSides) {
  EXPECT_THROW(validate_torus(TorusSpec{1, 7}, 2), std::invalid_argument);
  EXPECT_THROW(validate_torus(TorusSpec{1, 4}, 2), std::invalid_argument);
  EXPECT_THROW(validate_torus(TorusSpec{0, 8}, 2), std::invalid_argument);
  EXPECT_NO_THROW(validate_torus(TorusSpec{2, 6}, 2));
}

TEST(Torus, DefaultToriAreAdmissibleAndDistinct) {
  for (int m = 1; m <= 4; ++m) {
    const auto tori = default_tori(m, 2);
    ASSERT_EQ(tori.size(), static_cast<std::size_t>(m + 2));
    for (const auto& t : tori) EXPECT_NO_THROW(validate_torus(t, m));
  }
}

TEST(Torus, SingleEdgeIsZeroAtEveryFiniteSize) {
  const auto t = canonicalize(graph(2, {{0, 1}}));
  for (int side : {10, 12}) EXPECT_EQ(finite_weighted_sum(t, TorusSpec{1, side}), 0);
  EXPECT_EQ(finite_weighted_sum(t, TorusSpec{2, 4}), 0);
}

TEST(Torus, AllDashedDoubleEdgeIsOneOverNMinusOne) {
  const auto g = graph(2, {{0, 1}, {0, 1}}, EdgeKind::Dashed);
  for (const auto& torus : {TorusSpec{1, 6}, TorusSpec{1, 10}, TorusSpec{2, 8}, TorusSpec{3, 6}}) {
    EXPECT_EQ(finite_weighted_sum(g, torus), Rational(1) / Rational(torus.sites() - 1));
  }
  const auto series = extrapolate_assignment(g, 1, default_tori(2, 1));
  EXPECT_EQ(series.limit(), 0);
  EXPECT_EQ(series.series.coefficient(1), 1);
}

TEST(Torus, PathOfTwoOnTwelveSites) {
  const auto t = canonicalize(graph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(finite_weighted_sum(t, TorusSpec{1, 12}), Rational(-9, 22));
  EXPECT_EQ(testing::literal_torus_sum(t.canonical, 1, 12), Rational(-9, 22));
}

TEST(Torus, CensusAgreesWithLiteralEnumeration) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_topologies(n).entries) {
      const TorusSpec line{1, 2 * n + 2};
      ASSERT_EQ(finite_weighted_sum(t, line), testing::literal_torus_sum(t.canonical, 1, line.side)) << t.code;
      if (t.vertex_count() <= 3) {
        const TorusSpec plane{2, 2 * n + 2};
        ASSERT_EQ(finite_weighted_sum(t, plane), testing::literal_torus_sum(t.canonical, 2, plane.side)) << t.code;
      }
    }
  }
}

TEST(Torus, ParallelCensusMatchesSerial) {
  const auto g = graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(placement_census(g, TorusSpec{2, 10}, 1), placement_census(g, TorusSpec{2, 10}, 3));
}

TEST(NSeries, NeedsResidualSample) {
  std::vector<std::pair<std::int64_t, Rational>> samples{{10, 1}, {12, 2}};
  EXPECT_THROW(fit_nseries(samples, 1), std::invalid_argument);
}

TEST(NSeries, DetectsResidualMismatch) {
  // exact 1/(N-1) at two sizes, perturbed at the third
  std::vector<std::pair<std::int64_t, Rational>> samples{
      {10, Rational(1, 9)}, {12, Rational(1, 11)}, {14, Rational(1, 13) + Rational(1, 1000)}};
  EXPECT_THROW(fit_nseries(samples, 1), ConsistencyError);
  samples[2].second = Rational(1, 13);
  EXPECT_EQ(fit_nseries(samples, 1).limit(), 0);
}

TEST(NSeries, RejectsRepeatedSizesAndMixedDimensions) {
  const auto t = canonicalize(graph(2, {{0, 1}}));
  const std::vector<TorusSpec> repeated{{1, 4}, {1, 4}, {1, 6}};
  EXPECT_THROW(extrapolate_limit(t, 1, repeated), std::invalid_argument);
  const std::vector<TorusSpec> mixed{{1, 4}, {2, 6}, {1, 8}};
  EXPECT_THROW(extrapolate_limit(t, 1, mixed), std::invalid_argument);
}

TEST(Oracle, LimitsMatchWeightedSumsForTwoEdges) {
  for (const auto& t : enumerate_topologies(2).entries) {
    const auto w = weighted_sum(t);
    for (int d = 1; d <= 3; ++d) {
      ASSERT_EQ(extrapolate_limit(t, d, default_tori(2, d)).limit(), w(Rational(d))) << t.code << " d=" << d;
    }
  }
}

}  // namespace
}  // namespace dimerk
