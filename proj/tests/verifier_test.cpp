#include <gtest/gtest.h>

#include "test_support.hpp"

namespace dimerk {
namespace {

using testing::graph;

TEST(Decomposition, RingWithEar) {
  const auto g = graph(6, testing::ring_ear_pairs());
  const auto dec = path_decomposition(g);
  ASSERT_EQ(dec.sets.size(), 2u);
  EXPECT_EQ(dec.sets[0], (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(dec.sets[1], (std::vector<int>{4, 5, 6}));
  EXPECT_EQ(dec.anchors, (std::vector<int>{0, 1}));
  EXPECT_EQ(dec.ear_bound(), 3);
  EXPECT_TRUE(check_path_decomposition(g, dec).empty());
  EXPECT_TRUE(verify_ear_degree_bound(g, dec, embedding_polynomial(g)));
}

TEST(Decomposition, RingWithEarAndChord) {
  const auto g = testing::ring_ear_chord();
  const auto dec = path_decomposition(g);
  ASSERT_EQ(dec.sets.size(), 3u);
  EXPECT_EQ(dec.sets[0], (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(dec.sets[1], (std::vector<int>{4, 5, 6}));
  EXPECT_EQ(dec.sets[2], (std::vector<int>{7}));
  EXPECT_EQ(dec.lengths(), (std::vector<int>{4, 3, 1}));
  EXPECT_EQ(dec.ear_bound(), 3);
  EXPECT_TRUE(check_path_decomposition(g, dec).empty());
}

TEST(Decomposition, DoubleEdgeAndTripleEdge) {
  const auto dbl = path_decomposition(graph(2, {{0, 1}, {0, 1}}));
  EXPECT_EQ(dbl.lengths(), (std::vector<int>{2}));
  const auto tpl = path_decomposition(graph(2, {{0, 1}, {0, 1}, {0, 1}}));
  EXPECT_EQ(tpl.lengths(), (std::vector<int>{2, 1}));
  EXPECT_EQ(tpl.ear_bound(), 1);
}

TEST(Decomposition, RejectsGraphWithFreeEdge) {
  EXPECT_THROW(path_decomposition(testing::ring_ear_pendant()), std::invalid_argument);
}

TEST(Decomposition, CheckerFlagsBrokenDecompositions) {
  const auto g = graph(6, testing::ring_ear_pairs());
  auto dec = path_decomposition(g);

  auto missing = dec;
  missing.sets[1].pop_back();
  EXPECT_FALSE(check_path_decomposition(g, missing).empty());

  auto reused = dec;
  reused.sets[1].push_back(0);
  EXPECT_FALSE(check_path_decomposition(g, reused).empty());

  auto open_first = dec;
  open_first.sets[0] = {0, 1, 2};
  open_first.sets[1] = {3, 4, 5, 6};
  EXPECT_FALSE(check_path_decomposition(g, open_first).empty());

  auto floating_ear = dec;
  std::swap(floating_ear.sets[0], floating_ear.sets[1]);
  EXPECT_FALSE(check_path_decomposition(g, floating_ear).empty());

  auto bad_anchor = dec;
  bad_anchor.anchors[1] = 5;
  EXPECT_FALSE(check_path_decomposition(g, bad_anchor).empty());
}

TEST(Decomposition, ValidAndBoundedForEveryBridgelessCatalogGraph) {
  EmbeddingCounter counter;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& t : enumerate_topologies(n).entries) {
      if (!is_nondegenerate(t.canonical)) continue;
      const auto dec = path_decomposition(t.canonical);
      ASSERT_TRUE(check_path_decomposition(t.canonical, dec).empty()) << t.code;
      ASSERT_TRUE(verify_ear_degree_bound(t.canonical, dec, counter.polynomial(t.canonical))) << t.code;
    }
  }
}

TEST(Decomposition, BoundRejectsTooHighDegree) {
  const auto g = graph(2, {{0, 1}, {0, 1}});
  const auto dec = path_decomposition(g);
  const std::vector<std::pair<Rational, Rational>> quadratic{{0, 0}, {1, 1}, {2, 4}};
  EXPECT_FALSE(verify_ear_degree_bound(g, dec, DimPoly::interpolate(quadratic)));
  EXPECT_TRUE(verify_ear_degree_bound(g, dec, DimPoly{}));
}

TEST(Form, Examples) {
  EXPECT_TRUE(verify_form(LaurentPoly{}, 1).passes_form);
  const auto two = verify_form(LaurentPoly::monomial(Rational(1, 2), -1), 2);
  EXPECT_TRUE(two.passes_form);
  EXPECT_EQ(two.min_exponent, 1);
  EXPECT_EQ(two.max_exponent, 1);
  // 1/d at n = 3 violates r >= 3/2
  const auto low = verify_form(LaurentPoly::monomial(1, -1), 3);
  EXPECT_FALSE(low.passes_form);
  EXPECT_FALSE(low.passes_sum_bound);
  // 1/d^3 at n = 3 is past n - 1
  const auto high = verify_form(LaurentPoly::monomial(1, -3), 3);
  EXPECT_FALSE(high.passes_form);
  EXPECT_TRUE(high.passes_sum_bound);
  // a constant term is r = 0
  EXPECT_FALSE(verify_form(LaurentPoly::monomial(1, 0), 2).passes_form);
}

TEST(Form, HoldsForFullCatalogsThroughFive) {
  EmbeddingCounter counter;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_topologies(n).entries) {
      const auto report = verify_form(weighted_sum(t, counter), n, t.hash);
      ASSERT_TRUE(report.passes_form) << t.code;
    }
  }
}

TEST(Report, DeterministicAcrossRunsAndJobs) {
  EmbeddingCounter a, b;
  const auto first = build_verify_report(4, a, 1);
  const auto second = build_verify_report(4, b, 3);
  EXPECT_EQ(first.json.dump(), second.json.dump());
  EXPECT_TRUE(first.passed());
  EXPECT_EQ(first.topologies, 12u);
}

TEST(Report, SummaryLine) {
  EmbeddingCounter counter;
  const auto report = build_verify_report(2, counter);
  EXPECT_EQ(report.summary, "verify n=2: 2 topologies, 0 failures, observed min r = 1 (floor 1)");
}

}  // namespace
}  // namespace dimerk
