#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "test_support.hpp"

namespace dimerk {
namespace {

using testing::graph;

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("dimerk-embedding-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

TEST(Embedding, SingleEdgeHas2dPlacements) {
  const auto g = graph(2, {{0, 1}});
  for (int d = 1; d <= 4; ++d) EXPECT_EQ(count_embeddings(g, d), static_cast<std::uint64_t>(2 * d));
}

TEST(Embedding, DoubleEdgeCountsLikeSingleEdge) {
  const auto g = graph(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(count_embeddings(g, 3), 6u);
}

TEST(Embedding, FourCycle) {
  const auto square = graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(count_embeddings(square, 1), 0u);
  EXPECT_EQ(count_embeddings(square, 2), 8u);
  EXPECT_EQ(count_embeddings(square, 3), 24u);
  const auto p = embedding_polynomial(square);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coefficient(2), 4);
  EXPECT_EQ(p.coefficient(1), -4);
  EXPECT_EQ(p.coefficient(0), 0);
}

TEST(Embedding, OddCycleHasNoEmbedding) {
  const auto triangle = graph(3, {{0, 1}, {1, 2}, {2, 0}});
  for (int d = 1; d <= 4; ++d) EXPECT_EQ(count_embeddings(triangle, d), 0u);
  EXPECT_EQ(embedding_polynomial(triangle).degree(), -1);
}

TEST(Embedding, RejectsNonSolidAndBadDimension) {
  const auto g = graph(2, {{0, 1}});
  EXPECT_THROW(count_embeddings(g.with_kind(0, EdgeKind::Dashed), 2), std::invalid_argument);
  EXPECT_THROW(count_embeddings(g, 0), std::invalid_argument);
  EXPECT_THROW(embedding_polynomial(g.with_all_kinds(EdgeKind::Wavy)), std::invalid_argument);
}

TEST(Embedding, AgreesWithUnprunedWalkEnumeration) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_topologies(n).entries) {
      const int max_d = t.vertex_count() <= 4 ? 3 : 2;
      for (int d = 1; d <= max_d; ++d) {
        ASSERT_EQ(count_embeddings(t.canonical, d), testing::walk_count(t.canonical, d))
            << t.code << " d=" << d;
      }
    }
  }
}

TEST(Embedding, RingWithEarHasDegreeThree) {
  const auto ring = testing::graph(6, testing::ring_ear_pairs());
  EXPECT_EQ(count_embeddings(ring, 2), testing::walk_count(ring, 2));
  EXPECT_EQ(embedding_polynomial(ring).degree(), 3);
}

TEST(Embedding, PolynomialMissRaisesConsistencyError) {
  const auto g = graph(2, {{0, 1}});
  auto sample = [](int d) { return static_cast<std::uint64_t>(2 * d); };
  auto wrong = [](int d) { return static_cast<std::uint64_t>(2 * d + 1); };
  EXPECT_THROW(embedding_polynomial(g, sample, wrong), ConsistencyError);
}

TEST(EmbeddingCache, SecondCounterHitsTheCacheWithSameResult) {
  const auto dir = fresh_dir("warm");
  const auto g = graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  DimPoly cold_poly, warm_poly;
  {
    EmbeddingCounter cold(std::make_shared<EmbeddingCache>(dir));
    cold_poly = cold.polynomial(g);
    EXPECT_EQ(cold.cache_hits(), 0u);
  }
  EmbeddingCounter warm(std::make_shared<EmbeddingCache>(dir));
  warm_poly = warm.polynomial(g);
  EXPECT_EQ(warm_poly, cold_poly);
  EXPECT_GT(warm.cache_hits(), 0u);
  // the two self-check points are always recounted
  EXPECT_EQ(warm.brute_force_runs(), 2u);
}

TEST(EmbeddingCache, ConflictingLinesAreAConsistencyError) {
  const auto dir = fresh_dir("conflict");
  std::filesystem::create_directories(dir);
  const std::string file = (dir / ("embedding-counts-" + std::string(kGeneratorVersion) + ".jsonl")).string();
  {
    std::ofstream out(file);
    out << R"({"hash":"abc","d":2,"count":4})" << '\n' << R"({"hash":"abc","d":2,"count":5})" << '\n';
  }
  EXPECT_THROW(EmbeddingCache{dir}, ConsistencyError);
}

TEST(EmbeddingCache, TornLineIsIgnored) {
  const auto dir = fresh_dir("torn");
  std::filesystem::create_directories(dir);
  const std::string file = (dir / ("embedding-counts-" + std::string(kGeneratorVersion) + ".jsonl")).string();
  {
    std::ofstream out(file);
    out << R"({"hash":"abc","d":2,"count":4})" << '\n' << R"({"hash":"ab)";
  }
  EmbeddingCache cache(dir);
  EXPECT_EQ(cache.size(), 1u);
  EXPECT_EQ(cache.lookup("abc", 2), std::optional<std::uint64_t>(4));
}

TEST(EmbeddingCache, WrongCachedCountIsCaughtBySelfCheck) {
  const auto dir = fresh_dir("poisoned");
  const auto g = graph(2, {{0, 1}});
  {
    EmbeddingCache cache(dir);
    cache.store(EmbeddingCountRecord{topology_hash(g), 1, 3, "bruteforce"});
  }
  EmbeddingCounter counter(std::make_shared<EmbeddingCache>(dir));
  EXPECT_THROW(counter.polynomial(g), ConsistencyError);
}

}  // namespace
}  // namespace dimerk
