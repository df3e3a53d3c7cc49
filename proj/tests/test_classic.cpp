#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skyq/classic.hpp"
#include "skyq/error.hpp"

using namespace skyq;
using skyq::testing::d1;
using skyq::testing::ids;

TEST(Pareto, Basics) {
  const std::vector<double> b{2, 2}, d{4, 4}, a{1, 5};
  EXPECT_TRUE(paretoDominates(b, d));
  EXPECT_FALSE(paretoDominates(d, b));
  EXPECT_FALSE(paretoDominates(a, b));
  EXPECT_FALSE(paretoDominates(b, b));
}

TEST(Skyline, D1) { EXPECT_EQ(skyline(d1()), ids({"a", "b", "c"})); }

TEST(Skyline, EmptyAndDuplicates) {
  EXPECT_TRUE(skyline(Dataset({"a1"}, {})).empty());
  const Dataset dup({"a1", "a2"}, {{"x", {1, 1}}, {"y", {1, 1}}, {"z", {2, 2}}});
  EXPECT_EQ(skyline(dup), ids({"x", "y"}));
}

TEST(Skyline, MatchesBruteForce) {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 50; ++rep) {
    const Dataset ds = skyq::testing::randomDataset(rng, 150, 2 + rep % 4);
    EXPECT_EQ(skyline(ds), oracle::skyline(ds));
  }
}

TEST(Skyband, D1) {
  EXPECT_EQ(kSkyband(d1(), 1), ids({"a", "b", "c"}));
  EXPECT_EQ(kSkyband(d1(), 2), ids({"a", "b", "c", "e"}));
  EXPECT_EQ(kSkyband(d1(), 3), d1().ids());
  EXPECT_THROW(kSkyband(d1(), 0), InvalidArgument);
}

TEST(Skyband, MonotoneAndBruteForce) {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 30; ++rep) {
    const Dataset ds = skyq::testing::randomDataset(rng, 100, 3);
    IdSet prev;
    for (std::size_t k = 1; k <= 5; ++k) {
      const IdSet band = kSkyband(ds, k);
      EXPECT_EQ(band, oracle::skyband(ds, k));
      EXPECT_TRUE(skyq::testing::subset(prev, band));
      prev = band;
    }
  }
}

TEST(TopK, D1WithTies) {
  const std::vector<double> w{0.5, 0.5};
  const RankedResult r = topK(d1(), w, 3);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r.ids(), (std::vector<std::string>{"b", "a", "c"}));
  EXPECT_DOUBLE_EQ(r.entries[0].score, 2.0);
  EXPECT_DOUBLE_EQ(r.entries[1].score, 3.0);
  EXPECT_DOUBLE_EQ(r.entries[2].score, 3.0);
}

TEST(TopK, Errors) {
  const std::vector<double> w{0.5, 0.5};
  EXPECT_THROW(topK(d1(), w, 0), InvalidArgument);
  const std::vector<double> off{0.7, 0.7};
  EXPECT_THROW(topK(d1(), off, 1), InvalidArgument);
  const std::vector<double> neg{1.5, -0.5};
  EXPECT_THROW(topK(d1(), neg, 1), InvalidArgument);
  EXPECT_EQ(topK(d1(), w, 10).size(), 5u);
}

TEST(Threshold, D1) {
  const std::vector<double> w{0.5, 0.5};
  const auto r = topKThreshold(d1(), w, 1);
  ASSERT_EQ(r.result.size(), 1u);
  EXPECT_EQ(r.result.entries[0].id, "b");
  EXPECT_DOUBLE_EQ(r.result.entries[0].score, 2.0);
}

TEST(Threshold, AgreesWithTopKAndBruteForce) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> kd(1, 10);
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const Dataset ds = skyq::testing::randomDataset(rng, 60, d);
    const auto w = skyq::testing::randomSimplexPoint(rng, d);
    const std::size_t k = kd(rng);
    const RankedResult a = topK(ds, w, k);
    const auto b = topKThreshold(ds, w, k);
    EXPECT_EQ(a.ids(), b.result.ids());
    EXPECT_LE(b.fullyScored, ds.size());
    const auto ref = oracle::topK(ds, w, k);
    ASSERT_EQ(a.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      EXPECT_EQ(a.entries[i].id, ref[i].first);
      EXPECT_NEAR(a.entries[i].score, ref[i].second, 1e-12);
    }
  }
}
