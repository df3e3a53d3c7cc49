#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skyq/classic.hpp"
#include "skyq/error.hpp"
#include "skyq/flexible.hpp"
#include "skyq/utk.hpp"

using namespace skyq;
using skyq::testing::d1;
using skyq::testing::ids;

namespace {
const WeightRegion kP = WeightRegion::interval(0.2, 0.3);
}

TEST(Breakpoints, D1) {
  const auto bs = orderBreakpoints(d1(), 0.2, 0.3);
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_NEAR(bs[0], 0.25, 1e-12);
  EXPECT_EQ(orderBreakpoints(d1(), kP), bs);
  // (b, c): (2 - 1) / ((2 - 1) - (2 - 5)) = 0.25 by hand
  EXPECT_NEAR(*oracle::crossing({2, 2}, {5, 1}), 0.25, 1e-15);
}

TEST(Breakpoints, MatchPairwiseCrossings) {
  std::mt19937_64 rng(40);
  for (int rep = 0; rep < 30; ++rep) {
    const Dataset ds = skyq::testing::randomDataset(rng, 15, 2);
    auto want = oracle::intervalCandidates(ds, 0.1, 0.9);
    want.erase(want.begin());
    want.pop_back();
    const auto got = orderBreakpoints(ds, 0.1, 0.9);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-12);
  }
}

TEST(Utk1, D1) {
  const Utk1Result one = utk1(d1(), 1, kP);
  EXPECT_EQ(one.ids, ids({"b", "c"}));
  EXPECT_TRUE(one.exact);
  EXPECT_EQ(utk1(d1(), 2, kP).ids, ids({"b", "c"}));
}

TEST(Utk2, D1) {
  const auto one = utk2(d1(), 1, kP);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_NEAR(one[0].lo, 0.2, 1e-12);
  EXPECT_NEAR(one[0].hi, 0.25, 1e-12);
  EXPECT_EQ(one[0].label, ids({"c"}));
  EXPECT_NEAR(one[1].lo, 0.25, 1e-12);
  EXPECT_NEAR(one[1].hi, 0.3, 1e-12);
  EXPECT_EQ(one[1].label, ids({"b"}));

  const auto two = utk2(d1(), 2, kP);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].label, ids({"b", "c"}));
  EXPECT_NEAR(two[0].lo, 0.2, 1e-12);
  EXPECT_NEAR(two[0].hi, 0.3, 1e-12);
  // ranked labels split at the swap
  EXPECT_EQ(utk2(d1(), 2, kP, CellLabel::Order).size(), 2u);
}

TEST(Utk, Errors) {
  EXPECT_THROW(utk1(d1(), 0, kP), InvalidArgument);
  EXPECT_THROW(utk1(d1(), 1, WeightRegion::ball({0.5, 0.5}, 0.1)), InvalidArgument);
  const WeightRegion empty = kP.with({{1, 0}, Relation::LessEqual, 0.1});
  EXPECT_THROW(utk2(d1(), 1, empty), EmptyRegion);
}

TEST(Utk2, CellsAreSoundAndCover) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::size_t> kd(1, 3);
  for (int rep = 0; rep < 40; ++rep) {
    const Dataset ds = skyq::testing::randomDataset(rng, 20, 2);
    const WeightRegion r = skyq::testing::latticeInterval(rng, 100);
    const auto [lo, hi] = intervalOf(r);
    const std::size_t k = kd(rng);
    const auto cells = utk2(ds, k, r);
    ASSERT_FALSE(cells.empty());
    EXPECT_NEAR(cells.front().lo, lo, 1e-12);
    EXPECT_NEAR(cells.back().hi, hi, 1e-12);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) {
        EXPECT_EQ(cells[i].lo, cells[i - 1].hi);
        EXPECT_NE(cells[i].label, cells[i - 1].label);
      }
      for (int s = 1; s < 10; ++s) {
        const double x = cells[i].lo + (cells[i].hi - cells[i].lo) * s / 10.0;
        const std::vector<double> w{x, 1 - x};
        IdSet want;
        for (const auto& [id, score] : oracle::topK(ds, w, k)) want.insert(id);
        EXPECT_EQ(cells[i].label, want) << "cell " << i << " x " << x;
      }
    }
  }
}

TEST(Utk1, EqualsPoForTopOne) {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 50; ++rep) {
    const Dataset ds = skyq::testing::randomDataset(rng, 30, 2);
    const WeightRegion r = skyq::testing::latticeInterval(rng, 200);
    const auto [a, b] = intervalOf(r);
    EXPECT_EQ(utk1(ds, 1, r).ids, po(ds, r));
    EXPECT_EQ(utk1(ds, 1, r).ids, oracle::intervalPo(ds, a, b));
  }
}

TEST(Utk, SampledInHigherDimensions) {
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t d = 3 + rep % 2;
    const Dataset ds = skyq::testing::randomDataset(rng, 30, d);
    const WeightRegion r = skyq::testing::randomPolytope(rng, d);
    const Utk1Result u = utk1(ds, 2, r);
    EXPECT_FALSE(u.exact);
    const auto cells = utk2(ds, 2, r);
    IdSet all;
    for (const auto& cell : cells) {
      EXPECT_FALSE(cell.exact);
      EXPECT_EQ(cell.kind, PartitionCell::Kind::SampleCloud);
      ASSERT_FALSE(cell.samples.empty());
      for (const auto& v : cell.samples) {
        EXPECT_TRUE(containsClosure(r, v, 1e-7));
        IdSet want;
        for (const auto& [id, score] : oracle::topK(ds, v, 2)) want.insert(id);
        EXPECT_EQ(cell.label, want);
      }
      all.insert(cell.label.begin(), cell.label.end());
    }
    EXPECT_EQ(all, u.ids);
    // every sampled top-1 winner is strictly optimal somewhere
    EXPECT_TRUE(skyq::testing::subset(utk1(ds, 1, r).ids, po(ds, r, Optimality::Weak)));
  }
}
