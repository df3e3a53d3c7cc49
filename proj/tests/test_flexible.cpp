#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skyq/classic.hpp"
#include "skyq/error.hpp"
#include "skyq/flexible.hpp"

using namespace skyq;
using skyq::testing::d1;
using skyq::testing::ids;
using skyq::testing::subset;

namespace {

// v1 >= 3 v2
const WeightRegion kR = WeightRegion(2).with({{-1, 3}, Relation::LessEqual, 0});

const Tuple& tupleOf(const Dataset& ds, const std::string& id) { return ds.tuples()[*ds.indexOf(id)]; }

}  // namespace

TEST(Preference, ConstraintFromPair) {
  const LinearConstraint c = constraintFromPreference(Tuple{"x", {1, 2}}, Tuple{"y", {3, 1}});
  EXPECT_EQ(c.coeffs, (std::vector<double>{-2, 1}));
  EXPECT_EQ(c.relation, Relation::Less);
  EXPECT_EQ(c.rhs, 0.0);
  EXPECT_THROW(constraintFromPreference(Tuple{"x", {1, 2}}, Tuple{"y", {1, 2}}), InvalidArgument);
}

TEST(Preference, ElicitedRegionKeepsPreferredAhead) {
  const Dataset ds = d1();
  // prefer a over b: strict half-space, so b can never beat a inside it
  const WeightRegion r = WeightRegion::simplex(2).with(
      constraintFromPreference(tupleOf(ds, "a"), tupleOf(ds, "b")));
  for (const auto& v : oracle::lattice(r, 200))
    if (contains(r, v)) EXPECT_LT(oracle::dot(v, tupleOf(ds, "a").attrs), oracle::dot(v, tupleOf(ds, "b").attrs));
}

TEST(FDominance, D1) {
  const Dataset ds = d1();
  EXPECT_TRUE(fDominates(tupleOf(ds, "a"), tupleOf(ds, "b"), kR));
  EXPECT_FALSE(fDominates(tupleOf(ds, "b"), tupleOf(ds, "a"), kR));
  EXPECT_FALSE(fDominates(tupleOf(ds, "a"), tupleOf(ds, "a"), kR));
}

TEST(Nd, D1) {
  EXPECT_EQ(nd(d1(), WeightRegion::simplex(2)), ids({"a", "b", "c"}));
  EXPECT_EQ(nd(d1(), kR), ids({"a"}));
}

TEST(Po, D1) {
  EXPECT_EQ(po(d1(), WeightRegion::simplex(2)), ids({"a", "b", "c"}));
  EXPECT_EQ(po(d1(), kR), ids({"a"}));
  // b ties a at v1 = 0.75, which only counts under weak optimality
  EXPECT_EQ(po(d1(), kR, Optimality::Weak), ids({"a", "b"}));
}

TEST(Nd, EmptyRegionThrows) {
  const WeightRegion empty = kR.with({{1, 0}, Relation::LessEqual, 0.5});
  EXPECT_THROW(nd(d1(), empty), EmptyRegion);
  EXPECT_THROW(po(d1(), empty), EmptyRegion);
}

TEST(Nd, FullSimplexEqualsSkyline) {
  std::mt19937_64 rng(20);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const Dataset ds = skyq::testing::randomDataset(rng, 80, d);
    EXPECT_EQ(nd(ds, WeightRegion::simplex(d)), oracle::skyline(ds));
  }
}

TEST(Chain, PoNdSkyOnRandomPolytopes) {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const Dataset ds = skyq::testing::randomDataset(rng, 60, d);
    const WeightRegion r = skyq::testing::randomPolytope(rng, d);
    const IdSet p = po(ds, r), n = nd(ds, r), s = skyline(ds);
    EXPECT_TRUE(subset(p, n)) << rep;
    EXPECT_TRUE(subset(n, s)) << rep;
    EXPECT_FALSE(p.empty());
  }
}

TEST(Nd, AntiMonotoneUnderShrinkage) {
  std::mt19937_64 rng(22);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const Dataset ds = skyq::testing::randomDataset(rng, 60, d);
    const auto anchor = skyq::testing::randomSimplexPoint(rng, d);
    const WeightRegion outer = skyq::testing::addRandomConstraints(rng, WeightRegion::simplex(d), anchor, 1);
    const WeightRegion inner = skyq::testing::addRandomConstraints(rng, outer, anchor, 2);
    EXPECT_TRUE(subset(nd(ds, inner), nd(ds, outer)));
  }
}

TEST(Nd, AgreesWithIntervalReference) {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 60; ++rep) {
    const Dataset ds = skyq::testing::randomDataset(rng, 25, 2);
    const WeightRegion r = skyq::testing::latticeInterval(rng, 400);
    const auto [a, b] = intervalOf(r);
    EXPECT_EQ(nd(ds, r), oracle::intervalNd(ds, a, b));
    EXPECT_EQ(po(ds, r), oracle::intervalPo(ds, a, b));
  }
}

TEST(Po, SingletonBallIsTopOne) {
  std::mt19937_64 rng(24);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const Dataset ds = skyq::testing::randomDataset(rng, 40, d);
    const auto w = skyq::testing::randomSimplexPoint(rng, d);
    const IdSet got = po(ds, WeightRegion::ball(w, 0.0));
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(*got.begin(), oracle::topK(ds, w, 1)[0].first);
  }
}
